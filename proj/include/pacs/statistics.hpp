#pragma once

#include "pacs/systems.hpp"

namespace pacs {

enum class StatsMethod { generic, closed };

struct StatsReport {
  double mean_n = 0.0;
  double mean_n2 = 0.0;
  double mandel_q = 0.0;
  double g2 = 0.0;
  StatsMethod method = StatsMethod::generic;
};

/// Photon number distribution P_n, the probability of eigenstate n in
/// the state; 0 for n < m. `closed` uses the per-family Gamma form.
double pnd(const PacsPoint& point, int n,
           StatsMethod method = StatsMethod::generic);

/// <N> and <N^2> where N = H - E_0, so the weights are the ladder
/// energies E_{n+m}. Closed forms carry a lower hypergeometric
/// parameter equal to m and are rejected for m = 0 (use generic there).
double mean_n(const PacsPoint& point, StatsMethod method = StatsMethod::generic);
double mean_n2(const PacsPoint& point,
               StatsMethod method = StatsMethod::generic);

/// Q = (<N^2> - <N>^2)/<N> - 1 and g2 = (<N^2> - <N>)/<N>^2.
/// Undefined (throws) when <N> = 0, i.e. m = 0 and z = 0.
double mandel_q(const PacsPoint& point,
                StatsMethod method = StatsMethod::generic);
double g2(const PacsPoint& point, StatsMethod method = StatsMethod::generic);

StatsReport stats_report(const PacsPoint& point,
                         StatsMethod method = StatsMethod::generic);

} // namespace pacs
