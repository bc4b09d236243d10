#pragma once

#include <limits>
#include <vector>

#include "pacs/series.hpp"

namespace pacs {

/// One G^{q,0}_{p,q} instance: all q numerator gammas Gamma(b_j + s),
/// p denominator gammas Gamma(a_j + s), evaluated at (arg_scale * x).
/// Requires q >= p; for q == p the function is supported on (0,1) in the
/// scaled argument and vanishes beyond it.
struct MeijerGSpec {
  std::vector<double> a;
  std::vector<double> b;
  double arg_scale = 1.0;

  int p() const { return static_cast<int>(a.size()); }
  int q() const { return static_cast<int>(b.size()); }
  void validate() const;
};

struct ContourConfig {
  /// Abscissa of the vertical contour; must sit right of every pole of
  /// the Gamma(b_j + s). NaN selects it automatically (and, for q > p,
  /// shifts toward the integrand's saddle to limit cancellation).
  double real_shift = std::numeric_limits<double>::quiet_NaN();
  /// Initial truncation of the contour parameter; doubled until the last
  /// block contributes less than a tenth of the tolerance.
  double im_cutoff = 8.0;
  double tol = 1e-10;
  int max_doublings = 26;
  int max_subdivisions = 6000;
};

/// Numerical Mellin-Barnes evaluation of G^{q,0}_{p,q}(arg_scale*x | a; b).
/// Repeated b parameters (higher-order poles) need no special handling:
/// the contour never touches the poles. Throws std::domain_error for
/// x <= 0 and std::invalid_argument for malformed specs.
SeriesResult meijer_g_q0(const MeijerGSpec& spec, double x,
                         const ContourConfig& contour = {});

} // namespace pacs
