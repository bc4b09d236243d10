#pragma once

#include <span>
#include <vector>

#include "pacs/meijer_g.hpp"
#include "pacs/quadrature.hpp"
#include "pacs/systems.hpp"

namespace pacs {

/// The G^{q,0} density spec of the family's moment density (exposed so
/// its Mellin moments can be probed directly).
MeijerGSpec weight_g_spec(const SipSystem& sys, int m);

/// W_m(x) = pi N_m^2(x) omega_m(x): the Stieltjes density whose n-th
/// moment equals |K_n^m|^2. Product of the family scale factor, x^m and
/// the G^{q,0} factor evaluated by Mellin-Barnes integration.
double moment_density(const SipSystem& sys, int m, double x,
                      const ContourConfig& contour = {});

/// Resolution-of-identity weight omega_m(x) at x = |z|^2. The
/// normalization-side factor is evaluated as the (algebraically
/// identical) hypergeometric series, never as a contour integral at
/// negative argument.
double weight(const SipSystem& sys, int m, double x,
              const ContourConfig& contour = {});

/// int_0^R x^k W_m(x) dx for k = 0..k_max on shared panels
/// (R = 1 or infinity according to the family's support).
std::vector<QuadResult> moments(const SipSystem& sys, int m, int k_max,
                                QuadratureConfig quad = {},
                                const ContourConfig& contour = {});

/// Relative residual |int x^n W_m dx - |K_n^m|^2| / |K_n^m|^2.
double moment_check(const SipSystem& sys, int m, int n,
                    QuadratureConfig quad = {},
                    const ContourConfig& contour = {});

/// Minimum of omega_m over the grid (positivity probe).
double weight_positivity_scan(const SipSystem& sys, int m,
                              std::span<const double> grid,
                              const ContourConfig& contour = {});

} // namespace pacs
