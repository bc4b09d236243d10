#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace pacs {

enum class EndpointStrategy {
  finite_support,          // support (0,1), integrable endpoint singularities
  power_singularity_split, // singular lower endpoint, regular finite upper
  exponential_tail         // singular lower endpoint, decaying tail to +inf
};

struct QuadratureConfig {
  double rel_tol = 1e-9;
  double abs_tol = 1e-14;
  int max_subdivisions = 4000;
  EndpointStrategy endpoint_strategy = EndpointStrategy::exponential_tail;
};

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;
  bool converged = false;
  int evaluations = 0;
};

/// 15-point Gauss-Kronrod rule on [a,b] with embedded 7-point error
/// estimate (QUADPACK style).
QuadResult gk15(const std::function<double(double)>& f, double a, double b);

struct ComplexQuadResult {
  std::complex<double> value{0.0, 0.0};
  double abs_error = 0.0;
  bool converged = false;
  int evaluations = 0;
};

ComplexQuadResult gk15_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b);

/// Adaptive bisection over a finite interval.
QuadResult integrate(const std::function<double(double)>& f, double a,
                     double b, const QuadratureConfig& cfg = {});

/// Simultaneous integrals  I_k = int_0^R x^k density(x) dx,  k = 0..k_max,
/// where R = 1 (finite_support) or R = +inf (exponential_tail), and the
/// density may be unbounded (but integrable) at x -> 0+ and, for finite
/// support, at x -> 1-.  Endpoints are handled by the substitutions
/// x = s*exp(-t) (lower) and x = 1-(1-s)exp(-u) or x = s*exp(u) (upper);
/// the density is evaluated once per node and shared across all k.
std::vector<QuadResult> integrate_moments(
    const std::function<double(double)>& density, int k_max,
    const QuadratureConfig& cfg);

} // namespace pacs
