#include "pacs/measures.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "pacs/gamma.hpp"
#include "pacs/states.hpp"

namespace pacs {

namespace {

bool finite_support(const SipSystem& sys) {
  return sys.family == Family::CType || sys.family == Family::AType2;
}

// Family scale factor multiplying x^m G(...) in W_m.
double log_density_prefactor(const SipSystem& sys, int m) {
  const double dm = m;
  switch (sys.family) {
  case Family::DType:
    return (dm + 1.0) * std::log(sys.c * sys.c / sys.gamma);
  case Family::CType:
    return log_gamma(dm - sys.rho) - dm * std::log(sys.gamma);
  case Family::AType1:
    return -2.0 * dm * std::log(sys.kappa) +
           (2.0 * sys.rho - 3.0) * std::numbers::ln2 -
           0.5 * std::log(std::numbers::pi);
  case Family::AType2:
    return log_gamma(2.0 * dm + sys.nu + 1.0) -
           2.0 * dm * std::log(sys.kappa);
  }
  return 0.0;
}

} // namespace

MeijerGSpec weight_g_spec(const SipSystem& sys, int m) {
  sys.validate();
  if (m < 0)
    throw std::invalid_argument("weight_g_spec: m must be >= 0");
  // The x^m factor of the density is absorbed into the parameters by the
  // multiplication formula, which keeps the rightmost pole at s = 0 and
  // the contour magnitudes bounded for every m.
  const double dm = m;
  MeijerGSpec spec;
  switch (sys.family) {
  case Family::DType:
    spec.a = {dm};
    spec.b = {0.0, 0.0};
    spec.arg_scale = sys.c * sys.c / sys.gamma;
    break;
  case Family::CType:
    spec.a = {dm, dm - sys.rho - 1.0};
    spec.b = {0.0, 0.0};
    break;
  case Family::AType1: {
    const double r = sys.rho;
    spec.a = {dm, 2.0 * r + 2.0 * dm - 1.0, 2.0 * r + 2.0 * dm - 1.0};
    spec.b = {0.0, 0.0, 2.0 * r + dm - 1.0, r + dm - 1.0, r + dm - 0.5};
    spec.arg_scale = 0.25;
    break;
  }
  case Family::AType2:
    spec.a = {dm, 2.0 * dm + sys.nu, 2.0 * dm + sys.nu};
    spec.b = {0.0, 0.0, dm + sys.nu};
    break;
  }
  return spec;
}

double moment_density(const SipSystem& sys, int m, double x,
                      const ContourConfig& contour) {
  if (!(x > 0.0))
    throw std::domain_error("moment_density: x must be positive");
  if (finite_support(sys) && x >= 1.0)
    throw std::domain_error(
        "moment_density: x outside the (0,1) support of this family");
  const MeijerGSpec spec = weight_g_spec(sys, m);
  const SeriesResult g = meijer_g_q0(spec, x, contour);
  if (!g.converged)
    throw std::runtime_error(
        "moment_density: Mellin-Barnes contour integral did not converge");
  return std::exp(log_density_prefactor(sys, m)) * g.value.real();
}

double weight(const SipSystem& sys, int m, double x,
              const ContourConfig& contour) {
  // omega_m = S(x) W_m(x) / pi with S the Gram series (= 1/N_m^2).
  const double w = moment_density(sys, m, x, contour);
  const SeriesResult s = gram_series(sys, m, x);
  if (!s.converged)
    throw std::runtime_error("weight: normalization series did not converge");
  return s.value.real() * w / std::numbers::pi;
}

std::vector<QuadResult> moments(const SipSystem& sys, int m, int k_max,
                                QuadratureConfig quad,
                                const ContourConfig& contour) {
  sys.validate();
  if (m < 0 || k_max < 0)
    throw std::invalid_argument("moments: m and k_max must be >= 0");
  quad.endpoint_strategy = finite_support(sys)
                               ? EndpointStrategy::finite_support
                               : EndpointStrategy::exponential_tail;
  ContourConfig ctr = contour;
  ctr.tol = std::min(ctr.tol, 0.01 * quad.rel_tol);
  auto density = [&](double x) {
    return moment_density(sys, m, x, ctr);
  };
  return integrate_moments(density, k_max, quad);
}

double moment_check(const SipSystem& sys, int m, int n, QuadratureConfig quad,
                    const ContourConfig& contour) {
  if (n < 0)
    throw std::invalid_argument("moment_check: n must be >= 0");
  const std::vector<QuadResult> mom = moments(sys, m, n, quad, contour);
  const double target = std::exp(-log_inv_k_sq(sys, n, m));
  return std::abs(mom[static_cast<std::size_t>(n)].value - target) / target;
}

double weight_positivity_scan(const SipSystem& sys, int m,
                              std::span<const double> grid,
                              const ContourConfig& contour) {
  if (grid.empty())
    throw std::invalid_argument("weight_positivity_scan: empty grid");
  double min_value = std::numeric_limits<double>::infinity();
  for (double x : grid)
    min_value = std::min(min_value, weight(sys, m, x, contour));
  return min_value;
}

} // namespace pacs
