#include "pacs/states.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "pacs/gamma.hpp"
#include "pacs/hypergeometric.hpp"
#include "pacs/measures.hpp"

namespace pacs {

namespace {

std::complex<double> ipow(std::complex<double> z, int k) {
  std::complex<double> acc(1.0, 0.0);
  for (int i = 0; i < k; ++i)
    acc *= z;
  return acc;
}

} // namespace

SeriesResult ladder_moment_series(const SipSystem& sys, int m,
                                  std::complex<double> w, int power,
                                  TruncationPolicy policy) {
  sys.validate();
  if (m < 0)
    throw std::invalid_argument("ladder_moment_series: m must be >= 0");
  const double radius = sys.convergence_radius();
  const double r_sq = std::isinf(radius) ? 0.0 : radius * radius;
  if (!std::isinf(radius) && !(std::abs(w) < r_sq))
    throw std::domain_error(
        "ladder_moment_series: argument outside the convergence disc");
  const double r_asym = std::isinf(radius) ? 0.0 : std::abs(w);

  SeriesResult out;
  std::complex<double> sum(0.0, 0.0);
  std::complex<double> coeff(inv_k_sq(sys, 0, m), 0.0); // w^n / |K_n^m|^2
  int quiet_steps = 0;
  for (int n = 0; n < policy.max_terms; ++n) {
    double ew = 1.0;
    if (power > 0) {
      const double e = energy(sys, n + m);
      ew = (power == 1) ? e : e * e;
    }
    const std::complex<double> term = coeff * ew;
    sum += term;
    out.terms_used = n + 1;
    const std::complex<double> next_coeff =
        coeff * w * inv_k_sq_ratio(sys, n, m);
    double next_ew = 1.0;
    if (power > 0) {
      const double e = energy(sys, n + 1 + m);
      next_ew = (power == 1) ? e : e * e;
    }
    const double next_mag = std::abs(next_coeff) * next_ew;
    const double scale = std::max(1.0, std::abs(sum));
    const double ratio =
        std::abs(term) > 0.0 ? next_mag / std::abs(term) : 0.0;
    const double r = std::min(0.999, std::max(ratio, r_asym));
    const double tail = next_mag / (1.0 - r);
    out.abs_error_estimate = tail;
    if (ratio < 0.9 && tail <= policy.tol * scale)
      ++quiet_steps;
    else
      quiet_steps = 0;
    if (quiet_steps >= 3 || next_mag == 0.0) {
      out.converged = true;
      break;
    }
    coeff = next_coeff;
  }
  out.value = sum;
  return out;
}

SeriesResult gram_series(const SipSystem& sys, int m, std::complex<double> w,
                         TruncationPolicy policy) {
  return ladder_moment_series(sys, m, w, 0, policy);
}

namespace {

// log of the closed-form prefactor multiplying the family's pFq in
// 1/N_m^2 (Gamma form of the n = 0 series weight).
double log_norm_prefactor(const SipSystem& sys, int m) {
  const double dm = m;
  switch (sys.family) {
  case Family::DType:
  case Family::CType:
    return dm * std::log(sys.gamma) + log_gamma(dm + 1.0);
  case Family::AType1:
    return 2.0 * dm * std::log(sys.kappa) + log_gamma(dm + 1.0) +
           log_gamma(2.0 * dm + 2.0 * sys.rho) -
           log_gamma(dm + 2.0 * sys.rho);
  case Family::AType2:
    return 2.0 * dm * std::log(sys.kappa) + log_gamma(dm + 1.0) +
           log_gamma(2.0 * dm + sys.nu + 1.0) -
           log_gamma(dm + sys.nu + 1.0);
  }
  return 0.0;
}

// The family's closed hypergeometric factor of 1/N_m^2.
double norm_pfq(const SipSystem& sys, int m, double x) {
  const double dm = m;
  switch (sys.family) {
  case Family::DType:
    return pfq_real({dm + 1.0}, {1.0}, sys.c * sys.c * x / sys.gamma);
  case Family::CType:
    return pfq_real({dm - sys.rho, dm + 1.0}, {1.0}, x);
  case Family::AType1: {
    const double r = sys.rho;
    return pfq_real({dm + 1.0, 2.0 * dm + 2.0 * r, 2.0 * dm + 2.0 * r},
                    {1.0, dm + r, dm + 2.0 * r, dm + r + 0.5}, 0.25 * x);
  }
  case Family::AType2: {
    const double n1 = sys.nu + 1.0;
    return pfq_real({dm + 1.0, 2.0 * dm + n1, 2.0 * dm + n1},
                    {1.0, dm + n1}, x);
  }
  }
  return 0.0;
}

} // namespace

double normalization(const SipSystem& sys, int m, double x,
                     EvalMethod method) {
  sys.validate();
  if (m < 0 || !(x >= 0.0))
    throw std::invalid_argument("normalization: needs m >= 0 and x >= 0");
  if (method == EvalMethod::series) {
    const SeriesResult s = gram_series(sys, m, x);
    if (!s.converged)
      throw std::runtime_error("normalization: series did not converge");
    return 1.0 / std::sqrt(s.value.real());
  }
  const double f = norm_pfq(sys, m, x);
  return std::exp(-0.5 * (log_norm_prefactor(sys, m) + std::log(f)));
}

std::complex<double> state_coefficient(const PacsPoint& point, int n) {
  point.validate();
  if (n < 0)
    throw std::invalid_argument("state_coefficient: n must be >= 0");
  const SipSystem& sys = point.system;
  const double x = std::norm(point.z);
  if (point.z == std::complex<double>(0.0, 0.0) && n > 0)
    return {0.0, 0.0};
  const double log_n = std::log(normalization(sys, point.m, x));
  const double log_z_pow = n == 0 ? 0.0 : n * std::log(std::abs(point.z));
  const double log_mag =
      log_n + log_z_pow + 0.5 * log_inv_k_sq(sys, n, point.m);
  const double phase =
      n * std::arg(point.z) - k_phase(sys, n) -
      ((sys.family == Family::DType && sys.c < 0.0 && n % 2 == 1)
           ? std::numbers::pi
           : 0.0);
  return std::polar(std::exp(log_mag), phase);
}

std::complex<double> fock_amplitude(const PacsPoint& point, int j) {
  if (j < point.m)
    return {0.0, 0.0};
  return state_coefficient(point, j - point.m);
}

std::complex<double> inner_product(const SipSystem& sys,
                                   std::complex<double> z1, int m1,
                                   std::complex<double> z2, int m2,
                                   TruncationPolicy policy) {
  sys.validate();
  if (m1 < 0 || m2 < 0)
    throw std::invalid_argument("inner_product: m must be >= 0");
  if (m1 < m2)
    return std::conj(inner_product(sys, z2, m2, z1, m1, policy));
  const double radius = sys.convergence_radius();
  if (!(std::abs(z1) < radius) || !(std::abs(z2) < radius))
    throw std::domain_error("inner_product: point outside the domain");

  const int delta = m1 - m2;
  const std::complex<double> w = std::conj(z2) * z1;
  const double r_asym = std::isinf(radius) ? 0.0 : std::abs(w);
  const double log_w = std::abs(w) > 0.0
                           ? std::log(std::abs(w))
                           : -std::numeric_limits<double>::infinity();

  std::complex<double> sum(0.0, 0.0);
  int quiet_steps = 0;
  double prev_mag = 0.0;
  for (int n = 0; n < policy.max_terms; ++n) {
    const double log_mag = (n == 0 && std::abs(w) == 0.0 ? 0.0 : n * log_w) +
                           0.5 * (log_inv_k_sq(sys, n + delta, m2) +
                                  log_inv_k_sq(sys, n, m1));
    const double phase =
        n * std::arg(w) + k_phase(sys, n + delta) - k_phase(sys, n);
    const std::complex<double> term = std::polar(std::exp(log_mag), phase);
    sum += term;
    const double mag = std::abs(term);
    if (n > 0) {
      const double ratio = prev_mag > 0.0 ? mag / prev_mag : 0.0;
      const double r = std::min(0.999, std::max(ratio, r_asym));
      const double tail = mag * r / (1.0 - r);
      if (ratio < 0.9 && tail <= policy.tol * std::max(1.0, std::abs(sum)))
        ++quiet_steps;
      else
        quiet_steps = 0;
      if (quiet_steps >= 3)
        break;
    }
    if (std::abs(w) == 0.0)
      break; // only the n = 0 term survives
    prev_mag = mag;
  }

  const double n1 = normalization(sys, m1, std::norm(z1));
  const double n2 = normalization(sys, m2, std::norm(z2));
  const std::complex<double> pre =
      n1 * n2 * ipow(std::conj(z2), delta);
  return pre * sum;
}

std::complex<double> inner_product_closed(const SipSystem& sys,
                                          std::complex<double> z1, int m1,
                                          std::complex<double> z2, int m2) {
  sys.validate();
  if (m1 < m2)
    return std::conj(inner_product_closed(sys, z2, m2, z1, m1));
  const int delta = m1 - m2;
  const double dm1 = m1, dm2 = m2, dd = delta;
  const std::complex<double> w = std::conj(z2) * z1;
  const double n1 = normalization(sys, m1, std::norm(z1));
  const double n2 = normalization(sys, m2, std::norm(z2));
  std::complex<double> pre =
      n1 * n2 * ipow(std::conj(z2), delta);
  std::complex<double> f(0.0, 0.0);
  switch (sys.family) {
  case Family::DType: {
    pre *= std::pow(sys.c, delta) * std::pow(sys.gamma, m2) *
           gamma_ratio({dm1 + 1.0}, {dd + 1.0});
    f = pfq({dm1 + 1.0}, {dd + 1.0}, sys.c * sys.c * w / sys.gamma).value;
    break;
  }
  case Family::CType: {
    pre *= std::pow(sys.gamma, 0.5 * (dm1 + dm2)) *
           gamma_ratio({dm1 + 1.0}, {dd + 1.0}) *
           std::sqrt(gamma_ratio({dm1 - sys.rho}, {dm2 - sys.rho})) *
           std::polar(1.0, sys.alpha * dd * sys.gamma);
    f = pfq({dm1 - sys.rho, dm1 + 1.0}, {dd + 1.0}, w).value;
    break;
  }
  case Family::AType1: {
    const double r = sys.rho;
    pre *= std::pow(sys.kappa, m1 + m2) *
           gamma_ratio({dm1 + 1.0, dm1 + dm2 + 2.0 * r},
                       {dd + 1.0, dm1 + 2.0 * r});
    f = pfq({dm1 + 1.0, 2.0 * dm1 + 2.0 * r, dm1 + dm2 + 2.0 * r},
            {dd + 1.0, dm1 + r, dm1 + r + 0.5, dm1 + 2.0 * r}, 0.25 * w)
            .value;
    break;
  }
  case Family::AType2: {
    if (sys.alpha != 0.0)
      throw std::invalid_argument(
          "inner_product_closed: A-type-2 closed form needs alpha = 0");
    const double n1v = sys.nu + 1.0;
    pre *= std::pow(sys.kappa, m1 + m2) *
           gamma_ratio({dm1 + 1.0, dm1 + dm2 + n1v, 2.0 * dm1 + n1v},
                       {dd + 1.0, dm1 + n1v}) /
           std::sqrt(gamma_ratio({2.0 * dm1 + n1v, 2.0 * dm2 + n1v}, {}));
    f = pfq({dm1 + 1.0, 2.0 * dm1 + n1v, dm1 + dm2 + n1v},
            {dd + 1.0, dm1 + n1v}, w)
            .value;
    break;
  }
  }
  return pre * f;
}

std::complex<double> kernel(const SipSystem& sys, int m,
                            std::complex<double> z, std::complex<double> zp) {
  const double nz = normalization(sys, m, std::norm(z));
  const double nzp = normalization(sys, m, std::norm(zp));
  const SeriesResult s = gram_series(sys, m, std::conj(z) * zp);
  return nz * nzp * s.value;
}

double kernel_idempotence_check(const SipSystem& sys, int m,
                                std::complex<double> z,
                                std::complex<double> zp,
                                const QuadratureConfig& quad) {
  const std::complex<double> target = kernel(sys, m, z, zp);
  const std::complex<double> w = std::conj(z) * zp;

  // Truncation order: where the Gram series of w itself has converged.
  TruncationPolicy pol;
  pol.tol = 1e-13;
  const SeriesResult gram = gram_series(sys, m, w, pol);
  const int k_max = std::max(8, gram.terms_used + 4);

  QuadratureConfig cfg = quad;
  cfg.endpoint_strategy = std::isinf(sys.convergence_radius())
                              ? EndpointStrategy::exponential_tail
                              : EndpointStrategy::finite_support;
  const std::vector<QuadResult> mom = moments(sys, m, k_max, cfg);

  std::complex<double> series_sum(0.0, 0.0);
  std::complex<double> wn(1.0, 0.0);
  for (int k = 0; k <= k_max; ++k) {
    const double ck = inv_k_sq(sys, k, m);
    series_sum += ck * ck * wn * mom[static_cast<std::size_t>(k)].value;
    wn *= w;
  }
  const double nz = normalization(sys, m, std::norm(z));
  const double nzp = normalization(sys, m, std::norm(zp));
  const std::complex<double> integral = nz * nzp * series_sum;
  return std::abs(integral - target) / std::abs(target);
}

} // namespace pacs
