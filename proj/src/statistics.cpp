#include "pacs/statistics.hpp"

#include <cmath>
#include <stdexcept>

#include "pacs/gamma.hpp"
#include "pacs/hypergeometric.hpp"
#include "pacs/states.hpp"

namespace pacs {

namespace {

struct Moments {
  double n1; // <N>
  double n2; // <N^2>
};

Moments generic_moments(const PacsPoint& point) {
  const double x = std::norm(point.z);
  const SeriesResult s0 = ladder_moment_series(point.system, point.m, x, 0);
  const SeriesResult s1 = ladder_moment_series(point.system, point.m, x, 1);
  const SeriesResult s2 = ladder_moment_series(point.system, point.m, x, 2);
  if (!s0.converged || !s1.converged || !s2.converged)
    throw std::runtime_error("statistics: moment series did not converge");
  return {s1.value.real() / s0.value.real(),
          s2.value.real() / s0.value.real()};
}

// The paper-form pFq ratios, prefactored by E_m. The denominator list
// contains m itself, so these forms are singular at m = 0.
Moments closed_moments(const PacsPoint& point) {
  const SipSystem& sys = point.system;
  const int m = point.m;
  if (m < 1)
    throw std::domain_error(
        "statistics: closed-form moments need m >= 1 (lower parameter m "
        "vanishes); use the generic series for m = 0");
  const double dm = m;
  const double x = std::norm(point.z);
  double den = 0.0, f1 = 0.0, f2 = 0.0, pref = 0.0;
  switch (sys.family) {
  case Family::DType: {
    const double w = sys.c * sys.c * x / sys.gamma;
    den = pfq_real({dm + 1.0}, {1.0}, w);
    f1 = pfq_real({dm + 1.0, dm + 1.0}, {1.0, dm}, w);
    f2 = pfq_real({dm + 1.0, dm + 1.0, dm + 1.0}, {1.0, dm, dm}, w);
    pref = dm * sys.gamma;
    break;
  }
  case Family::CType: {
    const double mr = dm - sys.rho;
    den = pfq_real({mr, dm + 1.0}, {1.0}, x);
    f1 = pfq_real({mr, dm + 1.0, dm + 1.0}, {1.0, dm}, x);
    f2 = pfq_real({mr, dm + 1.0, dm + 1.0, dm + 1.0}, {1.0, dm, dm}, x);
    pref = dm * sys.gamma;
    break;
  }
  case Family::AType1: {
    const double r = sys.rho, w = 0.25 * x;
    const double t = 2.0 * dm + 2.0 * r;
    den = pfq_real({dm + 1.0, t, t}, {1.0, dm + r, dm + 2.0 * r, dm + r + 0.5},
                   w);
    f1 = pfq_real({dm + 1.0, dm + 1.0, t, t, dm + 1.0 + 2.0 * r},
                  {1.0, dm, dm + r, dm + 2.0 * r, dm + 2.0 * r, dm + r + 0.5},
                  w);
    f2 = pfq_real(
        {dm + 1.0, dm + 1.0, dm + 1.0, t, t, dm + 1.0 + 2.0 * r,
         dm + 1.0 + 2.0 * r},
        {1.0, dm, dm, dm + r, dm + 2.0 * r, dm + 2.0 * r, dm + 2.0 * r,
         dm + r + 0.5},
        w);
    pref = sys.kappa * sys.kappa * dm * (dm + 2.0 * r);
    break;
  }
  case Family::AType2: {
    const double n1 = sys.nu + 1.0;
    const double t = 2.0 * dm + n1;
    den = pfq_real({dm + 1.0, t, t}, {1.0, dm + n1}, x);
    f1 = pfq_real({dm + 1.0, dm + 1.0, t, t, dm + n1 + 1.0},
                  {1.0, dm, dm + n1, dm + n1}, x);
    f2 = pfq_real({dm + 1.0, dm + 1.0, dm + 1.0, t, t, dm + n1 + 1.0,
                   dm + n1 + 1.0},
                  {1.0, dm, dm, dm + n1, dm + n1, dm + n1}, x);
    pref = sys.kappa * sys.kappa * dm * (dm + n1);
    break;
  }
  }
  return {pref * f1 / den, pref * pref * f2 / den};
}

Moments moments_of(const PacsPoint& point, StatsMethod method) {
  point.validate();
  return method == StatsMethod::generic ? generic_moments(point)
                                        : closed_moments(point);
}

} // namespace

double pnd(const PacsPoint& point, int n, StatsMethod method) {
  point.validate();
  if (n < 0)
    throw std::invalid_argument("pnd: n must be >= 0");
  const SipSystem& sys = point.system;
  const int m = point.m;
  if (n < m)
    return 0.0;
  const double x = std::norm(point.z);
  const int k = n - m;
  if (x == 0.0)
    return k == 0 ? 1.0 : 0.0;

  if (method == StatsMethod::generic) {
    const SeriesResult s = gram_series(sys, m, x);
    return std::exp(-std::log(s.value.real()) + k * std::log(x) +
                    log_inv_k_sq(sys, k, m));
  }

  // Closed per-family Gamma forms; everything assembled in log space.
  const double dn = n, dm = m, dk = k;
  double log_p = dk * std::log(x) - 2.0 * log_gamma(dk + 1.0);
  switch (sys.family) {
  case Family::DType: {
    const double w = sys.c * sys.c * x / sys.gamma;
    log_p = dk * std::log(w) - 2.0 * log_gamma(dk + 1.0);
    log_p += log_gamma(dn + 1.0) - log_gamma(dm + 1.0) -
             std::log(pfq_real({dm + 1.0}, {1.0}, w));
    break;
  }
  case Family::CType: {
    log_p += log_gamma(dn + 1.0) + log_gamma(dn - sys.rho) -
             log_gamma(dm - sys.rho) - log_gamma(dm + 1.0) -
             std::log(pfq_real({dm - sys.rho, dm + 1.0}, {1.0}, x));
    break;
  }
  case Family::AType1: {
    const double r = sys.rho;
    const double f = pfq_real(
        {dm + 1.0, 2.0 * dm + 2.0 * r, 2.0 * dm + 2.0 * r},
        {1.0, dm + r, dm + 2.0 * r, dm + r + 0.5}, 0.25 * x);
    log_p += log_gamma(dm + 2.0 * r) + log_gamma(dn + 1.0) +
             2.0 * log_gamma(dn + dm + 2.0 * r) -
             log_gamma(2.0 * dm + 2.0 * r) - log_gamma(dm + 1.0) -
             log_gamma(dn + 2.0 * r) - log_gamma(2.0 * dn + 2.0 * r) -
             std::log(f);
    break;
  }
  case Family::AType2: {
    const double n1 = sys.nu + 1.0;
    const double f =
        pfq_real({dm + 1.0, 2.0 * dm + n1, 2.0 * dm + n1}, {1.0, dm + n1}, x);
    log_p += log_gamma(dm + n1) + log_gamma(dn + 1.0) +
             2.0 * log_gamma(dn + dm + n1) - 2.0 * log_gamma(2.0 * dm + n1) -
             log_gamma(dm + 1.0) - log_gamma(dn + n1) - std::log(f);
    break;
  }
  }
  return std::exp(log_p);
}

double mean_n(const PacsPoint& point, StatsMethod method) {
  return moments_of(point, method).n1;
}

double mean_n2(const PacsPoint& point, StatsMethod method) {
  return moments_of(point, method).n2;
}

double mandel_q(const PacsPoint& point, StatsMethod method) {
  const Moments mm = moments_of(point, method);
  if (mm.n1 == 0.0)
    throw std::domain_error("mandel_q: <N> = 0 (m = 0 and z = 0)");
  return (mm.n2 - mm.n1 * mm.n1) / mm.n1 - 1.0;
}

double g2(const PacsPoint& point, StatsMethod method) {
  const Moments mm = moments_of(point, method);
  if (mm.n1 == 0.0)
    throw std::domain_error("g2: <N> = 0 (m = 0 and z = 0)");
  return (mm.n2 - mm.n1) / (mm.n1 * mm.n1);
}

StatsReport stats_report(const PacsPoint& point, StatsMethod method) {
  const Moments mm = moments_of(point, method);
  if (mm.n1 == 0.0)
    throw std::domain_error("stats_report: <N> = 0 (m = 0 and z = 0)");
  StatsReport r;
  r.mean_n = mm.n1;
  r.mean_n2 = mm.n2;
  r.mandel_q = (mm.n2 - mm.n1 * mm.n1) / mm.n1 - 1.0;
  r.g2 = (mm.n2 - mm.n1) / (mm.n1 * mm.n1);
  r.method = method;
  return r;
}

} // namespace pacs
