#include "pacs/systems.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "pacs/gamma.hpp"

namespace pacs {

SipSystem SipSystem::d_type(double gamma, double c) {
  SipSystem s;
  s.family = Family::DType;
  s.gamma = gamma;
  s.c = c;
  s.validate();
  return s;
}

SipSystem SipSystem::c_type(double rho, double gamma, double alpha) {
  SipSystem s;
  s.family = Family::CType;
  s.rho = rho;
  s.gamma = gamma;
  s.alpha = alpha;
  s.validate();
  return s;
}

SipSystem SipSystem::a_type1(double kappa, double rho) {
  SipSystem s;
  s.family = Family::AType1;
  s.kappa = kappa;
  s.rho = rho;
  s.validate();
  return s;
}

SipSystem SipSystem::a_type2(double kappa, double nu, double alpha) {
  SipSystem s;
  s.family = Family::AType2;
  s.kappa = kappa;
  s.nu = nu;
  s.alpha = alpha;
  s.validate();
  return s;
}

double SipSystem::convergence_radius() const {
  switch (family) {
  case Family::DType:
  case Family::AType1:
    return std::numeric_limits<double>::infinity();
  case Family::CType:
  case Family::AType2:
    return 1.0;
  }
  return 0.0;
}

bool SipSystem::measure_positivity_condition() const {
  switch (family) {
  case Family::DType:
    return gamma > 0.0;
  case Family::CType:
    return rho < -1.0;
  case Family::AType1:
    return rho > 0.0;
  case Family::AType2:
    return nu > 0.0;
  }
  return false;
}

void SipSystem::validate() const {
  switch (family) {
  case Family::DType:
    if (!(gamma > 0.0))
      throw std::invalid_argument("SipSystem: D-type requires gamma > 0");
    if (c == 0.0)
      throw std::invalid_argument("SipSystem: D-type requires c != 0");
    break;
  case Family::CType:
    if (!(gamma > 0.0))
      throw std::invalid_argument("SipSystem: C-type requires gamma > 0");
    if (!(rho < 0.0))
      throw std::invalid_argument("SipSystem: C-type requires rho < 0");
    break;
  case Family::AType1:
    if (!(kappa > 0.0))
      throw std::invalid_argument("SipSystem: A-type-1 requires kappa > 0");
    if (!(rho > 0.0))
      throw std::invalid_argument("SipSystem: A-type-1 requires rho > 0");
    break;
  case Family::AType2:
    if (!(kappa > 0.0))
      throw std::invalid_argument("SipSystem: A-type-2 requires kappa > 0");
    if (!(nu > 0.0))
      throw std::invalid_argument("SipSystem: A-type-2 requires nu > 0");
    break;
  }
}

const char* SipSystem::family_name() const {
  switch (family) {
  case Family::DType:
    return "dtype";
  case Family::CType:
    return "ctype";
  case Family::AType1:
    return "atype1";
  case Family::AType2:
    return "atype2";
  }
  return "?";
}

void PacsPoint::validate() const {
  system.validate();
  if (m < 0)
    throw std::invalid_argument("PacsPoint: m must be >= 0");
  if (!(std::abs(z) < system.convergence_radius()))
    throw std::domain_error(
        "PacsPoint: |z| outside the family's convergence domain");
}

double remainder(const SipSystem& sys, int k) {
  if (k < 1)
    throw std::invalid_argument("remainder: k must be >= 1");
  switch (sys.family) {
  case Family::DType:
  case Family::CType:
    return sys.gamma;
  case Family::AType1:
    return sys.kappa * sys.kappa * (2.0 * sys.rho + 2.0 * k - 1.0);
  case Family::AType2:
    return sys.kappa * sys.kappa * (sys.nu + 2.0 * k);
  }
  return 0.0;
}

double energy(const SipSystem& sys, int n) {
  if (n < 0)
    throw std::invalid_argument("energy: n must be >= 0");
  const double nn = n;
  switch (sys.family) {
  case Family::DType:
  case Family::CType:
    return nn * sys.gamma;
  case Family::AType1:
    return sys.kappa * sys.kappa * nn * (nn + 2.0 * sys.rho);
  case Family::AType2:
    return sys.kappa * sys.kappa * nn * (nn + sys.nu + 1.0);
  }
  return 0.0;
}

double k_phase(const SipSystem& sys, int n) {
  switch (sys.family) {
  case Family::CType:
    return sys.alpha * n * sys.gamma;
  case Family::AType2:
    return sys.alpha * energy(sys, n);
  default:
    return 0.0;
  }
}

namespace {

void check_gamma_arg(double x) {
  if (!(x > 0.0))
    throw std::domain_error(
        "k_coeff: Gamma argument is nonpositive under these parameters: " +
        std::to_string(x));
}

// log |K_n^m| from the family's closed Gamma form.
double log_abs_k_closed(const SipSystem& sys, int n, int m) {
  const double dn = n, dm = m;
  switch (sys.family) {
  case Family::DType:
    return 0.5 * (dn - dm) * std::log(sys.gamma) + log_gamma(dn + 1.0) -
           dn * std::log(std::abs(sys.c)) - 0.5 * log_gamma(dn + dm + 1.0);
  case Family::CType: {
    check_gamma_arg(dm - sys.rho);
    check_gamma_arg(dn + dm - sys.rho);
    return 0.5 * (log_gamma(dm - sys.rho) + 2.0 * log_gamma(dn + 1.0) -
                  dm * std::log(sys.gamma) - log_gamma(dn + dm - sys.rho) -
                  log_gamma(dn + dm + 1.0));
  }
  case Family::AType1: {
    check_gamma_arg(2.0 * dn + 2.0 * dm + 2.0 * sys.rho);
    check_gamma_arg(dn + dm + 2.0 * sys.rho);
    return -dm * std::log(sys.kappa) +
           0.5 * (2.0 * log_gamma(dn + 1.0) +
                  log_gamma(2.0 * dn + 2.0 * dm + 2.0 * sys.rho) +
                  log_gamma(dn + dm + 2.0 * sys.rho) -
                  log_gamma(dn + dm + 1.0) -
                  2.0 * log_gamma(dn + 2.0 * dm + 2.0 * sys.rho));
  }
  case Family::AType2: {
    return -dm * std::log(sys.kappa) +
           0.5 * (2.0 * log_gamma(dn + 1.0) +
                  log_gamma(dn + dm + sys.nu + 1.0) +
                  log_gamma(2.0 * dm + sys.nu + 1.0) -
                  log_gamma(dn + dm + 1.0) -
                  2.0 * log_gamma(dn + 2.0 * dm + sys.nu + 1.0));
  }
  }
  return 0.0;
}

// Ladder-functional factor Z_{j+k}, k counted from the start of the
// Eq.-style product (index m corresponds to i = 0). Magnitude only;
// phases accumulate separately.
double log_abs_z_factor(const SipSystem& sys, int k) {
  switch (sys.family) {
  case Family::DType:
    return std::log(std::abs(sys.c));
  case Family::CType:
    return 0.5 * std::log(sys.gamma * (k - sys.rho));
  case Family::AType1:
    return std::log(sys.kappa);
  case Family::AType2:
    return std::log(sys.kappa) +
           0.5 * std::log((2.0 * k + sys.nu + 1.0) * (2.0 * k + sys.nu + 2.0));
  }
  return 0.0;
}

double log_abs_k_raw(const SipSystem& sys, int n, int m) {
  // Suffix sums T_k = sum_{s=k}^{n+m} R(a_s), accumulated from the top.
  const int top = n + m;
  std::vector<double> suffix(static_cast<std::size_t>(top) + 2, 0.0);
  for (int k = top; k >= 1; --k)
    suffix[static_cast<std::size_t>(k)] =
        suffix[static_cast<std::size_t>(k) + 1] + remainder(sys, k);

  double log_num = 0.0; // [prod_{k=m+1}^{n+m} T_k]^{1/2}
  for (int k = m + 1; k <= top; ++k)
    log_num += 0.5 * std::log(suffix[static_cast<std::size_t>(k)]);
  double log_den = 0.0; // [prod_{k=1}^{m} T_k]^{1/2}
  for (int k = 1; k <= m; ++k)
    log_den += 0.5 * std::log(suffix[static_cast<std::size_t>(k)]);
  double log_z = 0.0; // prod_{k=m}^{n+m-1} Z_{j+k}
  for (int k = m; k <= top - 1; ++k)
    log_z += log_abs_z_factor(sys, k);
  return log_num - log_den - log_z;
}

} // namespace

std::complex<double> k_coeff(const SipSystem& sys, int n, int m,
                             CoeffMethod method) {
  sys.validate();
  if (n < 0 || m < 0)
    throw std::invalid_argument("k_coeff: n and m must be >= 0");
  const double log_abs = (method == CoeffMethod::closed)
                             ? log_abs_k_closed(sys, n, m)
                             : log_abs_k_raw(sys, n, m);
  double phase = k_phase(sys, n);
  if (sys.family == Family::DType && sys.c < 0.0 && (n % 2) == 1)
    phase += std::numbers::pi;
  return std::polar(std::exp(log_abs), phase);
}

double log_inv_k_sq(const SipSystem& sys, int n, int m) {
  return -2.0 * log_abs_k_closed(sys, n, m);
}

double inv_k_sq(const SipSystem& sys, int n, int m) {
  sys.validate();
  if (n < 0 || m < 0)
    throw std::invalid_argument("inv_k_sq: n and m must be >= 0");
  return std::exp(log_inv_k_sq(sys, n, m));
}

double inv_k_sq_ratio(const SipSystem& sys, int n, int m) {
  const double dn = n, dm = m;
  switch (sys.family) {
  case Family::DType:
    return (sys.c * sys.c / sys.gamma) * (dm + dn + 1.0) /
           ((dn + 1.0) * (dn + 1.0));
  case Family::CType:
    return (dm - sys.rho + dn) * (dn + dm + 1.0) / ((dn + 1.0) * (dn + 1.0));
  case Family::AType1: {
    const double a = dn + 2.0 * dm + 2.0 * sys.rho;
    const double g = 2.0 * dn + 2.0 * dm + 2.0 * sys.rho;
    return (dn + dm + 1.0) * a * a /
           ((dn + 1.0) * (dn + 1.0) * g * (g + 1.0) *
            (dn + dm + 2.0 * sys.rho));
  }
  case Family::AType2: {
    const double a = dn + 2.0 * dm + sys.nu + 1.0;
    return (dn + dm + 1.0) * a * a /
           ((dn + 1.0) * (dn + 1.0) * (dn + dm + sys.nu + 1.0));
  }
  }
  return 0.0;
}

} // namespace pacs
