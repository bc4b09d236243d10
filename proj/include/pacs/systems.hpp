#pragma once

#include <complex>

namespace pacs {

enum class Family { DType, CType, AType1, AType2 };

/// One shape-invariant system: the family tag plus the real parameters
/// entering its remainder sequence, ladder functional and phases.
/// Immutable in practice; validate() checks the structural requirements
/// (the measure-positivity windows are checked separately so that
/// out-of-window parameters can still be scanned and reported).
struct SipSystem {
  Family family = Family::DType;
  double gamma = 1.0; // D/C remainder constant (= 2 beta)
  double c = 1.0;     // D-type ladder constant
  double kappa = 1.0; // A-type scale
  double rho = 0.0;   // C-type and A-type-1 parameter
  double nu = 0.0;    // A-type-2 parameter
  double alpha = 0.0; // phase parameter (C-type, A-type-2)

  static SipSystem d_type(double gamma, double c);
  static SipSystem c_type(double rho, double gamma = 1.0, double alpha = 0.0);
  static SipSystem a_type1(double kappa, double rho);
  static SipSystem a_type2(double kappa, double nu, double alpha = 0.0);

  /// +inf for D / A-type-1, 1 for C / A-type-2.
  double convergence_radius() const;
  /// The parameter window under which the resolution-of-identity weight
  /// stays positive (rho < -1 for C, rho > 0 for A-1, nu > 0 for A-2).
  bool measure_positivity_condition() const;
  void validate() const;
  const char* family_name() const;
};

/// A state label: complex amplitude inside the family's disc plus the
/// number of added quanta.
struct PacsPoint {
  SipSystem system;
  std::complex<double> z{0.0, 0.0};
  int m = 0;
  void validate() const;
};

enum class CoeffMethod { raw, closed };

/// Remainder R(a_k) of the shape-invariance chain, k >= 1.
double remainder(const SipSystem& sys, int k);

/// Energy E_n = sum_{k<=n} R(a_k), in closed form; E_0 = 0.
double energy(const SipSystem& sys, int n);

/// Expansion coefficient K_n^m. `raw` builds the products of partial
/// remainder sums and ladder-functional factors literally (in log
/// space); `closed` evaluates the family's Gamma form. Both carry the
/// phase exp(i alpha n gamma) (C) or exp(i alpha E_n) (A-2).
std::complex<double> k_coeff(const SipSystem& sys, int n, int m,
                             CoeffMethod method = CoeffMethod::closed);

/// 1/|K_n^m|^2, the series weight; phase-free, evaluated in log space.
double inv_k_sq(const SipSystem& sys, int n, int m);
double log_inv_k_sq(const SipSystem& sys, int n, int m);

/// Exact rational ratio inv_k_sq(n+1,m) / inv_k_sq(n,m).
double inv_k_sq_ratio(const SipSystem& sys, int n, int m);

/// arg K_n^m (0 for D and A-type-1).
double k_phase(const SipSystem& sys, int n);

} // namespace pacs
