#pragma once

#include <complex>

#include "pacs/quadrature.hpp"
#include "pacs/series.hpp"
#include "pacs/systems.hpp"

namespace pacs {

enum class EvalMethod { series, closed };

/// Gram series S(w) = sum_n w^n / |K_n^m|^2, the reciprocal squared
/// normalization extended to complex argument. Requires |w| inside the
/// squared convergence radius.
SeriesResult gram_series(const SipSystem& sys, int m, std::complex<double> w,
                         TruncationPolicy policy = {});

/// sum_n E_{n+m}^power w^n / |K_n^m|^2 (power = 0 reduces to the Gram
/// series); shared by the photon-statistics moments.
SeriesResult ladder_moment_series(const SipSystem& sys, int m,
                                  std::complex<double> w, int power,
                                  TruncationPolicy policy = {});

/// Normalization constant N_m(x) = S(x)^{-1/2} at x = |z|^2, either by
/// direct summation or through the family's closed hypergeometric form.
double normalization(const SipSystem& sys, int m, double x,
                     EvalMethod method = EvalMethod::series);

/// Amplitude of the (n+m)-th eigenstate in the normalized state:
/// N_m(|z|^2) z^n / K_n^m.
std::complex<double> state_coefficient(const PacsPoint& point, int n);

/// Amplitude on eigenstate j directly; identically 0 for j < m.
std::complex<double> fock_amplitude(const PacsPoint& point, int j);

/// <z2; m2 | z1; m1>. For m1 < m2 the value is defined by conjugate
/// symmetry of the sesquilinear form.
std::complex<double> inner_product(const SipSystem& sys,
                                   std::complex<double> z1, int m1,
                                   std::complex<double> z2, int m2,
                                   TruncationPolicy policy = {});

/// Same quantity through the family's closed hypergeometric form
/// (cross-check path; A-type-2 requires alpha = 0 here).
std::complex<double> inner_product_closed(const SipSystem& sys,
                                          std::complex<double> z1, int m1,
                                          std::complex<double> z2, int m2);

/// Reproducing kernel K(z, z') = N_m(|z'|^2) N_m(|z|^2) S(conj(z) z').
std::complex<double> kernel(const SipSystem& sys, int m,
                            std::complex<double> z, std::complex<double> zp);

/// Relative residual of the kernel idempotence identity
/// |integral omega_m K(z,.)K(.,z') - K(z,z')| / |K(z,z')|; the angular
/// integral is done analytically, the radial one by quadrature against
/// the resolution-of-identity density.
double kernel_idempotence_check(const SipSystem& sys, int m,
                                std::complex<double> z,
                                std::complex<double> zp,
                                const QuadratureConfig& quad = {});

} // namespace pacs
