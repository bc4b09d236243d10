#pragma once

#include <complex>

namespace pacs {

/// ln Gamma(x) for x > 0. Throws std::domain_error for x <= 0.
double log_gamma(double x);

/// ln Gamma(z) for complex z, accurate enough that exp(log_gamma(z))
/// recovers Gamma(z) to ~1e-13 relative. The imaginary part is only
/// defined modulo 2*pi; callers must exponentiate (or difference
/// conjugate pairs) rather than rely on a particular branch.
std::complex<double> log_gamma(std::complex<double> z);

/// exp(sum of log-gammas) convenience: Gamma(num[0])...Gamma(num[k]) /
/// (Gamma(den[0])...), all arguments > 0. Evaluated fully in log space.
double gamma_ratio(std::initializer_list<double> num,
                   std::initializer_list<double> den);

} // namespace pacs
