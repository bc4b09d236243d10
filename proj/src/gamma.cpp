#include "pacs/gamma.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pacs {

double log_gamma(double x) {
  if (!(x > 0.0))
    throw std::domain_error("log_gamma: argument must be positive, got " +
                            std::to_string(x));
  return std::lgamma(x);
}

namespace {

// Lanczos g = 7, n = 9 coefficients (Godfrey's set, ~15 correct digits).
constexpr double kLanczos[9] = {
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};

// log(sin(pi z)) without overflow for large |Im z|; branch irrelevant
// here since every use is exponentiated downstream.
std::complex<double> log_sin_pi(std::complex<double> z) {
  const std::complex<double> w = std::numbers::pi * z;
  if (std::abs(w.imag()) < 1.0)
    return std::log(std::sin(w));
  const std::complex<double> i(0.0, 1.0);
  if (w.imag() > 0.0) {
    // sin w = (i/2) e^{-iw} (1 - e^{2iw}), |e^{2iw}| < 1
    return std::log(std::complex<double>(0.0, 0.5)) - i * w +
           std::log(1.0 - std::exp(2.0 * i * w));
  }
  return std::log(std::complex<double>(0.0, -0.5)) + i * w +
         std::log(1.0 - std::exp(-2.0 * i * w));
}

} // namespace

std::complex<double> log_gamma(std::complex<double> z) {
  if (z.real() < 0.5) {
    // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1-z)
    return std::log(std::numbers::pi) - log_sin_pi(z) - log_gamma(1.0 - z);
  }
  std::complex<double> acc = kLanczos[0];
  for (int k = 1; k < 9; ++k)
    acc += kLanczos[k] / (z + static_cast<double>(k - 1));
  const std::complex<double> t = z + 6.5; // z + g - 0.5
  return 0.5 * std::log(2.0 * std::numbers::pi) +
         (z - 0.5) * std::log(t) - t + std::log(acc);
}

double gamma_ratio(std::initializer_list<double> num,
                   std::initializer_list<double> den) {
  double acc = 0.0;
  for (double x : num)
    acc += log_gamma(x);
  for (double x : den)
    acc -= log_gamma(x);
  return std::exp(acc);
}

} // namespace pacs
