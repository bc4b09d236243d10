#include "pacs/hypergeometric.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pacs {

namespace {

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

} // namespace

SeriesResult pfq(std::span<const double> a, std::span<const double> b,
                 std::complex<double> w, TruncationPolicy policy) {
  const std::size_t p = a.size(), q = b.size();
  for (double bj : b)
    if (is_nonpositive_integer(bj))
      throw std::invalid_argument(
          "pfq: lower parameter is a nonpositive integer: " +
          std::to_string(bj));
  if (p > q + 1)
    throw std::domain_error("pfq: divergent series (p > q+1)");
  const double r_asym = (p == q + 1) ? std::abs(w) : 0.0;
  if (p == q + 1 && std::abs(w) >= 1.0)
    throw std::domain_error("pfq: divergent series (p = q+1 and |w| >= 1)");
  if (policy.max_terms < 1 || !(policy.tol > 0.0))
    throw std::invalid_argument("pfq: invalid truncation policy");

  std::complex<double> sum(0.0, 0.0);
  std::complex<double> term(1.0, 0.0);
  SeriesResult out;
  int quiet_steps = 0; // consecutive terms below the stopping bound
  for (int n = 0; n < policy.max_terms; ++n) {
    sum += term;
    out.terms_used = n + 1;
    double num = 1.0, den = static_cast<double>(n) + 1.0;
    for (double ai : a)
      num *= ai + n;
    for (double bj : b)
      den *= bj + n;
    const std::complex<double> next = term * (num / den) * w;
    const double scale = std::max(1.0, std::abs(sum));
    const double ratio =
        std::abs(term) > 0.0 ? std::abs(next) / std::abs(term) : 0.0;
    // Geometric tail bound once the term ratio is safely below 1. Three
    // consecutive qualifying terms are required so a transient dip (an
    // upper parameter passing near a nonpositive value) cannot stop the
    // sum early.
    const double r = std::min(0.999, std::max(ratio, r_asym));
    const double tail = std::abs(next) / (1.0 - r);
    out.abs_error_estimate = tail;
    if (ratio < 0.9 && tail <= policy.tol * scale)
      ++quiet_steps;
    else
      quiet_steps = 0;
    if (quiet_steps >= 3 || std::abs(next) == 0.0) {
      out.converged = true;
      break;
    }
    term = next;
  }
  out.value = sum;
  return out;
}

SeriesResult pfq(std::initializer_list<double> a,
                 std::initializer_list<double> b, std::complex<double> w,
                 TruncationPolicy policy) {
  return pfq(std::span<const double>(a.begin(), a.size()),
             std::span<const double>(b.begin(), b.size()), w, policy);
}

double pfq_real(std::initializer_list<double> a,
                std::initializer_list<double> b, double x,
                TruncationPolicy policy) {
  return pfq(a, b, std::complex<double>(x, 0.0), policy).value.real();
}

} // namespace pacs
