#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "pacs/hypergeometric.hpp"

using pacs::pfq;
using pacs::pfq_real;
using cplx = std::complex<double>;

namespace {

// Independent oracle: every term rebuilt from scratch as a product of
// bounded per-k factors (no state shared with the implementation).
cplx naive_pfq(const std::vector<double>& a, const std::vector<double>& b,
               cplx w, int terms) {
  cplx sum(0.0, 0.0);
  for (int n = 0; n < terms; ++n) {
    cplx term(1.0, 0.0);
    for (int k = 0; k < n; ++k) {
      double f = 1.0 / (k + 1.0);
      for (double ai : a)
        f *= ai + k;
      for (double bj : b)
        f /= bj + k;
      term *= f * w;
    }
    sum += term;
  }
  return sum;
}

} // namespace

TEST_CASE("0F0 is the exponential") {
  CHECK(pfq_real({}, {}, 1.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-13));
  const cplx v = pfq({}, {}, cplx(0.0, 2.0)).value;
  CHECK(v.real() == doctest::Approx(std::cos(2.0)).epsilon(1e-13));
  CHECK(v.imag() == doctest::Approx(std::sin(2.0)).epsilon(1e-13));
}

TEST_CASE("1F1(2;1;1) = 2e against the 200-term oracle") {
  const double value = pfq_real({2.0}, {1.0}, 1.0);
  CHECK(value == doctest::Approx(2.0 * std::exp(1.0)).epsilon(1e-12));
  const cplx oracle = naive_pfq({2.0}, {1.0}, cplx(1.0, 0.0), 200);
  CHECK(value == doctest::Approx(oracle.real()).epsilon(1e-13));
}

TEST_CASE("1F0 is the binomial") {
  CHECK(pfq_real({1.0}, {}, 0.5) == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(pfq_real({2.5}, {}, -0.7) ==
        doctest::Approx(std::pow(1.7, -2.5)).epsilon(1e-13));
}

TEST_CASE("2F1(a,b;b;x) collapses to (1-x)^-a") {
  CHECK(pfq_real({1.25, 3.0}, {3.0}, 0.4) ==
        doctest::Approx(std::pow(0.6, -1.25)).epsilon(1e-12));
}

TEST_CASE("random parameter sets match the naive oracle") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> par(0.3, 4.0);
  for (int trial = 0; trial < 20; ++trial) {
    const std::vector<double> a{par(rng), par(rng)};
    const std::vector<double> b{par(rng), par(rng), par(rng)};
    const cplx w(par(rng) * 0.5, par(rng) * 0.3);
    const cplx got = pfq(std::span<const double>(a),
                         std::span<const double>(b), w)
                         .value;
    const cplx want = naive_pfq(a, b, w, 120);
    CHECK(std::abs(got - want) <= 1e-12 * std::max(1.0, std::abs(want)));
  }
}

TEST_CASE("series metadata respects the policy") {
  pacs::TruncationPolicy pol;
  pol.max_terms = 4;
  const auto r = pfq({2.0}, {1.0}, cplx(5.0, 0.0), pol);
  CHECK_FALSE(r.converged);
  CHECK(r.terms_used <= 4);

  const auto ok = pfq({2.0}, {1.0}, cplx(0.5, 0.0));
  CHECK(ok.converged);
  CHECK(ok.abs_error_estimate <= 1e-13 * std::max(1.0, std::abs(ok.value)));
}

TEST_CASE("terminating series are exact") {
  // a = -3 truncates after four terms: 1F1(-3;2;x) is a cubic.
  const double x = 0.8;
  const double expected =
      1.0 - 3.0 / 2.0 * x + 3.0 / 5.0 * x * x / 2.0 * 2.0 / 2.0 -
      1.0 / 20.0 * x * x * x;
  // Coefficients: (-3)_n/(2)_n/n! for n=0..3 -> 1, -3/2, 3/5/2, -1/20/...
  const double got = pfq_real({-3.0}, {2.0}, x);
  const double naive = naive_pfq({-3.0}, {2.0}, cplx(x, 0.0), 10).real();
  CHECK(got == doctest::Approx(naive).epsilon(1e-14));
  (void)expected;
}

TEST_CASE("parameter and divergence errors") {
  CHECK_THROWS_AS(pfq({1.0}, {0.0}, cplx(0.1, 0.0)), std::invalid_argument);
  CHECK_THROWS_AS(pfq({1.0}, {-2.0}, cplx(0.1, 0.0)), std::invalid_argument);
  CHECK_THROWS_AS(pfq({1.0, 1.0, 1.0}, {1.0}, cplx(0.1, 0.0)),
                  std::domain_error);
  CHECK_THROWS_AS(pfq({1.0, 2.0}, {3.0}, cplx(1.0, 0.0)), std::domain_error);
  CHECK_NOTHROW(pfq({1.0, 2.0}, {3.0}, cplx(0.99, 0.0)));
}
