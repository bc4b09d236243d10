#include <doctest.h>

#include <cmath>

#include "pacs/quadrature.hpp"

using namespace pacs;

TEST_CASE("adaptive finite integration of a smooth function") {
  const auto r = integrate([](double x) { return 3.0 * x * x; }, 0.0, 1.0);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("adaptive integration resolves a narrow spike") {
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-10;
  const auto r = integrate(
      [](double x) { return std::exp(-1000.0 * (x - 0.3) * (x - 0.3)); },
      0.0, 1.0, cfg);
  CHECK(r.converged);
  CHECK(r.value ==
        doctest::Approx(std::sqrt(3.14159265358979312 / 1000.0))
            .epsilon(1e-9));
}

TEST_CASE("moments of an inverse square root singularity on (0,1)") {
  QuadratureConfig cfg;
  cfg.endpoint_strategy = EndpointStrategy::finite_support;
  const auto mom =
      integrate_moments([](double x) { return 1.0 / std::sqrt(x); }, 3, cfg);
  for (int k = 0; k <= 3; ++k) {
    CHECK(mom[k].converged);
    CHECK(mom[k].value == doctest::Approx(1.0 / (k + 0.5)).epsilon(1e-9));
  }
}

TEST_CASE("moments with an upper-endpoint singularity on (0,1)") {
  QuadratureConfig cfg;
  cfg.endpoint_strategy = EndpointStrategy::finite_support;
  const auto mom = integrate_moments(
      [](double x) { return 1.0 / std::sqrt(1.0 - x); }, 1, cfg);
  CHECK(mom[0].value == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(mom[1].value == doctest::Approx(4.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("moments of a logarithmic singularity") {
  QuadratureConfig cfg;
  cfg.endpoint_strategy = EndpointStrategy::finite_support;
  const auto mom =
      integrate_moments([](double x) { return -std::log(x); }, 2, cfg);
  for (int k = 0; k <= 2; ++k)
    CHECK(mom[k].value ==
          doctest::Approx(1.0 / ((k + 1.0) * (k + 1.0))).epsilon(1e-9));
}

TEST_CASE("moments of exp(-x) over the half line are factorials") {
  QuadratureConfig cfg;
  cfg.endpoint_strategy = EndpointStrategy::exponential_tail;
  const auto mom =
      integrate_moments([](double x) { return std::exp(-x); }, 6, cfg);
  double fact = 1.0;
  for (int k = 0; k <= 6; ++k) {
    if (k > 0)
      fact *= k;
    CHECK(mom[k].converged);
    CHECK(mom[k].value == doctest::Approx(fact).epsilon(1e-9));
  }
}

TEST_CASE("moments of exp(-sqrt(x)) involve (2k+1)!") {
  QuadratureConfig cfg;
  cfg.endpoint_strategy = EndpointStrategy::exponential_tail;
  const auto mom = integrate_moments(
      [](double x) { return std::exp(-std::sqrt(x)); }, 3, cfg);
  double expected = 2.0; // 2*(2k+1)! at k=0
  CHECK(mom[0].value == doctest::Approx(expected).epsilon(1e-9));
  CHECK(mom[1].value == doctest::Approx(12.0).epsilon(1e-9));
  CHECK(mom[2].value == doctest::Approx(240.0).epsilon(1e-9));
  CHECK(mom[3].value == doctest::Approx(10080.0).epsilon(1e-9));
}
