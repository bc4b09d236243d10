#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "pacs/gamma.hpp"
#include "pacs/systems.hpp"

using namespace pacs;

namespace {

std::vector<SipSystem> parameter_sets(Family family) {
  switch (family) {
  case Family::DType:
    return {SipSystem::d_type(1.0, 1.0), SipSystem::d_type(2.0, 1.3),
            SipSystem::d_type(0.7, -0.8)};
  case Family::CType:
    return {SipSystem::c_type(-2.0), SipSystem::c_type(-4.0, 1.0, 0.3),
            SipSystem::c_type(-1.5, 2.0)};
  case Family::AType1:
    return {SipSystem::a_type1(1.0, 0.5), SipSystem::a_type1(1.2, 1.75),
            SipSystem::a_type1(0.8, 3.0)};
  case Family::AType2:
    return {SipSystem::a_type2(1.0, 1.5), SipSystem::a_type2(1.0, 5.0, 0.2),
            SipSystem::a_type2(1.4, 0.5)};
  }
  return {};
}

const Family kFamilies[] = {Family::DType, Family::CType, Family::AType1,
                            Family::AType2};

} // namespace

TEST_CASE("remainder anchors") {
  CHECK(remainder(SipSystem::d_type(2.0, 1.0), 5) == doctest::Approx(2.0));
  CHECK(remainder(SipSystem::a_type1(1.0, 0.5), 1) == doctest::Approx(2.0));
  CHECK(remainder(SipSystem::a_type2(1.0, 1.0), 2) == doctest::Approx(5.0));
  CHECK_THROWS_AS(remainder(SipSystem::d_type(1.0, 1.0), 0),
                  std::invalid_argument);
}

TEST_CASE("energy anchors and consistency with the remainder sum") {
  for (Family family : kFamilies)
    for (const SipSystem& sys : parameter_sets(family)) {
      CHECK(energy(sys, 0) == 0.0);
      double acc = 0.0;
      for (int n = 1; n <= 40; ++n) {
        acc += remainder(sys, n);
        CHECK(energy(sys, n) == doctest::Approx(acc).epsilon(1e-13));
        CHECK(energy(sys, n) - energy(sys, n - 1) ==
              doctest::Approx(remainder(sys, n)).epsilon(1e-12));
      }
    }
  CHECK(energy(SipSystem::d_type(1.0, 1.0), 7) == doctest::Approx(7.0));
  CHECK(energy(SipSystem::a_type1(1.0, 0.5), 3) == doctest::Approx(12.0));
}

TEST_CASE("k_coeff closed-form anchors") {
  const auto d = SipSystem::d_type(1.0, 1.0);
  CHECK(k_coeff(d, 0, 0).real() == doctest::Approx(1.0));
  CHECK(k_coeff(d, 2, 1).real() ==
        doctest::Approx(2.0 / std::sqrt(6.0)).epsilon(1e-12));
  const auto c = SipSystem::c_type(-2.0);
  CHECK(k_coeff(c, 1, 0).real() ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  for (Family family : kFamilies) {
    const SipSystem sys = parameter_sets(family)[0];
    CHECK(std::abs(k_coeff(sys, 0, 0) - 1.0) < 1e-13);
  }
}

TEST_CASE("raw and closed coefficients agree across all families") {
  for (Family family : kFamilies)
    for (const SipSystem& sys : parameter_sets(family)) {
      double worst = 0.0;
      for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= 60; ++n) {
          const auto raw = k_coeff(sys, n, m, CoeffMethod::raw);
          const auto closed = k_coeff(sys, n, m, CoeffMethod::closed);
          worst =
              std::max(worst, std::abs(raw - closed) / std::abs(closed));
        }
      CAPTURE(sys.family_name());
      CHECK(worst <= 1e-10);
    }
}

TEST_CASE("m = 0 closed coefficients reduce to the base-state forms") {
  // D: sqrt(gamma^n n!)/c^n; C: sqrt(G(-rho)G(n+1)/G(n-rho));
  // A-1: sqrt(G(n+1)G(2rho+2n)/G(2rho+n)); A-2: sqrt(G(n+1)G(nu+1)/G(n+nu+1)).
  for (const SipSystem& sys : parameter_sets(Family::DType))
    for (int n = 0; n <= 30; ++n) {
      const double expected = std::sqrt(std::pow(sys.gamma, n) *
                                        std::exp(log_gamma(n + 1.0))) /
                              std::pow(sys.c, n);
      CHECK(k_coeff(sys, n, 0).real() ==
            doctest::Approx(expected).epsilon(1e-12));
    }
  for (const SipSystem& sys : parameter_sets(Family::CType))
    for (int n = 0; n <= 30; ++n) {
      const double expected = std::sqrt(
          gamma_ratio({-sys.rho, n + 1.0}, {n - sys.rho}));
      CHECK(std::abs(k_coeff(sys, n, 0)) ==
            doctest::Approx(expected).epsilon(1e-12));
    }
  for (const SipSystem& sys : parameter_sets(Family::AType1))
    for (int n = 0; n <= 30; ++n) {
      const double expected = std::sqrt(gamma_ratio(
          {n + 1.0, 2.0 * sys.rho + 2.0 * n}, {2.0 * sys.rho + n}));
      CHECK(k_coeff(sys, n, 0).real() ==
            doctest::Approx(expected).epsilon(1e-12));
    }
  for (const SipSystem& sys : parameter_sets(Family::AType2))
    for (int n = 0; n <= 30; ++n) {
      const double expected = std::sqrt(
          gamma_ratio({n + 1.0, sys.nu + 1.0}, {n + sys.nu + 1.0}));
      CHECK(std::abs(k_coeff(sys, n, 0)) ==
            doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("coefficient phases follow the family phase convention") {
  const auto c = SipSystem::c_type(-2.0, 1.0, 0.3);
  for (int n : {1, 5, 12})
    CHECK(std::arg(k_coeff(c, n, 2)) ==
          doctest::Approx(std::remainder(0.3 * n * c.gamma,
                                         2.0 * 3.14159265358979312))
              .epsilon(1e-10));
  const auto a2 = SipSystem::a_type2(1.0, 5.0, 0.2);
  const double e3 = energy(a2, 3);
  CHECK(std::remainder(std::arg(k_coeff(a2, 3, 1)) - 0.2 * e3,
                       2.0 * 3.14159265358979312) ==
        doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("inv_k_sq matches |K|^-2 and its recurrence ratio") {
  const auto d = SipSystem::d_type(1.0, 1.0);
  CHECK(inv_k_sq(d, 0, 0) == doctest::Approx(1.0));
  CHECK(inv_k_sq(d, 1, 1) == doctest::Approx(2.0).epsilon(1e-13));
  const auto a2 = SipSystem::a_type2(1.0, 1.0);
  CHECK(inv_k_sq(a2, 1, 0) == doctest::Approx(2.0).epsilon(1e-13));

  for (Family family : kFamilies)
    for (const SipSystem& sys : parameter_sets(family))
      for (int m : {0, 1, 4})
        for (int n = 0; n <= 40; ++n) {
          const double direct = inv_k_sq(sys, n, m);
          const double via_k = 1.0 / std::norm(k_coeff(sys, n, m));
          CHECK(direct == doctest::Approx(via_k).epsilon(1e-11));
          const double ratio = inv_k_sq_ratio(sys, n, m);
          CHECK(inv_k_sq(sys, n + 1, m) ==
                doctest::Approx(direct * ratio).epsilon(1e-11));
        }
}

TEST_CASE("prefactor identity: E_m matches the statistics prefactors") {
  const auto d = SipSystem::d_type(1.7, 1.0);
  CHECK(energy(d, 3) == doctest::Approx(3.0 * 1.7));
  const auto a1 = SipSystem::a_type1(1.2, 0.5);
  CHECK(energy(a1, 2) ==
        doctest::Approx(1.2 * 1.2 * 2.0 * (2.0 + 2.0 * 0.5)));
  const auto a2 = SipSystem::a_type2(1.1, 5.0);
  CHECK(energy(a2, 4) == doctest::Approx(1.1 * 1.1 * 4.0 * (4.0 + 6.0)));
}

TEST_CASE("system and point validation") {
  CHECK_THROWS_AS(SipSystem::d_type(-1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(SipSystem::d_type(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(SipSystem::c_type(0.5), std::invalid_argument);
  CHECK_THROWS_AS(SipSystem::a_type1(1.0, -0.2), std::invalid_argument);
  CHECK_THROWS_AS(SipSystem::a_type2(1.0, 0.0), std::invalid_argument);
  // rho in (-1, 0) is constructible for C; only the positivity window is
  // violated, which the measure scan reports.
  CHECK_NOTHROW(SipSystem::c_type(-0.5));
  CHECK_FALSE(SipSystem::c_type(-0.5).measure_positivity_condition());

  PacsPoint inside{SipSystem::c_type(-2.0), {0.5, 0.3}, 2};
  CHECK_NOTHROW(inside.validate());
  PacsPoint outside{SipSystem::c_type(-2.0), {0.9, 0.6}, 2};
  CHECK_THROWS_AS(outside.validate(), std::domain_error);
  PacsPoint negm{SipSystem::d_type(1.0, 1.0), {0.1, 0.0}, -1};
  CHECK_THROWS_AS(negm.validate(), std::invalid_argument);
}
