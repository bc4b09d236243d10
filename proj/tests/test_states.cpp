#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "pacs/states.hpp"

using namespace pacs;
using cplx = std::complex<double>;

namespace {

const SipSystem kD = SipSystem::d_type(1.0, 1.0);
const SipSystem kC = SipSystem::c_type(-2.0);
const SipSystem kA1 = SipSystem::a_type1(1.0, 0.5);
const SipSystem kA2 = SipSystem::a_type2(1.0, 1.5);

std::vector<SipSystem> presets() { return {kD, kC, kA1, kA2}; }

double domain_span(const SipSystem& sys) {
  return std::isinf(sys.convergence_radius()) ? 1.8 : 0.85;
}

} // namespace

TEST_CASE("gram series anchors") {
  // w = 0 leaves only the n = 0 weight.
  for (const SipSystem& sys : presets())
    for (int m : {0, 3})
      CHECK(gram_series(sys, m, 0.0).value.real() ==
            doctest::Approx(inv_k_sq(sys, 0, m)).epsilon(1e-13));
  // D-type m = 0 is the exponential...
  CHECK(gram_series(kD, 0, 1.0).value.real() ==
        doctest::Approx(std::exp(1.0)).epsilon(1e-12));
  // ...and C-type m = 0 the binomial (1-w)^rho.
  CHECK(gram_series(kC, 0, 0.5).value.real() ==
        doctest::Approx(4.0).epsilon(1e-12));
  CHECK_THROWS_AS(gram_series(kC, 0, cplx(1.2, 0.0)), std::domain_error);
}

TEST_CASE("normalization anchors") {
  CHECK(normalization(kD, 0, 0.0) == doctest::Approx(1.0));
  // A-type-1 at rho = 1/2 is sqrt(sech |z|).
  for (double z : {0.4, 1.0, 2.5}) {
    CHECK(normalization(kA1, 0, z * z) ==
          doctest::Approx(std::sqrt(1.0 / std::cosh(z))).epsilon(1e-12));
  }
  // D-type m = 1 at x = 1: [Gamma(2) 1F1(2;1;1)]^{-1/2} = (2e)^{-1/2}.
  CHECK(normalization(kD, 1, 1.0, EvalMethod::closed) ==
        doctest::Approx(1.0 / std::sqrt(2.0 * std::exp(1.0)))
            .epsilon(1e-12));
}

TEST_CASE("normalization: series and closed paths agree") {
  for (const SipSystem& sys : presets()) {
    const double span = domain_span(sys);
    for (int m = 0; m <= 5; ++m)
      for (int i = 1; i <= 8; ++i) {
        const double x = span * span * i / 8.0;
        const double a = normalization(sys, m, x, EvalMethod::series);
        const double b = normalization(sys, m, x, EvalMethod::closed);
        CHECK(std::abs(a - b) / b <= 1e-10);
      }
  }
}

TEST_CASE("state coefficients are normalized with the right support") {
  for (const SipSystem& sys : presets())
    for (int m : {0, 2}) {
      const PacsPoint pt{sys, cplx(0.4 * domain_span(sys), 0.3), m};
      double total = 0.0;
      for (int n = 0; n < 400; ++n) {
        const double p = std::norm(state_coefficient(pt, n));
        total += p;
        if (n > 20 && p < 1e-18)
          break;
      }
      CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
      for (int j = 0; j < m; ++j)
        CHECK(fock_amplitude(pt, j) == cplx(0.0, 0.0));
      if (m > 0)
        CHECK(std::abs(fock_amplitude(pt, m)) ==
              doctest::Approx(std::abs(state_coefficient(pt, 0))));
    }
}

TEST_CASE("state coefficient anchors") {
  // z = 0: the n = 0 amplitude has unit modulus, all higher ones vanish.
  const PacsPoint origin{kD, cplx(0.0, 0.0), 3};
  CHECK(std::abs(state_coefficient(origin, 0)) ==
        doctest::Approx(1.0).epsilon(1e-13));
  CHECK(state_coefficient(origin, 2) == cplx(0.0, 0.0));
  // D-type m = 0, z = 1, n = 2: e^{-1/2}/sqrt(2).
  const PacsPoint unit{kD, cplx(1.0, 0.0), 0};
  CHECK(state_coefficient(unit, 2).real() ==
        doctest::Approx(std::exp(-0.5) / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("inner product: normalized states and exchange symmetry") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (const SipSystem& sys : presets()) {
    const double s = 0.5 * domain_span(sys);
    for (int trial = 0; trial < 5; ++trial) {
      const cplx z1(s * u(rng), s * u(rng)), z2(s * u(rng), s * u(rng));
      const int m1 = trial % 3, m2 = (trial + 1) % 3;
      CHECK(std::abs(inner_product(sys, z1, m1, z1, m1) - 1.0) < 1e-12);
      const cplx a = inner_product(sys, z1, m1, z2, m2);
      const cplx b = inner_product(sys, z2, m2, z1, m1);
      CHECK(std::abs(a - std::conj(b)) < 1e-12);
    }
  }
}

TEST_CASE("D-type ground inner product reproduces the Gaussian overlap") {
  const cplx z1(0.7, -0.4), z2(-0.2, 0.5);
  const cplx expected =
      std::exp(-0.5 * (std::norm(z1) + std::norm(z2) -
                       2.0 * std::conj(z2) * z1));
  const cplx got = inner_product(kD, z1, 0, z2, 0);
  CHECK(std::abs(got - expected) < 1e-12);
}

TEST_CASE("C-type ground inner product reproduces the SU(1,1) overlap") {
  const cplx z1(0.3, 0.0), z2(0.4, 0.0);
  const cplx expected =
      std::pow(std::sqrt((1.0 - std::norm(z1)) * (1.0 - std::norm(z2))) /
                   (1.0 - std::conj(z2) * z1),
               2.0);
  const cplx got = inner_product(kC, z1, 0, z2, 0);
  CHECK(std::abs(got - expected) < 1e-11);
  CHECK(got.real() == doctest::Approx(0.987079).epsilon(1e-5));
}

TEST_CASE("generic and closed inner products agree") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<SipSystem> systems = presets();
  systems.push_back(SipSystem::c_type(-3.0, 1.0, 0.4)); // C with phase
  for (const SipSystem& sys : systems) {
    const double s = 0.45 * domain_span(sys);
    for (auto [m1, m2] : {std::pair{2, 2}, {3, 1}, {1, 0}, {4, 4}}) {
      const cplx z1(s * u(rng), s * u(rng)), z2(s * u(rng), s * u(rng));
      const cplx a = inner_product(sys, z1, m1, z2, m2);
      const cplx b = inner_product_closed(sys, z1, m1, z2, m2);
      CAPTURE(sys.family_name());
      CAPTURE(m1);
      CAPTURE(m2);
      CHECK(std::abs(a - b) <= 1e-11 * std::max(1.0, std::abs(b)));
    }
  }
}

TEST_CASE("kernel properties: diagonal, hermiticity, overlap identity") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (const SipSystem& sys : presets()) {
    const double s = 0.5 * domain_span(sys);
    for (int trial = 0; trial < 12; ++trial) {
      const cplx z(s * u(rng), s * u(rng)), zp(s * u(rng), s * u(rng));
      const int m = trial % 3;
      CHECK(std::abs(kernel(sys, m, z, z) - 1.0) <= 1e-12);
      CHECK(std::abs(kernel(sys, m, z, zp) -
                     std::conj(kernel(sys, m, zp, z))) <= 1e-12);
      // K(z, z') coincides with the equal-m state overlap <z; m | z'; m>.
      CHECK(std::abs(kernel(sys, m, z, zp) -
                     inner_product(sys, zp, m, z, m)) <= 1e-12);
    }
  }
}

TEST_CASE("kernel anchor at the origin pair") {
  CHECK(kernel(kD, 0, cplx(1.0, 0.0), cplx(0.0, 0.0)).real() ==
        doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
}

TEST_CASE("kernel idempotence at the reference point") {
  const double residual =
      kernel_idempotence_check(kD, 0, cplx(0.0, 0.0), cplx(0.0, 0.0));
  CHECK(residual <= 1e-6);
}
