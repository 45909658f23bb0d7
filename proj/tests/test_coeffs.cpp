#include <doctest.h>

#include <cmath>

#include "liegamma/coeffs.hpp"

using namespace liegamma;

TEST_CASE("rotation/Jacobian coefficients at pi") {
  const double pi = M_PI;
  CHECK(coeff(CoeffFamily::C, 1, pi) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(coeff(CoeffFamily::C, 2, pi) == doctest::Approx(2.0 / (pi * pi)));
  CHECK(coeff(CoeffFamily::J, 1, pi) == doctest::Approx(2.0 / (pi * pi)));
  CHECK(coeff(CoeffFamily::N, 0, 1.0) == 0.5);
}

TEST_CASE("small-angle branch is continuous") {
  for (CoeffFamily fam : {CoeffFamily::C, CoeffFamily::J, CoeffFamily::N, CoeffFamily::T,
                          CoeffFamily::JT, CoeffFamily::G12, CoeffFamily::G13}) {
    const int top = (fam == CoeffFamily::T || fam == CoeffFamily::JT) ? 4
                    : (fam == CoeffFamily::G13)                       ? 6
                                                                      : 2;
    for (int i = 0; i <= top; ++i) {
      const double lo = coeff(fam, i, kSmallAngle * (1.0 - 1e-12));
      const double hi = coeff(fam, i, kSmallAngle * (1.0 + 1e-12));
      CHECK(std::abs(lo - hi) <= 1e-12 * std::max(1.0, std::abs(hi)));
    }
  }
}

TEST_CASE("index and family validation") {
  CHECK_THROWS_AS(coeff(CoeffFamily::C, 3, 1.0), IndexOutOfRange);
  CHECK_THROWS_AS(coeff(CoeffFamily::T, 5, 1.0), IndexOutOfRange);
  CHECK_THROWS_AS(coeff(CoeffFamily::G13, 7, 1.0), IndexOutOfRange);
  CHECK_THROWS_AS(coeff(CoeffFamily::M, 0, 1.0), UnknownFamily);       // missing lambda
  CHECK_THROWS_AS(coeff(CoeffFamily::C, 1, 1.0, 0.5), UnknownFamily);  // stray lambda
}

TEST_CASE("sim3 m family") {
  const double l = std::log(2.0);
  CHECK(coeff(CoeffFamily::M, 0, 0.0, l) == doctest::Approx(0.5 / l).epsilon(1e-14));
  // lambda -> 0 limit degenerates to the j family
  for (int i : {1, 2}) {
    CHECK(coeff(CoeffFamily::M, i, 1.3, 1e-9) ==
          doctest::Approx(coeff(CoeffFamily::J, i, 1.3)).epsilon(1e-8));
  }
  // small-phi series branch matches the closed form just above the switch
  for (int i : {0, 1, 2}) {
    const double a = coeff(CoeffFamily::M, i, kSmallAngle * (1.0 - 1e-12), 0.7);
    const double b = coeff(CoeffFamily::M, i, kSmallAngle * (1.0 + 1e-12), 0.7);
    CHECK(std::abs(a - b) <= 1e-11 * std::max(1.0, std::abs(b)));
  }
}

TEST_CASE("scalar gamma series") {
  CHECK(gamma_scalar(0, 1.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
  CHECK(gamma_scalar(1, 0.0) == 1.0);
  // gamma_1(x) = (e^x - 1)/x
  CHECK(gamma_scalar(1, 0.3) == doctest::Approx(std::expm1(0.3) / 0.3).epsilon(1e-15));
  CHECK_THROWS_AS(gamma_scalar(-1, 0.0), IndexOutOfRange);
}

TEST_CASE("alternating factorial series") {
  // A_1(phi) = sin(phi)/phi, A_2(phi) = (1-cos)/phi^2
  CHECK(alt_factorial_series(1, 0.8) == doctest::Approx(std::sin(0.8) / 0.8).epsilon(1e-15));
  CHECK(alt_factorial_series(2, 0.8) ==
        doctest::Approx((1.0 - std::cos(0.8)) / 0.64).epsilon(1e-14));
}
