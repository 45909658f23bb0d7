#include <doctest.h>

#include <Eigen/Dense>

#include "liegamma/coeffs.hpp"
#include "liegamma/core.hpp"
#include "liegamma/identities.hpp"
#include "liegamma/so3_blocks.hpp"

using namespace liegamma;

namespace {
double inf_norm(const Eigen::MatrixXd& m) { return m.cwiseAbs().rowwise().sum().maxCoeff(); }
const Eigen::Vector3d kPhi(0.5, -1.1, 0.7);
const Eigen::Vector3d kRho(0.9, 0.2, -0.6);
}  // namespace

TEST_CASE("beta integral exact values") {
  CHECK(beta_integral(0, 0) == Rational(1));
  CHECK(beta_integral(1, 1) == Rational(1, 6));
  CHECK(beta_integral(2, 3) == Rational(1, 60));
  CHECK(beta_integral(5, 7).str() == beta_integral(7, 5).str());  // symmetry
  CHECK_THROWS_AS(beta_integral(30, 30), IndexOutOfRange);
  CHECK_THROWS_AS(beta_integral(-1, 0), IndexOutOfRange);
}

TEST_CASE("double beta integral exact values") {
  CHECK(double_beta_integral(0, 0) == Rational(1, 2));
  CHECK(double_beta_integral(1, 0) == Rational(1, 6));
  CHECK(double_beta_integral(2, 2) == (beta_integral(2, 2) - Rational(Rational::Int(2 * 6), 720)));
}

TEST_CASE("rational normalization") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(1, -2).str() == "-1/2");
  CHECK(Rational(3).str() == "3");
  CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("lemma A.3 grouped expansion equals the brute-force product") {
  CHECK(inf_norm(product_expand({1, 0, 0}, {1, 0, 0}, kPhi, kRho) - skew3(kRho)) == 0.0);
  const std::array<double, 3> a{0.7, -0.4, 0.9}, b{-0.3, 1.2, 0.5};
  const Eigen::Matrix3d px = skew3(kPhi);
  const Eigen::Matrix3d A = a[0] * Eigen::Matrix3d::Identity() + a[1] * px + a[2] * px * px;
  const Eigen::Matrix3d B = b[0] * Eigen::Matrix3d::Identity() + b[1] * px + b[2] * px * px;
  CHECK(inf_norm(product_expand(a, b, kPhi, kRho) - skew3(A * kRho) * B) < 1e-12);
}

TEST_CASE("lemma A.3 with j and c coefficients reproduces the ell=0 kernel") {
  const double n = kPhi.norm();
  const std::array<double, 3> j{1.0, coeff(CoeffFamily::J, 1, n), coeff(CoeffFamily::J, 2, n)};
  const std::array<double, 3> c{1.0, coeff(CoeffFamily::C, 1, n), coeff(CoeffFamily::C, 2, n)};
  CHECK(inf_norm(product_expand(j, c, kPhi, kRho) - gamma3_so3(0, kPhi, kRho)) < 1e-12);
}

TEST_CASE("binomial wedge expansion") {
  CHECK(inf_norm(binomial_expand(0, kPhi, kRho) - skew3(kRho)) == 0.0);
  const Eigen::Matrix3d px = skew3(kPhi);
  const Eigen::Matrix3d rx = skew3(kRho);
  CHECK(inf_norm(binomial_expand(1, kPhi, kRho) - (px * rx - rx * px)) == 0.0);
  Eigen::Matrix3d pm = Eigen::Matrix3d::Identity();
  for (int m = 0; m <= 12; ++m) {
    CHECK(inf_norm(binomial_expand(m, kPhi, kRho) - skew3(pm * kRho)) <
          1e-12 * std::max(1.0, inf_norm(skew3(pm * kRho))));
    pm = pm * px;
  }
  CHECK_THROWS_AS(binomial_expand(13, kPhi, kRho), IndexOutOfRange);
}
