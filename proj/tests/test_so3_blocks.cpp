#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "liegamma/core.hpp"
#include "liegamma/oracles.hpp"
#include "liegamma/so3_blocks.hpp"

using namespace liegamma;

namespace {

double inf_norm(const Eigen::MatrixXd& m) { return m.cwiseAbs().rowwise().sum().maxCoeff(); }

const Eigen::Vector3d kPhi(0.4, -0.9, 1.3);
const Eigen::Vector3d kY(0.7, 0.1, -0.5);

}  // namespace

TEST_CASE("gamma_so3 closed forms at the pinned points") {
  Eigen::Matrix3d quarter;
  quarter << 0, -1, 0, 1, 0, 0, 0, 0, 1;
  CHECK(inf_norm(gamma_so3(0, {0, 0, M_PI / 2}) - quarter) < 1e-15);
  CHECK(inf_norm(gamma_so3(1, Eigen::Vector3d::Zero()) - Eigen::Matrix3d::Identity()) == 0.0);
  CHECK(inf_norm(gamma_so3(2, Eigen::Vector3d::Zero()) - 0.5 * Eigen::Matrix3d::Identity()) ==
        0.0);
}

TEST_CASE("gamma_so3 high ell matches the series oracle") {
  for (int ell = 3; ell <= 5; ++ell) {
    SeriesSpec s;
    s.ell = ell;
    s.x = skew3(kPhi);
    CHECK(inf_norm(gamma_so3(ell, kPhi) - series_eval(s)) < 1e-12);
  }
}

TEST_CASE("gamma3_so3") {
  CHECK(inf_norm(gamma3_so3(0, Eigen::Vector3d::Zero(), kY) - skew3(kY)) == 0.0);
  CHECK(inf_norm(gamma3_so3(1, Eigen::Vector3d::Zero(), kY) - 0.5 * skew3(kY)) == 0.0);
  SeriesSpec s;
  s.block = BlockTemplate::GammaYZ;
  s.ell = 1;
  s.x = skew3(kPhi);
  s.y = skew3(kY);
  s.z = skew3(kPhi);
  CHECK(inf_norm(gamma3_so3(1, kPhi, kY) - series_eval(s)) < 1e-12);
  s.ell = 2;  // quadrature path above the closed forms
  CHECK(inf_norm(gamma3_so3(2, kPhi, kY) - series_eval(s)) < 1e-9);
}

TEST_CASE("gamma_phi_tau") {
  CHECK(inf_norm(gamma_phi_tau(0, Eigen::Vector3d::Zero(), 2.0) -
                 2.0 * Eigen::Matrix3d::Identity()) == 0.0);
  CHECK(inf_norm(gamma_phi_tau(1, Eigen::Vector3d::Zero(), 2.0) -
                 Eigen::Matrix3d::Identity()) == 0.0);
  SeriesSpec s;
  s.block = BlockTemplate::GammaTau;
  s.ell = 1;
  s.x = skew3(kPhi);
  s.tau = 1.0;
  CHECK(inf_norm(gamma_phi_tau(1, kPhi, 1.0) - series_eval(s)) < 1e-12);
}

TEST_CASE("gamma4_so3") {
  CHECK(inf_norm(gamma4_so3(0, Eigen::Vector3d::Zero(), kY, 3.0) - 1.5 * skew3(kY)) == 0.0);
  CHECK(inf_norm(gamma4_so3(1, Eigen::Vector3d::Zero(), kY, 1.0) - skew3(kY) / 6.0) < 1e-16);
  SeriesSpec s;
  s.block = BlockTemplate::GammaYZTau;
  s.ell = 1;
  s.x = skew3(kPhi);
  s.y = skew3(kY);
  s.z = skew3(kPhi);
  s.tau = -1.4;
  CHECK(inf_norm(gamma4_so3(1, kPhi, kY, -1.4) - series_eval(s)) < 1e-11);
}

TEST_CASE("gamma_so2") {
  Eigen::Matrix2d quarter;
  quarter << 0, -1, 1, 0;
  CHECK(inf_norm(gamma_so2(0, M_PI / 2) - quarter) < 1e-15);
  CHECK(inf_norm(gamma_so2(1, 0.0) - Eigen::Matrix2d::Identity()) == 0.0);
  const Eigen::Matrix2d want = (2.0 / (M_PI * M_PI)) * Eigen::Matrix2d::Identity() +
                               (1.0 / M_PI) * so2_generator();
  CHECK(inf_norm(gamma_so2(2, M_PI) - want) < 1e-15);
  // the generator commutes with every Gamma_ell
  for (int ell = 0; ell <= 4; ++ell) {
    const Eigen::Matrix2d G = gamma_so2(ell, 0.83);
    CHECK(inf_norm(so2_generator() * G - G * so2_generator()) == 0.0);
  }
}

TEST_CASE("lemma 3.2 recursion via quadrature") {
  for (int ell : {0, 1}) {
    const Eigen::MatrixXd lifted = quadrature_lift(
        [&](double a) -> Eigen::MatrixXd { return gamma_so3(ell, a * kPhi); }, ell);
    CHECK(inf_norm(lifted - gamma_so3(ell + 1, kPhi)) < 1e-9);
  }
  const Eigen::MatrixXd l3 = quadrature_lift(
      [&](double a) -> Eigen::MatrixXd { return gamma3_so3(0, a * kPhi, a * kY); }, 0);
  CHECK(inf_norm(l3 - gamma3_so3(1, kPhi, kY)) < 1e-9);
  const Eigen::MatrixXd l4 = quadrature_lift(
      [&](double a) -> Eigen::MatrixXd { return gamma4_so3(0, a * kPhi, a * kY, a * 0.8); }, 0);
  CHECK(inf_norm(l4 - gamma4_so3(1, kPhi, kY, 0.8)) < 1e-9);
}

TEST_CASE("remark 3.1 vector form shares the Gamma path") {
  SeriesSpec s;
  s.block = BlockTemplate::GammaY;
  s.ell = 1;
  s.x = skew3(kPhi);
  s.y = kY;
  CHECK(inf_norm(series_eval(s) - gamma_so3(2, kPhi) * kY) < 1e-13);
}

TEST_CASE("commutation identities behind the seven-term form") {
  const Eigen::Matrix3d px = skew3(kPhi);
  const Eigen::Matrix3d yx = skew3(kY);
  const Eigen::Matrix3d px2 = px * px;
  CHECK(inf_norm(px2 * yx * px - px * yx * px2) < 1e-12);
  CHECK(inf_norm(px2 * yx * px2 + kPhi.squaredNorm() * px * yx * px) < 1e-12);
}
