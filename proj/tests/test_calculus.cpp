#include <doctest.h>

#include <Eigen/Dense>

#include "liegamma/calculus.hpp"
#include "liegamma/core.hpp"
#include "liegamma/groups.hpp"
#include "liegamma/so3_blocks.hpp"

using namespace liegamma;

namespace {

double inf_norm(const Eigen::MatrixXd& m) { return m.cwiseAbs().rowwise().sum().maxCoeff(); }

Eigen::MatrixXd fd5(const std::function<Eigen::MatrixXd(double)>& f, double h = 1e-5) {
  return (-f(2 * h) + 8.0 * f(h) - 8.0 * f(-h) + f(-2 * h)) / (12.0 * h);
}

const Eigen::Vector3d kPhi(0.6, -0.3, 0.8);
const Eigen::Vector3d kRate(0.2, 0.9, -0.5);

}  // namespace

TEST_CASE("body velocity basics") {
  const TangentVector x0 = TangentVector::zero(GroupId::SE3);
  Eigen::VectorXd r(6);
  r << 1, 2, 3, 4, 5, 6;
  const TangentVector xd{GroupId::SE3, r};
  CHECK((body_velocity({x0, xd}).coords() - r).norm() == 0.0);

  // SO(2): velocity is just phi-dot
  const TangentVector p{GroupId::SO2, Eigen::VectorXd::Constant(1, 1.2)};
  const TangentVector pd{GroupId::SO2, Eigen::VectorXd::Constant(1, -0.7)};
  CHECK(body_velocity({p, pd}).coords()[0] == -0.7);
}

TEST_CASE("body velocity vs finite difference on SO(3)") {
  const TangentVector x{GroupId::SO3, kPhi};
  const TangentVector xd{GroupId::SO3, kRate};
  const Eigen::MatrixXd Cdot = fd5([&](double t) -> Eigen::MatrixXd {
    return gamma_so3(0, kPhi + t * kRate);
  });
  const Eigen::Vector3d v = body_velocity({x, xd}).coords();
  CHECK(inf_norm(Cdot * gamma_so3(0, kPhi).transpose() - skew3(v)) < 1e-6);
}

TEST_CASE("gamma time derivative at the origin") {
  const TangentVector x0 = TangentVector::zero(GroupId::SO3);
  const TangentVector xd{GroupId::SO3, kRate};
  CHECK(inf_norm(gamma_time_derivative(0, {x0, xd}, false) - skew3(kRate)) < 1e-15);
  CHECK(inf_norm(gamma_time_derivative(1, {x0, xd}, false) - 0.5 * skew3(kRate)) < 1e-15);
}

TEST_CASE("theorem 5.1 and corollary 5.2 vs finite differences") {
  for (GroupId g : {GroupId::SE3, GroupId::SGal3, GroupId::Sim3}) {
    Eigen::VectorXd c = Eigen::VectorXd::LinSpaced(tangent_dim(g), -0.8, 1.0);
    Eigen::VectorXd cd = Eigen::VectorXd::LinSpaced(tangent_dim(g), 0.5, -0.6);
    const TangentVector x{g, c}, xd{g, cd};
    const KinematicState st{x, xd};
    CHECK(inf_norm(fd5([&](double t) -> Eigen::MatrixXd {
                     return exp_group({g, c + t * cd}).matrix;
                   }) -
                   gamma_time_derivative(0, st, false)) < 1e-6);
    CHECK(inf_norm(fd5([&](double t) -> Eigen::MatrixXd {
                     return adjoint_of({g, c + t * cd}).matrix;
                   }) -
                   gamma_time_derivative(0, st, true)) < 1e-6);
  }
}

TEST_CASE("acceleration term") {
  const TangentVector x0 = TangentVector::zero(GroupId::SO3);
  const TangentVector zero = x0;
  const TangentVector xdd{GroupId::SO3, kRate};
  CHECK((acceleration_term({x0, zero}, xdd).coords() - kRate).norm() == 0.0);

  // x=0, xddot=0: only the half-wedge contraction survives
  const TangentVector xd{GroupId::SO3, kRate};
  CHECK((acceleration_term({x0, xd}, zero).coords() -
         0.5 * skew3(kRate) * kRate).norm() < 1e-15);

  // against a finite-differenced body velocity along the trajectory
  const TangentVector x{GroupId::SO3, kPhi};
  const Eigen::MatrixXd vdot = fd5([&](double t) -> Eigen::MatrixXd {
    const TangentVector xt{GroupId::SO3, kPhi + t * kRate + 0.5 * t * t * kRate};
    const TangentVector xdt{GroupId::SO3, kRate + t * kRate};
    return body_velocity({xt, xdt}).coords();
  });
  CHECK(inf_norm(vdot - acceleration_term({x, xd}, xd).coords()) < 1e-5);
}

TEST_CASE("partial of gamma0") {
  const TangentVector y{GroupId::SO3, kRate};
  CHECK(inf_norm(partial_gamma0(TangentVector::zero(GroupId::SO3), y) +
                 0.5 * skew3(kRate)) < 1e-15);

  // matches the Q - r^J form and finite differences of J(phi) rho
  const TangentVector x{GroupId::SO3, kPhi};
  const Eigen::Matrix3d J = gamma_so3(1, kPhi);
  const Eigen::MatrixXd P = partial_gamma0(x, y);
  CHECK(inf_norm(P - (gamma3_so3(1, kPhi, kRate) - skew3(J * kRate) * J)) < 1e-10);
  for (int i = 0; i < 3; ++i) {
    const Eigen::MatrixXd col = fd5([&](double t) -> Eigen::MatrixXd {
      Eigen::Vector3d p = kPhi;
      p[i] += t;
      return gamma_so3(1, p) * kRate;
    });
    CHECK(inf_norm(col - P.col(i)) < 1e-6);
  }
}

TEST_CASE("product rule consistency for gamma0") {
  const TangentVector x{GroupId::SE3,
                        (Eigen::VectorXd(6) << 0.3, -0.7, 0.4, 0.5, 0.2, -0.9).finished()};
  const TangentVector xd{GroupId::SE3,
                         (Eigen::VectorXd(6) << -0.2, 0.8, 0.1, -0.4, 0.6, 0.3).finished()};
  const KinematicState st{x, xd};
  const TangentVector v = body_velocity(st);
  CHECK(inf_norm(gamma_time_derivative(0, st, false) -
                 wedge(v) * exp_group(x).matrix) < 1e-10);
}
