#include "liegamma/groups.hpp"

#include <cmath>

#include "liegamma/coeffs.hpp"
#include "liegamma/core.hpp"
#include "liegamma/oracles.hpp"
#include "liegamma/so3_blocks.hpp"

namespace liegamma {
namespace {

// Sim(3) translation block M = m0·I + m1·φ^∧ + m2·φ^∧².
Eigen::Matrix3d sim3_m(const Eigen::Vector3d& phi, double lambda) {
  const double a = phi.norm();
  const Eigen::Matrix3d px = skew3(phi);
  return coeff(CoeffFamily::M, 0, a, lambda) * Eigen::Matrix3d::Identity() +
         coeff(CoeffFamily::M, 1, a, lambda) * px +
         coeff(CoeffFamily::M, 2, a, lambda) * px * px;
}

}  // namespace

GroupElement exp_group(const TangentVector& xi) {
  const GroupId g = xi.group();
  Eigen::MatrixXd T = Eigen::MatrixXd::Identity(matrix_dim(g), matrix_dim(g));
  switch (g) {
    case GroupId::SO2:
      T = gamma_so2(0, xi.phi_scalar());
      break;
    case GroupId::SO3:
      T = gamma_so3(0, xi.phi3());
      break;
    case GroupId::SE2:
      T.topLeftCorner<2, 2>() = gamma_so2(0, xi.phi_scalar());
      T.block<2, 1>(0, 2) = gamma_so2(1, xi.phi_scalar()) * xi.rho2();
      break;
    case GroupId::SE3:
      T.topLeftCorner<3, 3>() = gamma_so3(0, xi.phi3());
      T.block<3, 1>(0, 3) = gamma_so3(1, xi.phi3()) * xi.rho3();
      break;
    case GroupId::SE23: {
      const Eigen::Matrix3d J = gamma_so3(1, xi.phi3());
      T.topLeftCorner<3, 3>() = gamma_so3(0, xi.phi3());
      T.block<3, 1>(0, 3) = J * xi.nu();
      T.block<3, 1>(0, 4) = J * xi.rho3();
      break;
    }
    case GroupId::SGal3: {
      const Eigen::Matrix3d J = gamma_so3(1, xi.phi3());
      const Eigen::Matrix3d N = gamma_so3(2, xi.phi3());
      T.topLeftCorner<3, 3>() = gamma_so3(0, xi.phi3());
      T.block<3, 1>(0, 3) = J * xi.nu();
      T.block<3, 1>(0, 4) = J * xi.rho3() + N * xi.nu() * xi.tau();
      T(3, 4) = xi.tau();
      break;
    }
    case GroupId::Sim3:
      T.topLeftCorner<3, 3>() = gamma_so3(0, xi.phi3());
      T.block<3, 1>(0, 3) = sim3_m(xi.phi3(), xi.lambda()) * xi.rho3();
      T(3, 3) = std::exp(-xi.lambda());
      break;
    default:
      throw AdjointGroupNotSupported("exp_group: adjoint ids are produced by adjoint_of");
  }
  return {g, T};
}

GroupElement adjoint_of(const TangentVector& xi) {
  const GroupId g = xi.group();
  switch (g) {
    case GroupId::SO2:
      return {GroupId::SO2, Eigen::MatrixXd::Identity(1, 1)};
    case GroupId::SO3:
      return {GroupId::SO3, gamma_so3(0, xi.phi3())};
    case GroupId::SE2: {
      Eigen::MatrixXd A = Eigen::MatrixXd::Identity(3, 3);
      A.topLeftCorner<2, 2>() = gamma_so2(0, xi.phi_scalar());
      A.block<2, 1>(0, 2) = -so2_generator() * gamma_so2(1, xi.phi_scalar()) * xi.rho2();
      return {GroupId::AdSE2, A};
    }
    case GroupId::SE3: {
      const Eigen::Matrix3d C = gamma_so3(0, xi.phi3());
      const Eigen::Matrix3d J = gamma_so3(1, xi.phi3());
      Eigen::MatrixXd A = Eigen::MatrixXd::Zero(6, 6);
      A.block<3, 3>(0, 0) = C;
      A.block<3, 3>(0, 3) = skew3(J * xi.rho3()) * C;
      A.block<3, 3>(3, 3) = C;
      return {GroupId::AdSE3, A};
    }
    case GroupId::SE23: {
      const Eigen::Matrix3d C = gamma_so3(0, xi.phi3());
      const Eigen::Matrix3d J = gamma_so3(1, xi.phi3());
      Eigen::MatrixXd A = Eigen::MatrixXd::Zero(9, 9);
      A.block<3, 3>(0, 0) = C;
      A.block<3, 3>(0, 6) = skew3(J * xi.rho3()) * C;
      A.block<3, 3>(3, 3) = C;
      A.block<3, 3>(3, 6) = skew3(J * xi.nu()) * C;
      A.block<3, 3>(6, 6) = C;
      return {GroupId::AdSE23, A};
    }
    case GroupId::SGal3: {
      const Eigen::Matrix3d C = gamma_so3(0, xi.phi3());
      const Eigen::Matrix3d J = gamma_so3(1, xi.phi3());
      const Eigen::Matrix3d N = gamma_so3(2, xi.phi3());
      Eigen::MatrixXd A = Eigen::MatrixXd::Zero(10, 10);
      A.block<3, 3>(0, 0) = C;
      A.block<3, 3>(0, 3) = -xi.tau() * C;
      A.block<3, 3>(0, 6) = skew3(J * xi.rho3() - (J - N) * xi.nu() * xi.tau()) * C;
      A.block<3, 1>(0, 9) = J * xi.nu();
      A.block<3, 3>(3, 3) = C;
      A.block<3, 3>(3, 6) = skew3(J * xi.nu()) * C;
      A.block<3, 3>(6, 6) = C;
      A(9, 9) = 1.0;
      return {GroupId::AdSGal3, A};
    }
    case GroupId::Sim3: {
      const double s = std::exp(xi.lambda());
      const Eigen::Matrix3d C = gamma_so3(0, xi.phi3());
      const Eigen::Vector3d mr = sim3_m(xi.phi3(), xi.lambda()) * xi.rho3();
      Eigen::MatrixXd A = Eigen::MatrixXd::Zero(7, 7);
      A.block<3, 3>(0, 0) = s * C;
      A.block<3, 3>(0, 3) = skew3(mr) * C * s;
      A.block<3, 1>(0, 6) = -s * mr;
      A.block<3, 3>(3, 3) = C;
      A(6, 6) = 1.0;
      return {GroupId::AdSim3, A};
    }
    default:
      throw AdjointGroupNotSupported("adjoint_of: expects a base group id");
  }
}

Eigen::MatrixXd left_jacobian(const TangentVector& xi) {
  const GroupId g = xi.group();
  switch (g) {
    case GroupId::SO2:
      return Eigen::MatrixXd::Identity(1, 1);
    case GroupId::SO3:
      return gamma_so3(1, xi.phi3());
    case GroupId::SE2: {
      Eigen::MatrixXd Jm = Eigen::MatrixXd::Identity(3, 3);
      Jm.topLeftCorner<2, 2>() = gamma_so2(1, xi.phi_scalar());
      Jm.block<2, 1>(0, 2) = -so2_generator() * gamma_so2(2, xi.phi_scalar()) * xi.rho2();
      return Jm;
    }
    case GroupId::SE3: {
      const Eigen::Matrix3d J = gamma_so3(1, xi.phi3());
      Eigen::MatrixXd Jm = Eigen::MatrixXd::Zero(6, 6);
      Jm.block<3, 3>(0, 0) = J;
      Jm.block<3, 3>(0, 3) = gamma3_so3(1, xi.phi3(), xi.rho3());
      Jm.block<3, 3>(3, 3) = J;
      return Jm;
    }
    case GroupId::SE23: {
      const Eigen::Matrix3d J = gamma_so3(1, xi.phi3());
      Eigen::MatrixXd Jm = Eigen::MatrixXd::Zero(9, 9);
      Jm.block<3, 3>(0, 0) = J;
      Jm.block<3, 3>(0, 6) = gamma3_so3(1, xi.phi3(), xi.rho3());
      Jm.block<3, 3>(3, 3) = J;
      Jm.block<3, 3>(3, 6) = gamma3_so3(1, xi.phi3(), xi.nu());
      Jm.block<3, 3>(6, 6) = J;
      return Jm;
    }
    case GroupId::SGal3: {
      const Eigen::Matrix3d J = gamma_so3(1, xi.phi3());
      Eigen::MatrixXd Jm = Eigen::MatrixXd::Zero(10, 10);
      Jm.block<3, 3>(0, 0) = J;
      Jm.block<3, 3>(0, 3) = -gamma_phi_tau(1, xi.phi3(), xi.tau());
      Jm.block<3, 3>(0, 6) =
          gamma3_so3(1, xi.phi3(), xi.rho3()) - gamma4_so3(1, xi.phi3(), xi.nu(), xi.tau());
      Jm.block<3, 1>(0, 9) = gamma_so3(2, xi.phi3()) * xi.nu();
      Jm.block<3, 3>(3, 3) = J;
      Jm.block<3, 3>(3, 6) = gamma3_so3(1, xi.phi3(), xi.nu());
      Jm.block<3, 3>(6, 6) = J;
      Jm(9, 9) = 1.0;
      return Jm;
    }
    case GroupId::Sim3:
      throw NotImplementedClosedForm(
          "left_jacobian: no closed form for Sim(3); use jacobian_by_quadrature");
    default:
      throw AdjointGroupNotSupported("left_jacobian: expects a base group id");
  }
}

Eigen::MatrixXd jacobian_by_quadrature(const TangentVector& xi) {
  return quadrature_lift(
      [&](double alpha) -> Eigen::MatrixXd { return adjoint_of(xi.scaled(alpha)).matrix; }, 0);
}

Eigen::Matrix<double, 6, 6> adjoint_se3_monomial(const TangentVector& xi) {
  if (xi.group() != GroupId::SE3) throw UnsupportedAlgebra("adjoint_se3_monomial: SE(3) only");
  const double a = xi.phi3().norm();
  const Eigen::MatrixXd X = curlywedge(xi);
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(6, 6);
  Eigen::MatrixXd Xi = Eigen::MatrixXd::Identity(6, 6);
  for (int i = 0; i <= 4; ++i) {
    acc += coeff(CoeffFamily::T, i, a) * Xi;
    Xi = (Xi * X).eval();
  }
  return acc;
}

Eigen::Matrix<double, 6, 6> jacobian_se3_monomial(const TangentVector& xi) {
  if (xi.group() != GroupId::SE3) throw UnsupportedAlgebra("jacobian_se3_monomial: SE(3) only");
  const double a = xi.phi3().norm();
  const Eigen::MatrixXd X = curlywedge(xi);
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(6, 6);
  Eigen::MatrixXd Xi = Eigen::MatrixXd::Identity(6, 6);
  for (int i = 0; i <= 4; ++i) {
    acc += coeff(CoeffFamily::JT, i, a) * Xi;
    Xi = (Xi * X).eval();
  }
  return acc;
}

double minimal_poly_residual(GroupId algebra, const TangentVector& xi) {
  auto inf_norm = [](const Eigen::MatrixXd& m) {
    return m.cwiseAbs().rowwise().sum().maxCoeff();
  };
  switch (algebra) {
    case GroupId::SO2: {
      const Eigen::MatrixXd X = skew2(xi.phi_scalar());
      const double p2 = xi.phi_scalar() * xi.phi_scalar();
      return inf_norm((X * X + p2 * Eigen::Matrix2d::Identity()).eval());
    }
    case GroupId::SO3: {
      const Eigen::MatrixXd X = skew3(xi.phi3());
      const double p2 = xi.phi3().squaredNorm();
      return inf_norm((X * X * X + p2 * X).eval());
    }
    case GroupId::SE3: {
      const Eigen::MatrixXd X = wedge(xi);
      const double p2 = xi.phi3().squaredNorm();
      const Eigen::MatrixXd X2 = X * X;
      return inf_norm((X2 * X2 + p2 * X2).eval());
    }
    case GroupId::AdSE3: {
      const Eigen::MatrixXd X = curlywedge(xi);
      const double p2 = xi.phi3().squaredNorm();
      const Eigen::MatrixXd X2 = X * X;
      return inf_norm((X2 * X2 * X + 2.0 * p2 * X2 * X + p2 * p2 * X).eval());
    }
    default:
      throw UnsupportedAlgebra("minimal_poly_residual: stated only for so2/so3/se3/adse3");
  }
}

}  // namespace liegamma
