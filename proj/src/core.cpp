#include "liegamma/core.hpp"

#include <Eigen/Dense>

namespace liegamma {

Eigen::Matrix3d skew3(const Eigen::Vector3d& v) {
  Eigen::Matrix3d W;
  W << 0.0, -v.z(), v.y(),
       v.z(), 0.0, -v.x(),
      -v.y(), v.x(), 0.0;
  return W;
}

Eigen::Matrix2d so2_generator() {
  Eigen::Matrix2d S;
  S << 0.0, -1.0,
       1.0, 0.0;
  return S;
}

Eigen::Matrix2d skew2(double phi) { return phi * so2_generator(); }

Eigen::MatrixXd wedge(const TangentVector& xi) {
  const GroupId g = xi.group();
  Eigen::MatrixXd W = Eigen::MatrixXd::Zero(matrix_dim(g), matrix_dim(g));
  switch (g) {
    case GroupId::SO2:
      W = skew2(xi.phi_scalar());
      break;
    case GroupId::SE2:
      W.topLeftCorner<2, 2>() = skew2(xi.phi_scalar());
      W.block<2, 1>(0, 2) = xi.rho2();
      break;
    case GroupId::SO3:
      W = skew3(xi.phi3());
      break;
    case GroupId::SE3:
      W.topLeftCorner<3, 3>() = skew3(xi.phi3());
      W.block<3, 1>(0, 3) = xi.rho3();
      break;
    case GroupId::SE23:
      W.topLeftCorner<3, 3>() = skew3(xi.phi3());
      W.block<3, 1>(0, 3) = xi.nu();
      W.block<3, 1>(0, 4) = xi.rho3();
      break;
    case GroupId::SGal3:
      W.topLeftCorner<3, 3>() = skew3(xi.phi3());
      W.block<3, 1>(0, 3) = xi.nu();
      W.block<3, 1>(0, 4) = xi.rho3();
      W(3, 4) = xi.tau();
      break;
    case GroupId::Sim3:
      W.topLeftCorner<3, 3>() = skew3(xi.phi3());
      W.block<3, 1>(0, 3) = xi.rho3();
      W(3, 3) = -xi.lambda();
      break;
    default:
      throw AdjointGroupNotSupported("wedge: adjoint ids have no wedge layout");
  }
  return W;
}

Eigen::MatrixXd curlywedge(const TangentVector& xi) {
  const GroupId g = xi.group();
  switch (g) {
    case GroupId::SO2:
      // The SO(2) adjoint is the scalar 1; its algebra is identically zero.
      return Eigen::MatrixXd::Zero(1, 1);
    case GroupId::SO3:
      return skew3(xi.phi3());
    case GroupId::SE2: {
      Eigen::MatrixXd W = Eigen::MatrixXd::Zero(3, 3);
      W.topLeftCorner<2, 2>() = skew2(xi.phi_scalar());
      W.block<2, 1>(0, 2) = -so2_generator() * xi.rho2();
      return W;
    }
    case GroupId::SE3: {
      Eigen::MatrixXd W = Eigen::MatrixXd::Zero(6, 6);
      const Eigen::Matrix3d P = skew3(xi.phi3());
      W.topLeftCorner<3, 3>() = P;
      W.block<3, 3>(0, 3) = skew3(xi.rho3());
      W.block<3, 3>(3, 3) = P;
      return W;
    }
    case GroupId::SE23: {
      Eigen::MatrixXd W = Eigen::MatrixXd::Zero(9, 9);
      const Eigen::Matrix3d P = skew3(xi.phi3());
      W.block<3, 3>(0, 0) = P;
      W.block<3, 3>(0, 6) = skew3(xi.rho3());
      W.block<3, 3>(3, 3) = P;
      W.block<3, 3>(3, 6) = skew3(xi.nu());
      W.block<3, 3>(6, 6) = P;
      return W;
    }
    case GroupId::SGal3: {
      Eigen::MatrixXd W = Eigen::MatrixXd::Zero(10, 10);
      const Eigen::Matrix3d P = skew3(xi.phi3());
      W.block<3, 3>(0, 0) = P;
      W.block<3, 3>(0, 3) = -xi.tau() * Eigen::Matrix3d::Identity();
      W.block<3, 3>(0, 6) = skew3(xi.rho3());
      W.block<3, 1>(0, 9) = xi.nu();
      W.block<3, 3>(3, 3) = P;
      W.block<3, 3>(3, 6) = skew3(xi.nu());
      W.block<3, 3>(6, 6) = P;
      return W;
    }
    case GroupId::Sim3: {
      Eigen::MatrixXd W = Eigen::MatrixXd::Zero(7, 7);
      const Eigen::Matrix3d P = skew3(xi.phi3());
      W.block<3, 3>(0, 0) = P + xi.lambda() * Eigen::Matrix3d::Identity();
      W.block<3, 3>(0, 3) = skew3(xi.rho3());
      W.block<3, 1>(0, 6) = -xi.rho3();
      W.block<3, 3>(3, 3) = P;
      return W;
    }
    default:
      throw AdjointGroupNotSupported("curlywedge: adjoint ids have no curlywedge layout");
  }
}

Eigen::MatrixXd mat_inverse(const Eigen::MatrixXd& A) {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
  if (!lu.isInvertible()) throw SingularMatrix("mat_inverse: pivoting failed");
  // rcond from the LU factors; reject above condition ~1e12
  const double rcond = lu.rcond();
  if (!(rcond > 1e-12)) throw SingularMatrix("mat_inverse: condition estimate above 1e12");
  return lu.inverse();
}

}  // namespace liegamma
