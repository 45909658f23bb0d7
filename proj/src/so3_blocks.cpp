#include "liegamma/so3_blocks.hpp"

#include <cmath>

#include "liegamma/coeffs.hpp"
#include "liegamma/core.hpp"
#include "liegamma/oracles.hpp"

namespace liegamma {

Eigen::Matrix3d gamma_so3(int ell, const Eigen::Vector3d& phi) {
  if (ell < 0) throw IndexOutOfRange("gamma_so3: ell >= 0");
  const double a = phi.norm();
  const Eigen::Matrix3d px = skew3(phi);
  const Eigen::Matrix3d px2 = px * px;
  const Eigen::Matrix3d I = Eigen::Matrix3d::Identity();
  switch (ell) {
    case 0: return I + coeff(CoeffFamily::C, 1, a) * px + coeff(CoeffFamily::C, 2, a) * px2;
    case 1: return I + coeff(CoeffFamily::J, 1, a) * px + coeff(CoeffFamily::J, 2, a) * px2;
    case 2:
      return 0.5 * I + coeff(CoeffFamily::N, 1, a) * px + coeff(CoeffFamily::N, 2, a) * px2;
    default: {
      double lead = 1.0;
      for (int k = 2; k <= ell; ++k) lead /= k;
      return lead * I + alt_factorial_series(ell + 1, a) * px +
             alt_factorial_series(ell + 2, a) * px2;
    }
  }
}

Eigen::Matrix3d gamma3_so3(int ell, const Eigen::Vector3d& phi, const Eigen::Vector3d& y) {
  if (ell < 0) throw IndexOutOfRange("gamma3_so3: ell >= 0");
  if (ell == 0) return skew3(gamma_so3(1, phi) * y) * gamma_so3(0, phi);
  if (ell >= 2)
    return quadrature_lift(
        [&](double alpha) -> Eigen::MatrixXd {
          return gamma3_so3(ell - 1, alpha * phi, alpha * y);
        },
        ell - 1);
  const double a = phi.norm();
  const Eigen::Matrix3d px = skew3(phi);
  const Eigen::Matrix3d yx = skew3(y);
  const Eigen::Matrix3d px2 = px * px;
  const double n1 = coeff(CoeffFamily::N, 1, a);
  const double n2 = coeff(CoeffFamily::N, 2, a);
  const double jt4 = coeff(CoeffFamily::JT, 4, a);
  return 0.5 * yx + n1 * (px * yx + yx * px + px * yx * px) +
         n2 * (px2 * yx + yx * px2 - 3.0 * px * yx * px) +
         jt4 * (px2 * yx * px + px * yx * px2);
}

Eigen::Matrix3d gamma_phi_tau(int ell, const Eigen::Vector3d& phi, double tau) {
  if (ell < 0) throw IndexOutOfRange("gamma_phi_tau: ell >= 0");
  if (ell == 0) return tau * gamma_so3(0, phi);
  if (ell >= 2)
    return quadrature_lift(
        [&](double alpha) -> Eigen::MatrixXd {
          return gamma_phi_tau(ell - 1, alpha * phi, alpha * tau);
        },
        ell - 1);
  const double a = phi.norm();
  const Eigen::Matrix3d px = skew3(phi);
  return tau * (0.5 * Eigen::Matrix3d::Identity() + coeff(CoeffFamily::G12, 1, a) * px +
                coeff(CoeffFamily::G12, 2, a) * px * px);
}

Eigen::Matrix3d gamma4_so3(int ell, const Eigen::Vector3d& phi, const Eigen::Vector3d& y,
                           double tau) {
  if (ell < 0) throw IndexOutOfRange("gamma4_so3: ell >= 0");
  if (ell == 0)
    return tau * skew3((gamma_so3(1, phi) - gamma_so3(2, phi)) * y) * gamma_so3(0, phi);
  if (ell >= 2)
    return quadrature_lift(
        [&](double alpha) -> Eigen::MatrixXd {
          return gamma4_so3(ell - 1, alpha * phi, alpha * y, alpha * tau);
        },
        ell - 1);
  const double a = phi.norm();
  const Eigen::Matrix3d px = skew3(phi);
  const Eigen::Matrix3d yx = skew3(y);
  const Eigen::Matrix3d px2 = px * px;
  auto g13 = [&](int i) { return coeff(CoeffFamily::G13, i, a); };
  return tau * ((1.0 / 6.0) * yx + g13(1) * px * yx + g13(2) * yx * px + g13(3) * px2 * yx +
                g13(4) * px * yx * px + g13(5) * yx * px2 +
                g13(6) * (px2 * yx * px + px * yx * px2));
}

Eigen::Matrix2d gamma_so2(int ell, double phi) {
  if (ell < 0) throw IndexOutOfRange("gamma_so2: ell >= 0");
  const Eigen::Matrix2d I = Eigen::Matrix2d::Identity();
  const Eigen::Matrix2d S = so2_generator();
  double a, b;
  const bool small = std::abs(phi) < kSmallAngle;
  switch (ell) {
    case 0:
      a = std::cos(phi);
      b = std::sin(phi);
      break;
    case 1:
      a = small ? alt_factorial_series(1, phi) : std::sin(phi) / phi;
      b = small ? phi * alt_factorial_series(2, phi) : (1.0 - std::cos(phi)) / phi;
      break;
    case 2:
      a = small ? alt_factorial_series(2, phi) : (1.0 - std::cos(phi)) / (phi * phi);
      b = small ? phi * alt_factorial_series(3, phi) : (phi - std::sin(phi)) / (phi * phi);
      break;
    default:
      a = alt_factorial_series(ell, phi);
      b = phi * alt_factorial_series(ell + 1, phi);
      break;
  }
  return a * I + b * S;
}

}  // namespace liegamma
