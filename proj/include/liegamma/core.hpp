#pragma once

#include <Eigen/Core>

#include "liegamma/types.hpp"

namespace liegamma {

// v^wedge, the 3x3 cross-product matrix.
Eigen::Matrix3d skew3(const Eigen::Vector3d& v);

// phi * S with S = [[0,-1],[1,0]].
Eigen::Matrix2d skew2(double phi);

// The canonical 2x2 skew matrix S.
Eigen::Matrix2d so2_generator();

// Lie-algebra matrix xi^wedge for the group's layout.
Eigen::MatrixXd wedge(const TangentVector& xi);

// Adjoint-algebra matrix xi^curlywedge.  SO(2) degenerates to a 1x1 zero;
// SO(3) is self-adjoint and returns skew3(phi).
Eigen::MatrixXd curlywedge(const TangentVector& xi);

// Dense inverse guarded by a condition estimate (threshold 1e12).
Eigen::MatrixXd mat_inverse(const Eigen::MatrixXd& A);

}  // namespace liegamma
