#pragma once

#include <Eigen/Dense>

#include "liegamma/types.hpp"

namespace liegamma {

struct GroupElement {
  GroupId group;
  Eigen::MatrixXd matrix;
};

// Γ₀(ξ^∧): the group element, assembled blockwise.
GroupElement exp_group(const TangentVector& xi);

// 𝒯(ξ) = Γ₀(ξ^⋏): the adjoint matrix, assembled blockwise.
GroupElement adjoint_of(const TangentVector& xi);

// 𝒥(ξ) = Γ₁(ξ^⋏), closed form.  Throws NotImplementedClosedForm for Sim(3).
Eigen::MatrixXd left_jacobian(const TangentVector& xi);

// 𝒥(ξ) = ∫₀¹ 𝒯(αξ) dα by fixed-order quadrature; works for every group.
Eigen::MatrixXd jacobian_by_quadrature(const TangentVector& xi);

// Ad(SE(3)) as Σ tᵢ(φ)·(ξ^⋏)ⁱ, i = 0..4.
Eigen::Matrix<double, 6, 6> adjoint_se3_monomial(const TangentVector& xi);

// 𝒥 of SE(3) as Σ jtᵢ(φ)·(ξ^⋏)ⁱ, i = 0..4.
Eigen::Matrix<double, 6, 6> jacobian_se3_monomial(const TangentVector& xi);

// ∞-norm of the minimal polynomial evaluated on the algebra element.
// algebra ∈ {SO2, SO3, SE3, AdSE3}; xi carries the base group coordinates.
double minimal_poly_residual(GroupId algebra, const TangentVector& xi);

}  // namespace liegamma
