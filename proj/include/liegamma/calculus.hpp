#pragma once

#include <Eigen/Dense>

#include "liegamma/types.hpp"

namespace liegamma {

struct KinematicState {
  TangentVector x;
  TangentVector xdot;
};

// v = 𝒥(x)·ẋ (quadrature Jacobian where no closed form exists).
TangentVector body_velocity(const KinematicState& state);

// d/dt Γ_ℓ(x^∧) = Γ_ℓ(x^∧, ẋ^∧, x^∧); curlywedge variants when adjoint set.
// ℓ=0 closed via v^∧Γ₀, ℓ ≥ 1 via the double series.
Eigen::MatrixXd gamma_time_derivative(int ell, const KinematicState& state, bool adjoint);

// v̇ = Γ₁(x^⋏, ẋ^⋏, x^⋏)·ẋ + Γ₁(x^⋏)·ẍ.
TangentVector acceleration_term(const KinematicState& state, const TangentVector& xddot);

// ∂γ₀(x^⋏, y)/∂x = Γ₁(x^⋏, y^⋏, x^⋏) − γ₀(x^⋏, y)^⋏ Γ₁(x^⋏).
Eigen::MatrixXd partial_gamma0(const TangentVector& x, const TangentVector& y);

}  // namespace liegamma
