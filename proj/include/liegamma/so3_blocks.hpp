#pragma once

#include <Eigen/Dense>

#include "liegamma/types.hpp"

namespace liegamma {

// Γ_ℓ(φ^∧): ℓ=0 rotation, ℓ=1 left Jacobian, ℓ=2 the N block; ℓ≥3 via
// alternating scalar series on {I, φ^∧, φ^∧²}.
Eigen::Matrix3d gamma_so3(int ell, const Eigen::Vector3d& phi);

// Γ_ℓ(φ^∧, y^∧, φ^∧); closed form for ℓ ∈ {0,1}, quadrature lift above.
Eigen::Matrix3d gamma3_so3(int ell, const Eigen::Vector3d& phi, const Eigen::Vector3d& y);

// Γ_ℓ(φ^∧, τ); closed form for ℓ ∈ {0,1}, quadrature lift above.
Eigen::Matrix3d gamma_phi_tau(int ell, const Eigen::Vector3d& phi, double tau);

// Γ_ℓ(φ^∧, y^∧, φ^∧, τ); closed form for ℓ ∈ {0,1}, quadrature lift above.
Eigen::Matrix3d gamma4_so3(int ell, const Eigen::Vector3d& phi, const Eigen::Vector3d& y,
                           double tau);

// Γ_ℓ(φ^∧) on SO(2): a(φ)·I + b(φ)·S.
Eigen::Matrix2d gamma_so2(int ell, double phi);

}  // namespace liegamma
