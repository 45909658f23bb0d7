#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>

#include "liegamma/types.hpp"

namespace liegamma {

// The six series templates of the building-block family.
enum class BlockTemplate {
  Gamma,        // Γ_ℓ(x)            = Σ xᵐ / (ℓ+m)!
  GammaY,       // γ_ℓ(x,y)          = Σ xᵐ y / (ℓ+m+1)!
  GammaYZ,      // Γ_ℓ(x,y,z)        = ΣΣ xᵐ y zⁿ / (ℓ+m+n+1)!
  GammaTau,     // Γ_ℓ(x,τ)          = Σ (m+1) xᵐ τ / (ℓ+m+1)!
  GammaYTau,    // γ_ℓ(x,y,τ)        = Σ xᵐ y τ / (ℓ+m+2)!
  GammaYZTau,   // Γ_ℓ(x,y,z,τ)      = ΣΣ (m+1) xᵐ y zⁿ τ / (ℓ+m+n+2)!
};

struct SeriesSpec {
  BlockTemplate block = BlockTemplate::Gamma;
  int ell = 0;
  Eigen::MatrixXd x;
  std::optional<Eigen::MatrixXd> y;
  std::optional<Eigen::MatrixXd> z;
  std::optional<double> tau;
  double tol = 1e-14;
  int max_terms = 64;
};

Eigen::MatrixXd series_eval(const SeriesSpec& spec);

// ∫₀¹ αˡ f(α) dα, fixed-order Gauss–Legendre.
Eigen::MatrixXd quadrature_lift(const std::function<Eigen::MatrixXd(double)>& f, int ell);

Eigen::MatrixXd expm_generic(const Eigen::MatrixXd& A);

}  // namespace liegamma
