#pragma once

#include <Eigen/Dense>
#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "liegamma/types.hpp"

namespace liegamma {

// Exact fraction on arbitrary-precision integers, kept in lowest terms.
class Rational {
 public:
  using Int = boost::multiprecision::cpp_int;

  Rational(Int num, Int den);
  explicit Rational(Int num) : Rational(std::move(num), 1) {}

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }

  double to_double() const;
  std::string str() const;

 private:
  Int num_;
  Int den_;  // > 0
};

// ∫₀¹ αᵐ(1−α)ⁿ dα = m!·n!/(m+n+1)!, exact.
Rational beta_integral(int m, int n);

// ∫₀¹∫₀^β αᵐ(β−α)ⁿ dα dβ = m!n!/(m+n+1)! − (m+1)!n!/(m+n+2)!, exact.
Rational double_beta_integral(int m, int n);

// Grouped expansion of ((a₀I+a₁φ^∧+a₂φ^∧²)ρ)^∧ (b₀I+b₁φ^∧+b₂φ^∧²).
Eigen::Matrix3d product_expand(const std::array<double, 3>& a, const std::array<double, 3>& b,
                               const Eigen::Vector3d& phi, const Eigen::Vector3d& rho);

// (φ^∧ᵐ ρ)^∧ = Σₖ (−1)ᵏ C(m,k) φ^∧^{m−k} ρ^∧ φ^∧ᵏ, right-hand side.
Eigen::Matrix3d binomial_expand(int m, const Eigen::Vector3d& phi, const Eigen::Vector3d& rho);

}  // namespace liegamma
