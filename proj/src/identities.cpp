#include "liegamma/identities.hpp"

#include <vector>

#include "liegamma/core.hpp"

namespace liegamma {
namespace {

using Int = Rational::Int;

Int factorial(int n) {
  Int f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

void require_beta_domain(int m, int n) {
  if (m < 0 || n < 0) throw IndexOutOfRange("beta integrals: m, n >= 0");
  if (m + n > 40) throw IndexOutOfRange("beta integrals: m + n <= 40 overflow guard");
}

}  // namespace

Rational::Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator+(const Rational& o) const {
  return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}

Rational Rational::operator-(const Rational& o) const {
  return {num_ * o.den_ - o.num_ * den_, den_ * o.den_};
}

double Rational::to_double() const {
  return static_cast<double>(boost::multiprecision::cpp_rational(num_, den_));
}

std::string Rational::str() const {
  return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str();
}

Rational beta_integral(int m, int n) {
  require_beta_domain(m, n);
  return {factorial(m) * factorial(n), factorial(m + n + 1)};
}

Rational double_beta_integral(int m, int n) {
  require_beta_domain(m, n);
  return beta_integral(m, n) - Rational{factorial(m + 1) * factorial(n), factorial(m + n + 2)};
}

Eigen::Matrix3d product_expand(const std::array<double, 3>& a, const std::array<double, 3>& b,
                               const Eigen::Vector3d& phi, const Eigen::Vector3d& rho) {
  const Eigen::Matrix3d px = skew3(phi);
  const Eigen::Matrix3d rx = skew3(rho);
  const Eigen::Matrix3d px2 = px * px;
  const double p2 = phi.squaredNorm();
  return a[0] * b[0] * rx + a[1] * b[0] * px * rx +
         (a[0] * b[1] - a[1] * b[0] + p2 * (a[1] * b[2] - a[2] * b[1])) * rx * px +
         a[2] * b[0] * px2 * rx +
         (a[0] * b[2] - a[1] * b[1] + a[2] * b[0] - p2 * a[2] * b[2]) * rx * px2 +
         (a[1] * b[1] - 2.0 * a[2] * b[0] + p2 * a[2] * b[2]) * px * rx * px +
         0.5 * (a[1] * b[2] - a[2] * b[1]) * (px2 * rx * px + px * rx * px2);
}

Eigen::Matrix3d binomial_expand(int m, const Eigen::Vector3d& phi, const Eigen::Vector3d& rho) {
  if (m < 0 || m > 12) throw IndexOutOfRange("binomial_expand: 0 <= m <= 12");
  const Eigen::Matrix3d px = skew3(phi);
  const Eigen::Matrix3d rx = skew3(rho);
  std::vector<Eigen::Matrix3d> pw{Eigen::Matrix3d::Identity()};
  for (int k = 1; k <= m; ++k) pw.push_back(pw.back() * px);
  std::vector<double> binom(m + 1);
  binom[0] = 1.0;
  for (int k = 1; k <= m; ++k) binom[k] = binom[k - 1] * (m - k + 1) / k;
  Eigen::Matrix3d acc = Eigen::Matrix3d::Zero();
  for (int k = 0; k <= m; ++k) {
    const double c = (k % 2 == 0 ? 1.0 : -1.0) * binom[k];
    acc += c * pw[m - k] * rx * pw[k];
  }
  return acc;
}

}  // namespace liegamma
