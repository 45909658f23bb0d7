#include "liegamma/oracles.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace liegamma {
namespace {

double inv_factorial(int n) {
  static const auto table = [] {
    std::array<double, 171> t{};
    t[0] = 1.0;
    for (int i = 1; i < 171; ++i) t[i] = t[i - 1] / i;
    return t;
  }();
  return n < 171 ? table[n] : 0.0;
}

double inf_norm(const Eigen::MatrixXd& m) { return m.cwiseAbs().rowwise().sum().maxCoeff(); }

// Single series Σ w(m)·xᵐ·R with w(m) = [m+1 if m_plus_one]/(shift+m)!.
Eigen::MatrixXd single_series(const SeriesSpec& spec, const Eigen::MatrixXd& right, int shift,
                              bool m_plus_one) {
  const int n = static_cast<int>(spec.x.rows());
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, right.cols());
  Eigen::MatrixXd xm = Eigen::MatrixXd::Identity(n, n);
  for (int m = 0; m < spec.max_terms; ++m) {
    const double w = (m_plus_one ? (m + 1) : 1) * inv_factorial(shift + m);
    const Eigen::MatrixXd term = w * xm * right;
    acc += term;
    if (inf_norm(term) < spec.tol * (inf_norm(acc) + 1.0)) return acc;
    xm = xm * spec.x;
  }
  throw SeriesNotConverged("single series: max_terms reached");
}

// Double series over anti-diagonal sweeps m+n = s.
Eigen::MatrixXd double_series(const SeriesSpec& spec, bool m_plus_one) {
  const int n = static_cast<int>(spec.x.rows());
  const Eigen::MatrixXd& y = *spec.y;
  const Eigen::MatrixXd& z = *spec.z;
  const int shift = spec.ell + (m_plus_one ? 2 : 1);
  std::vector<Eigen::MatrixXd> xp{Eigen::MatrixXd::Identity(n, n)};
  std::vector<Eigen::MatrixXd> zp{Eigen::MatrixXd::Identity(n, n)};
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
  for (int s = 0; s < spec.max_terms; ++s) {
    if (s > 0) {
      xp.push_back(xp.back() * spec.x);
      zp.push_back(zp.back() * z);
    }
    const double w = inv_factorial(shift + s);
    Eigen::MatrixXd sweep = Eigen::MatrixXd::Zero(n, n);
    for (int m = 0; m <= s; ++m)
      sweep += (m_plus_one ? (m + 1) * w : w) * xp[m] * y * zp[s - m];
    acc += sweep;
    if (inf_norm(sweep) < spec.tol * (inf_norm(acc) + 1.0)) return acc;
  }
  throw SeriesNotConverged("double series: max sweeps reached");
}

}  // namespace

Eigen::MatrixXd series_eval(const SeriesSpec& spec) {
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(spec.x.rows(), spec.x.cols());
  switch (spec.block) {
    case BlockTemplate::Gamma:
      return single_series(spec, eye, spec.ell, false);
    case BlockTemplate::GammaY:
      return single_series(spec, *spec.y, spec.ell + 1, false);
    case BlockTemplate::GammaYZ:
      return double_series(spec, false);
    case BlockTemplate::GammaTau:
      return single_series(spec, eye, spec.ell + 1, true) * *spec.tau;
    case BlockTemplate::GammaYTau:
      return single_series(spec, *spec.y, spec.ell + 2, false) * *spec.tau;
    case BlockTemplate::GammaYZTau:
      return double_series(spec, true) * *spec.tau;
  }
  throw UnknownFamily("series_eval: bad template");
}

Eigen::MatrixXd quadrature_lift(const std::function<Eigen::MatrixXd(double)>& f, int ell) {
  // Gauss–Legendre nodes/weights on [0,1], order 40, Newton-refined once at startup.
  static const auto rule = [] {
    constexpr int n = 40;
    std::array<double, n> nodes{}, weights{};
    for (int i = 0; i < n; ++i) {
      double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = t;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        const double dp = n * (t * p1 - p0) / (t * t - 1.0);
        const double dt = p1 / dp;
        t -= dt;
        if (std::abs(dt) < 1e-16) {
          weights[i] = 1.0 / ((1.0 - t * t) * dp * dp);  // already /2 scaled below
          break;
        }
      }
      nodes[i] = 0.5 * (t + 1.0);
    }
    return std::pair{nodes, weights};
  }();
  Eigen::MatrixXd acc;
  for (int i = 0; i < 40; ++i) {
    const double a = rule.first[i];
    const Eigen::MatrixXd v = rule.second[i] * std::pow(a, ell) * f(a);
    acc = (i == 0) ? v : (acc + v).eval();
  }
  return acc;
}

Eigen::MatrixXd expm_generic(const Eigen::MatrixXd& A) {
  const int n = static_cast<int>(A.rows());
  const double norm = A.size() ? inf_norm(A) : 0.0;
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Eigen::MatrixXd B = A / std::pow(2.0, squarings);
  Eigen::MatrixXd acc = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
  for (int k = 1; k <= 40; ++k) {
    term = (term * B / k).eval();
    acc += term;
    if (inf_norm(term) < 1e-17 * (inf_norm(acc) + 1.0)) break;
  }
  for (int i = 0; i < squarings; ++i) acc = (acc * acc).eval();
  return acc;
}

}  // namespace liegamma
