#include "liegamma/calculus.hpp"

#include "liegamma/core.hpp"
#include "liegamma/groups.hpp"
#include "liegamma/oracles.hpp"

namespace liegamma {
namespace {

Eigen::MatrixXd jacobian_any(const TangentVector& x) {
  if (x.group() == GroupId::Sim3) return jacobian_by_quadrature(x);
  return left_jacobian(x);
}

Eigen::MatrixXd gamma3_series(int ell, const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
  SeriesSpec spec;
  spec.block = BlockTemplate::GammaYZ;
  spec.ell = ell;
  spec.x = x;
  spec.y = y;
  spec.z = x;
  return series_eval(spec);
}

}  // namespace

TangentVector body_velocity(const KinematicState& state) {
  return {state.x.group(), jacobian_any(state.x) * state.xdot.coords()};
}

Eigen::MatrixXd gamma_time_derivative(int ell, const KinematicState& state, bool adjoint) {
  if (ell < 0) throw IndexOutOfRange("gamma_time_derivative: ell >= 0");
  if (ell == 0) {
    // d/dt Γ₀ = v^∧ Γ₀ with v the body velocity (product rule collapses).
    const TangentVector v = body_velocity(state);
    if (adjoint) return curlywedge(v) * adjoint_of(state.x).matrix;
    return wedge(v) * exp_group(state.x).matrix;
  }
  if (adjoint) return gamma3_series(ell, curlywedge(state.x), curlywedge(state.xdot));
  return gamma3_series(ell, wedge(state.x), wedge(state.xdot));
}

TangentVector acceleration_term(const KinematicState& state, const TangentVector& xddot) {
  const Eigen::MatrixXd G1 =
      gamma3_series(1, curlywedge(state.x), curlywedge(state.xdot));
  return {state.x.group(),
          G1 * state.xdot.coords() + jacobian_any(state.x) * xddot.coords()};
}

Eigen::MatrixXd partial_gamma0(const TangentVector& x, const TangentVector& y) {
  const Eigen::MatrixXd J = jacobian_any(x);
  const TangentVector gy{x.group(), J * y.coords()};
  return gamma3_series(1, curlywedge(x), curlywedge(y)) - curlywedge(gy) * J;
}

}  // namespace liegamma
