#include "liegamma/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>

#include "liegamma/calculus.hpp"
#include "liegamma/coeffs.hpp"
#include "liegamma/core.hpp"
#include "liegamma/groups.hpp"
#include "liegamma/identities.hpp"
#include "liegamma/oracles.hpp"
#include "liegamma/so3_blocks.hpp"

namespace liegamma {
namespace {

constexpr GroupId kBaseGroups[] = {GroupId::SO2,  GroupId::SE2,   GroupId::SO3, GroupId::SE3,
                                   GroupId::SE23, GroupId::SGal3, GroupId::Sim3};

double inf_norm(const Eigen::MatrixXd& m) {
  return m.size() ? m.cwiseAbs().rowwise().sum().maxCoeff() : 0.0;
}

double rel_residual(const Eigen::MatrixXd& got, const Eigen::MatrixXd& want) {
  return inf_norm(got - want) / std::max(1.0, inf_norm(want));
}

// Deterministic sampling away from branch cuts: angle magnitude uniform in
// (1e-6, pi-1e-3), translations standard normal, lambda/tau uniform (-2,2).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double a, double b) {
    return std::uniform_real_distribution<double>(a, b)(rng_);
  }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(rng_); }

  Eigen::Vector3d dir3() {
    Eigen::Vector3d v;
    do {
      v << normal(), normal(), normal();
    } while (v.norm() < 1e-8);
    return v.normalized();
  }
  Eigen::Vector3d phi3() { return uniform(1e-6, M_PI - 1e-3) * dir3(); }
  Eigen::Vector3d gauss3() { return {normal(), normal(), normal()}; }
  double angle() {
    const double a = uniform(1e-6, M_PI - 1e-3);
    return uniform(0.0, 1.0) < 0.5 ? -a : a;
  }

  TangentVector tangent(GroupId g) {
    Eigen::VectorXd c(tangent_dim(g));
    switch (g) {
      case GroupId::SO2: c << angle(); break;
      case GroupId::SE2: c << normal(), normal(), angle(); break;
      case GroupId::SO3: c = phi3(); break;
      case GroupId::SE3: c << gauss3(), phi3(); break;
      case GroupId::SE23: c << gauss3(), gauss3(), phi3(); break;
      case GroupId::SGal3: c << gauss3(), gauss3(), phi3(), uniform(-2.0, 2.0); break;
      case GroupId::Sim3: c << gauss3(), phi3(), uniform(-2.0, 2.0); break;
      default: throw AdjointGroupNotSupported("Sampler: base groups only");
    }
    return {g, c};
  }

  // Rates and perturbations: plain standard normal in every slot.
  TangentVector rate(GroupId g) {
    Eigen::VectorXd c(tangent_dim(g));
    for (int i = 0; i < c.size(); ++i) c[i] = normal();
    return {g, c};
  }

 private:
  std::mt19937_64 rng_;
};

struct SuiteBuilder {
  CheckReport* report;
  const std::map<std::string, double>* overrides;

  void item(const std::string& name, double tol, double residual) {
    auto it = overrides->find(name);
    if (it == overrides->end()) it = overrides->find("*");
    if (it != overrides->end()) tol = it->second;
    report->items.push_back({name, residual, tol, residual <= tol});
  }
};

// 5-point central difference of a matrix-valued map at 0.
Eigen::MatrixXd fd5(const std::function<Eigen::MatrixXd(double)>& f, double h = 1e-5) {
  return (-f(2 * h) + 8.0 * f(h) - 8.0 * f(-h) + f(-2 * h)) / (12.0 * h);
}

// ---- oracle-exp ------------------------------------------------------------

Eigen::MatrixXd series_gamma(int ell, const Eigen::MatrixXd& x) {
  SeriesSpec s;
  s.ell = ell;
  s.x = x;
  return series_eval(s);
}

Eigen::MatrixXd series_gamma3(int ell, const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
  SeriesSpec s;
  s.block = BlockTemplate::GammaYZ;
  s.ell = ell;
  s.x = x;
  s.y = y;
  s.z = x;
  return series_eval(s);
}

void suite_oracle_exp(SuiteBuilder& b, int samples, std::uint64_t seed) {
  for (GroupId g : kBaseGroups) {
    Sampler rng(seed);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
      const TangentVector xi = rng.tangent(g);
      worst = std::max(worst, rel_residual(exp_group(xi).matrix, expm_generic(wedge(xi))));
    }
    b.item(std::string("exp/") + group_name(g), 1e-12, worst);
  }

  Sampler rng(seed + 1);
  double gso3[4] = {0, 0, 0, 0}, gso2[3] = {0, 0, 0};
  double g3[2] = {0, 0}, gpt[2] = {0, 0}, g4[2] = {0, 0};
  double monoT = 0, monoJ = 0, m_sim = 0;
  for (int i = 0; i < samples; ++i) {
    const Eigen::Vector3d phi = rng.phi3();
    const Eigen::Vector3d y = rng.gauss3();
    const double tau = rng.uniform(-2.0, 2.0);
    const Eigen::Matrix3d px = skew3(phi);
    for (int l = 0; l <= 3; ++l)
      gso3[l] = std::max(gso3[l], rel_residual(gamma_so3(l, phi), series_gamma(l, px)));
    const double a = rng.angle();
    for (int l = 0; l <= 2; ++l)
      gso2[l] = std::max(gso2[l], rel_residual(gamma_so2(l, a), series_gamma(l, skew2(a))));
    for (int l = 0; l <= 1; ++l) {
      g3[l] = std::max(g3[l], rel_residual(gamma3_so3(l, phi, y), series_gamma3(l, px, skew3(y))));
      SeriesSpec st;
      st.block = BlockTemplate::GammaTau;
      st.ell = l;
      st.x = px;
      st.tau = tau;
      gpt[l] = std::max(gpt[l], rel_residual(gamma_phi_tau(l, phi, tau), series_eval(st)));
      SeriesSpec s4;
      s4.block = BlockTemplate::GammaYZTau;
      s4.ell = l;
      s4.x = px;
      s4.y = skew3(y);
      s4.z = px;
      s4.tau = tau;
      g4[l] = std::max(g4[l], rel_residual(gamma4_so3(l, phi, y, tau), series_eval(s4)));
    }
    const TangentVector xi = rng.tangent(GroupId::SE3);
    monoT = std::max(monoT,
                     rel_residual(adjoint_se3_monomial(xi), series_gamma(0, curlywedge(xi))));
    monoJ = std::max(monoJ,
                     rel_residual(jacobian_se3_monomial(xi), series_gamma(1, curlywedge(xi))));
    const TangentVector xs = rng.tangent(GroupId::Sim3);
    m_sim = std::max(m_sim, rel_residual(exp_group(xs).matrix.block(0, 3, 3, 1),
                                         series_gamma(0, wedge(xs)).block(0, 3, 3, 1)));
  }
  for (int l = 0; l <= 3; ++l) b.item("kernel/gamma_so3_l" + std::to_string(l), 1e-12, gso3[l]);
  for (int l = 0; l <= 2; ++l) b.item("kernel/gamma_so2_l" + std::to_string(l), 1e-12, gso2[l]);
  for (int l = 0; l <= 1; ++l) {
    b.item("kernel/gamma3_so3_l" + std::to_string(l), 1e-12, g3[l]);
    b.item("kernel/gamma_phi_tau_l" + std::to_string(l), 1e-12, gpt[l]);
    b.item("kernel/gamma4_so3_l" + std::to_string(l), 1e-12, g4[l]);
  }
  b.item("kernel/adjoint_se3_monomial", 1e-12, monoT);
  b.item("kernel/jacobian_se3_monomial", 1e-12, monoJ);
  b.item("kernel/sim3_m", 1e-12, m_sim);
}

// ---- oracle-adjoint --------------------------------------------------------

void suite_oracle_adjoint(SuiteBuilder& b, int samples, std::uint64_t seed) {
  for (GroupId g : kBaseGroups) {
    Sampler rng(seed);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
      const TangentVector xi = rng.tangent(g);
      worst =
          std::max(worst, rel_residual(adjoint_of(xi).matrix, expm_generic(curlywedge(xi))));
    }
    b.item(std::string("adjoint/") + group_name(g), 1e-12, worst);
  }
}

// ---- jacobian-recursion ----------------------------------------------------

void suite_jacobian_recursion(SuiteBuilder& b, int samples, std::uint64_t seed) {
  Sampler rng(seed);
  double lso3[2] = {0, 0}, lso2 = 0, l3 = 0, lpt = 0, l4 = 0;
  for (int i = 0; i < samples; ++i) {
    const Eigen::Vector3d phi = rng.phi3();
    const Eigen::Vector3d y = rng.gauss3();
    const double tau = rng.uniform(-2.0, 2.0);
    for (int l = 0; l <= 1; ++l) {
      const Eigen::MatrixXd lift = quadrature_lift(
          [&](double al) -> Eigen::MatrixXd { return gamma_so3(l, al * phi); }, l);
      lso3[l] = std::max(lso3[l], rel_residual(lift, gamma_so3(l + 1, phi)));
    }
    const double a = rng.angle();
    lso2 = std::max(
        lso2, rel_residual(quadrature_lift([&](double al) -> Eigen::MatrixXd {
                             return gamma_so2(0, al * a);
                           }, 0),
                           gamma_so2(1, a)));
    l3 = std::max(l3, rel_residual(quadrature_lift(
                                       [&](double al) -> Eigen::MatrixXd {
                                         return gamma3_so3(0, al * phi, al * y);
                                       },
                                       0),
                                   gamma3_so3(1, phi, y)));
    lpt = std::max(lpt, rel_residual(quadrature_lift(
                                         [&](double al) -> Eigen::MatrixXd {
                                           return gamma_phi_tau(0, al * phi, al * tau);
                                         },
                                         0),
                                     gamma_phi_tau(1, phi, tau)));
    l4 = std::max(l4, rel_residual(quadrature_lift(
                                       [&](double al) -> Eigen::MatrixXd {
                                         return gamma4_so3(0, al * phi, al * y, al * tau);
                                       },
                                       0),
                                   gamma4_so3(1, phi, y, tau)));
  }
  b.item("lift/gamma_so3_l1", 1e-9, lso3[0]);
  b.item("lift/gamma_so3_l2", 1e-9, lso3[1]);
  b.item("lift/gamma_so2_l1", 1e-9, lso2);
  b.item("lift/gamma3_so3_l1", 1e-9, l3);
  b.item("lift/gamma_phi_tau_l1", 1e-9, lpt);
  b.item("lift/gamma4_so3_l1", 1e-9, l4);

  for (GroupId g : kBaseGroups) {
    if (g == GroupId::Sim3) continue;  // no closed form to recurse onto
    Sampler r2(seed + 7);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
      const TangentVector xi = r2.tangent(g);
      worst = std::max(worst, rel_residual(left_jacobian(xi), jacobian_by_quadrature(xi)));
    }
    b.item(std::string("jacobian/") + group_name(g), 1e-9, worst);
  }
}

// ---- minimal-poly ----------------------------------------------------------

void suite_minimal_poly(SuiteBuilder& b, int samples, std::uint64_t seed) {
  struct Row {
    GroupId algebra;
    GroupId carrier;
    int degree;
    const char* name;
  };
  const Row rows[] = {{GroupId::SO2, GroupId::SO2, 2, "so2"},
                      {GroupId::SO3, GroupId::SO3, 3, "so3"},
                      {GroupId::SE3, GroupId::SE3, 4, "se3"},
                      {GroupId::AdSE3, GroupId::SE3, 5, "adse3"}};
  for (const Row& row : rows) {
    Sampler rng(seed);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
      const TangentVector xi = rng.tangent(row.carrier);
      const double scale = std::max(1.0, std::pow(xi.coords().norm(), row.degree));
      worst = std::max(worst, minimal_poly_residual(row.algebra, xi) / scale);
    }
    b.item(row.name, 1e-12, worst);
  }
}

// ---- adjoint-identity ------------------------------------------------------

void suite_adjoint_identity(SuiteBuilder& b, int samples, std::uint64_t seed) {
  for (GroupId g : kBaseGroups) {
    Sampler rng(seed);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
      const TangentVector xi1 = rng.tangent(g);
      const TangentVector xi2 = rng.rate(g);
      const Eigen::MatrixXd T = exp_group(xi1).matrix;
      const TangentVector mapped{g, (adjoint_of(xi1).matrix * xi2.coords()).eval()};
      worst = std::max(worst,
                       rel_residual(wedge(mapped), T * wedge(xi2) * mat_inverse(T)));
    }
    b.item(std::string("conjugation/") + group_name(g), 1e-10, worst);
  }
}

// ---- table1 ----------------------------------------------------------------

void suite_table1(SuiteBuilder& b, int samples, std::uint64_t seed) {
  for (GroupId g : kBaseGroups) {
    Sampler rng(seed);
    double we = 0.0, wa = 0.0, wj = 0.0;
    for (int i = 0; i < samples; ++i) {
      const TangentVector xi = rng.tangent(g);
      we = std::max(we, rel_residual(exp_group(xi).matrix, expm_generic(wedge(xi))));
      wa = std::max(wa, rel_residual(adjoint_of(xi).matrix, expm_generic(curlywedge(xi))));
      const Eigen::MatrixXd jq = quadrature_lift(
          [&](double al) -> Eigen::MatrixXd { return expm_generic(curlywedge(xi.scaled(al))); },
          0);
      const Eigen::MatrixXd jc =
          g == GroupId::Sim3 ? jacobian_by_quadrature(xi) : left_jacobian(xi);
      wj = std::max(wj, rel_residual(jc, jq));
    }
    b.item(std::string(group_name(g)) + "/exp", 1e-12, we);
    b.item(std::string(group_name(g)) + "/adjoint", 1e-12, wa);
    b.item(std::string(group_name(g)) + "/jacobian", 1e-9, wj);
  }
}

// ---- derivatives -----------------------------------------------------------

void suite_derivatives(SuiteBuilder& b, int samples, std::uint64_t seed) {
  for (GroupId g : kBaseGroups) {
    Sampler rng(seed);
    double w51 = 0, w52 = 0, wbv = 0, w53 = 0, wacc = 0;
    const int nt = tangent_dim(g);
    for (int i = 0; i < samples; ++i) {
      const TangentVector x = rng.tangent(g);
      const TangentVector xd = rng.rate(g);
      const KinematicState st{x, xd};
      auto along = [&](double t) { return TangentVector{g, x.coords() + t * xd.coords()}; };

      w51 = std::max(w51, inf_norm(fd5([&](double t) { return exp_group(along(t)).matrix; }) -
                                   gamma_time_derivative(0, st, false)));
      w52 = std::max(w52, inf_norm(fd5([&](double t) { return adjoint_of(along(t)).matrix; }) -
                                   gamma_time_derivative(0, st, true)));
      const Eigen::MatrixXd Tdot = fd5([&](double t) { return exp_group(along(t)).matrix; });
      wbv = std::max(wbv, inf_norm(Tdot * mat_inverse(exp_group(x).matrix) -
                                   wedge(body_velocity(st))));

      const Eigen::MatrixXd P = partial_gamma0(x, xd);
      for (int c = 0; c < nt; ++c) {
        const Eigen::MatrixXd col = fd5([&](double t) -> Eigen::MatrixXd {
          Eigen::VectorXd xc = x.coords();
          xc[c] += t;
          const TangentVector xt{g, xc};
          const Eigen::MatrixXd J =
              g == GroupId::Sim3 ? jacobian_by_quadrature(xt) : left_jacobian(xt);
          return J * xd.coords();
        });
        w53 = std::max(w53, inf_norm(col - P.col(c)));
      }

      const TangentVector xdd = rng.rate(g);
      const Eigen::MatrixXd vdot = fd5([&](double t) -> Eigen::MatrixXd {
        const TangentVector xt{g, x.coords() + t * xd.coords() + 0.5 * t * t * xdd.coords()};
        const TangentVector xdt{g, xd.coords() + t * xdd.coords()};
        return body_velocity({xt, xdt}).coords();
      });
      wacc = std::max(wacc, inf_norm(vdot - acceleration_term(st, xdd).coords()));
    }
    const std::string n = group_name(g);
    b.item("theorem5.1/" + n, 1e-6, w51);
    b.item("corollary5.2/" + n, 1e-6, w52);
    b.item("body-velocity/" + n, 1e-6, wbv);
    b.item("theorem5.3/" + n, 1e-6, w53);
    b.item("acceleration/" + n, 1e-5, wacc);
  }

  // The two worked SO(3) identities, building-block forms only (no FD).
  Sampler rng(seed + 13);
  double wq = 0, wjd = 0, wgd = 0;
  for (int i = 0; i < samples; ++i) {
    const Eigen::Vector3d phi = rng.phi3();
    const Eigen::Vector3d y = rng.gauss3();
    const TangentVector x{GroupId::SO3, phi};
    const TangentVector yv{GroupId::SO3, y};
    const Eigen::Matrix3d J = gamma_so3(1, phi);
    wq = std::max(wq, inf_norm(partial_gamma0(x, yv) -
                               (gamma3_so3(1, phi, y) - skew3(J * y) * J)));
    const KinematicState st{x, yv};
    wjd = std::max(wjd, inf_norm((gamma_time_derivative(1, st, false) - skew3(J * y) * J) -
                                 partial_gamma0(x, yv)));
    wgd = std::max(wgd, inf_norm(fd5([&](double t) -> Eigen::MatrixXd {
                                   return gamma_so3(1, phi + t * y);
                                 }) -
                                 gamma_time_derivative(1, st, false)));
  }
  b.item("so3/q-identity", 1e-10, wq);
  b.item("so3/jdot-identity", 1e-10, wjd);
  b.item("so3/gamma-dot-l1", 1e-6, wgd);
}

// ---- appendix-lemmas -------------------------------------------------------

void suite_appendix_lemmas(SuiteBuilder& b, int samples, std::uint64_t seed) {
  // Exact: expand (1-a)^n binomially and integrate term by term.
  double exact_bad = 0.0;
  for (int m = 0; m + 0 <= 12; ++m) {
    for (int n = 0; m + n <= 12; ++n) {
      Rational sum(0);
      Rational::Int binom = 1;
      for (int k = 0; k <= n; ++k) {
        const Rational term{(k % 2 == 0 ? binom : -binom), m + k + 1};
        sum = sum + term;
        binom = binom * (n - k) / (k + 1);
      }
      if (!(sum == beta_integral(m, n))) exact_bad += 1.0;
    }
  }
  b.item("beta-exact", 0.0, exact_bad);

  double wq1 = 0.0, wq2 = 0.0;
  for (int m = 0; m <= 12; ++m) {
    for (int n = 0; m + n <= 12; ++n) {
      const Eigen::MatrixXd q1 = quadrature_lift(
          [&](double a) -> Eigen::MatrixXd {
            return Eigen::MatrixXd::Constant(1, 1, std::pow(1.0 - a, n));
          },
          m);
      wq1 = std::max(wq1, std::abs(q1(0, 0) - beta_integral(m, n).to_double()));
      // Nested 2-D quadrature of the Lemma A.2 double integral
      // ∫₀¹∫₀^β αᵐ(1−α)ⁿ dα dβ, inner integral rescaled to [0,1] via α = βu.
      const Eigen::MatrixXd q2 = quadrature_lift(
          [&](double beta) -> Eigen::MatrixXd {
            const Eigen::MatrixXd inner = quadrature_lift(
                [&](double u) -> Eigen::MatrixXd {
                  return Eigen::MatrixXd::Constant(
                      1, 1, std::pow(beta * u, m) * std::pow(1.0 - beta * u, n));
                },
                0);
            return beta * inner;
          },
          0);
      wq2 = std::max(wq2, std::abs(q2(0, 0) - double_beta_integral(m, n).to_double()));
    }
  }
  b.item("beta-quadrature", 1e-12, wq1);
  b.item("double-beta-quadrature", 1e-12, wq2);

  Sampler rng(seed);
  double wa3 = 0, wbin = 0, wb1 = 0, wb1a = 0, wb2 = 0, wjc = 0;
  for (int i = 0; i < samples; ++i) {
    const Eigen::Vector3d phi = rng.phi3();
    const Eigen::Vector3d rho = rng.gauss3();
    const std::array<double, 3> a{rng.normal(), rng.normal(), rng.normal()};
    const std::array<double, 3> bb{rng.normal(), rng.normal(), rng.normal()};
    const Eigen::Matrix3d px = skew3(phi);
    const Eigen::Matrix3d A = a[0] * Eigen::Matrix3d::Identity() + a[1] * px + a[2] * px * px;
    const Eigen::Matrix3d B =
        bb[0] * Eigen::Matrix3d::Identity() + bb[1] * px + bb[2] * px * px;
    wa3 = std::max(wa3, rel_residual(product_expand(a, bb, phi, rho), skew3(A * rho) * B));

    const int m = i % 13;
    Eigen::Matrix3d pm = Eigen::Matrix3d::Identity();
    for (int k = 0; k < m; ++k) pm = pm * px;
    wbin = std::max(wbin, rel_residual(binomial_expand(m, phi, rho), skew3(pm * rho)));

    // Lemma bbinit1 on SO(3) and on the SE(3) adjoint algebra.
    wb1 = std::max(wb1, rel_residual(gamma3_so3(0, phi, rho), series_gamma3(0, px, skew3(rho))));
    const TangentVector xi = rng.tangent(GroupId::SE3);
    const TangentVector eta = rng.rate(GroupId::SE3);
    const TangentVector jy{GroupId::SE3, (left_jacobian(xi) * eta.coords()).eval()};
    wb1a = std::max(wb1a, rel_residual(curlywedge(jy) * adjoint_of(xi).matrix,
                                       series_gamma3(0, curlywedge(xi), curlywedge(eta))));

    const double tau = rng.uniform(-2.0, 2.0);
    SeriesSpec s6;
    s6.block = BlockTemplate::GammaYZTau;
    s6.x = px;
    s6.y = skew3(rho);
    s6.z = px;
    s6.tau = tau;
    wb2 = std::max(wb2, rel_residual(gamma4_so3(0, phi, rho, tau), series_eval(s6)));

    const double nphi = phi.norm();
    const std::array<double, 3> ja{1.0, coeff(CoeffFamily::J, 1, nphi),
                                   coeff(CoeffFamily::J, 2, nphi)};
    const std::array<double, 3> ca{1.0, coeff(CoeffFamily::C, 1, nphi),
                                   coeff(CoeffFamily::C, 2, nphi)};
    wjc = std::max(wjc, rel_residual(product_expand(ja, ca, phi, rho), gamma3_so3(0, phi, rho)));
  }
  b.item("lemma-a3", 1e-12, wa3);
  b.item("binomial", 1e-12, wbin);
  b.item("bbinit1-so3", 1e-12, wb1);
  b.item("bbinit1-adse3", 1e-12, wb1a);
  b.item("bbinit2", 1e-12, wb2);
  b.item("lemma-a3-jc", 1e-12, wjc);
}

// ---- sim3-limits -----------------------------------------------------------

void suite_sim3_limits(SuiteBuilder& b, int samples, std::uint64_t seed) {
  Sampler rng(seed);
  double wlim = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Eigen::Vector3d phi = rng.phi3();
    const Eigen::Vector3d rho = rng.gauss3();
    Eigen::VectorXd c(7);
    c << rho, phi, 1e-10;
    const TangentVector xi{GroupId::Sim3, c};
    const Eigen::Vector3d mr = exp_group(xi).matrix.block(0, 3, 3, 1);
    wlim = std::max(wlim, (mr - gamma_so3(1, phi) * rho).norm() / rho.norm());
  }
  b.item("m-limit", 1e-6, wlim);

  b.item("jacobian-at-zero", 1e-11,
         inf_norm(jacobian_by_quadrature(TangentVector::zero(GroupId::Sim3)) -
                  Eigen::MatrixXd::Identity(7, 7)));

  double wlam = 0.0;
  for (int i = 0; i < std::max(1, samples / 10); ++i) {
    const double lam = rng.uniform(-2.0, 2.0);
    Eigen::VectorXd c = Eigen::VectorXd::Zero(7);
    c[6] = lam;
    const Eigen::MatrixXd J = jacobian_by_quadrature({GroupId::Sim3, c});
    const double want = std::abs(lam) < 1e-12 ? 1.0 : std::expm1(lam) / lam;
    wlam = std::max(
        wlam, inf_norm(J.topLeftCorner(3, 3) - want * Eigen::Matrix3d::Identity()));
  }
  b.item("lambda-only", 1e-9, wlam);
}

// ---- bch-order -------------------------------------------------------------

void suite_bch_order(SuiteBuilder& b, int samples, std::uint64_t seed) {
  Sampler rng(seed);
  std::vector<double> ratios;
  const double eps = 1e-2;
  for (int i = 0; i < samples; ++i) {
    const Eigen::Vector3d p1 = rng.dir3();
    const Eigen::Vector3d p2 = rng.uniform(0.1, 1.0) * rng.dir3();
    const Eigen::Matrix3d Jinv = mat_inverse(gamma_so3(1, p2));
    auto err = [&](double e) {
      return inf_norm(gamma_so3(0, e * p1) * gamma_so3(0, p2) -
                      gamma_so3(0, (Jinv * (e * p1) + p2).eval()));
    };
    ratios.push_back(err(eps) / err(eps / 2.0));
  }
  std::sort(ratios.begin(), ratios.end());
  const double median = ratios[ratios.size() / 2];
  b.item("halving-ratio", 0.0, 3.5 - median);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "minimal-poly", "oracle-exp",  "oracle-adjoint", "jacobian-recursion",
      "adjoint-identity", "table1",  "derivatives",    "appendix-lemmas",
      "sim3-limits",  "bch-order"};
  return names;
}

CheckReport run_suite(const std::string& name, int samples, std::uint64_t seed,
                      const std::map<std::string, double>& tol_overrides) {
  if (samples < 1) throw std::invalid_argument("run_suite: samples >= 1");
  CheckReport report;
  report.suite = name;
  report.seed = seed;
  report.samples = samples;
  SuiteBuilder b{&report, &tol_overrides};
  const auto t0 = std::chrono::steady_clock::now();
  if (name == "minimal-poly") suite_minimal_poly(b, samples, seed);
  else if (name == "oracle-exp") suite_oracle_exp(b, samples, seed);
  else if (name == "oracle-adjoint") suite_oracle_adjoint(b, samples, seed);
  else if (name == "jacobian-recursion") suite_jacobian_recursion(b, samples, seed);
  else if (name == "adjoint-identity") suite_adjoint_identity(b, samples, seed);
  else if (name == "table1") suite_table1(b, samples, seed);
  else if (name == "derivatives") suite_derivatives(b, samples, seed);
  else if (name == "appendix-lemmas") suite_appendix_lemmas(b, samples, seed);
  else if (name == "sim3-limits") suite_sim3_limits(b, samples, seed);
  else if (name == "bch-order") suite_bch_order(b, samples, seed);
  else throw UnknownSuite("unknown suite: " + name);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report.pass = std::all_of(report.items.begin(), report.items.end(),
                            [](const CheckItem& it) { return it.pass; });
  return report;
}

const std::vector<std::pair<std::string, std::string>>& coverage_registry() {
  static const std::vector<std::pair<std::string, std::string>> reg = {
      {"gamma_so3 l=0", "oracle-exp:kernel/gamma_so3_l0"},
      {"gamma_so3 l=1", "oracle-exp:kernel/gamma_so3_l1"},
      {"gamma_so3 l=2", "oracle-exp:kernel/gamma_so3_l2"},
      {"gamma_so2 l=0", "oracle-exp:kernel/gamma_so2_l0"},
      {"gamma_so2 l=1", "oracle-exp:kernel/gamma_so2_l1"},
      {"gamma_so2 l=2", "oracle-exp:kernel/gamma_so2_l2"},
      {"gamma3_so3 l=0 (bbinit1)", "appendix-lemmas:bbinit1-so3"},
      {"gamma3_so3 l=1 (Q)", "oracle-exp:kernel/gamma3_so3_l1"},
      {"gamma_phi_tau l=1", "oracle-exp:kernel/gamma_phi_tau_l1"},
      {"gamma4_so3 l=0 (bbinit2)", "appendix-lemmas:bbinit2"},
      {"gamma4_so3 l=1", "oracle-exp:kernel/gamma4_so3_l1"},
      {"adjoint_se3_monomial", "oracle-exp:kernel/adjoint_se3_monomial"},
      {"jacobian_se3_monomial", "oracle-exp:kernel/jacobian_se3_monomial"},
      {"sim3 translation M", "oracle-exp:kernel/sim3_m"},
      {"exp se2", "oracle-exp:exp/se2"},
      {"exp se3", "oracle-exp:exp/se3"},
      {"exp se23", "oracle-exp:exp/se23"},
      {"exp sgal3", "oracle-exp:exp/sgal3"},
      {"exp sim3", "oracle-exp:exp/sim3"},
      {"adjoint se2", "oracle-adjoint:adjoint/se2"},
      {"adjoint se3", "oracle-adjoint:adjoint/se3"},
      {"adjoint se23", "oracle-adjoint:adjoint/se23"},
      {"adjoint sgal3", "oracle-adjoint:adjoint/sgal3"},
      {"adjoint sim3", "oracle-adjoint:adjoint/sim3"},
      {"left_jacobian se2", "jacobian-recursion:jacobian/se2"},
      {"left_jacobian se3", "jacobian-recursion:jacobian/se3"},
      {"left_jacobian se23", "jacobian-recursion:jacobian/se23"},
      {"left_jacobian sgal3", "jacobian-recursion:jacobian/sgal3"},
      {"theorem 5.1", "derivatives:theorem5.1/so3"},
      {"corollary 5.2", "derivatives:corollary5.2/se3"},
      {"theorem 5.3", "derivatives:theorem5.3/so3"},
      {"body velocity", "derivatives:body-velocity/se3"},
      {"acceleration", "derivatives:acceleration/so3"},
      {"q identity", "derivatives:so3/q-identity"},
      {"jdot identity", "derivatives:so3/jdot-identity"},
      {"lemma a.1", "appendix-lemmas:beta-exact"},
      {"lemma a.2", "appendix-lemmas:double-beta-quadrature"},
      {"lemma a.3", "appendix-lemmas:lemma-a3"},
      {"binomial expansion", "appendix-lemmas:binomial"},
  };
  return reg;
}

}  // namespace liegamma
