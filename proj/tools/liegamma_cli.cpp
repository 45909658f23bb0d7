// liegamma: evaluate group maps, run check suites, reproduce the summary table.
#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "liegamma/checks.hpp"
#include "liegamma/core.hpp"
#include "liegamma/groups.hpp"
#include "liegamma/oracles.hpp"
#include "liegamma/so3_blocks.hpp"

namespace {

using namespace liegamma;

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("LIEGAMMA_SEED")) return std::strtoull(env, nullptr, 10);
  return 42;
}

std::vector<double> parse_xi(const std::string& s) {
  std::vector<double> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    const size_t comma = s.find(',', pos);
    const std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (!tok.empty()) out.push_back(std::stod(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

TangentVector make_tangent(GroupId g, const std::string& xi_str) {
  const std::vector<double> values = parse_xi(xi_str);
  const int n = tangent_dim(g);
  if (static_cast<int>(values.size()) != n) {
    throw std::invalid_argument(std::string(group_name(g)) + " expects " + std::to_string(n) +
                                " comma-separated coordinates (printed component order)");
  }
  Eigen::VectorXd c(n);
  for (int i = 0; i < n; ++i) c[i] = values[i];
  return {g, c};
}

void print_matrix(const Eigen::MatrixXd& m, const std::string& group,
                  const std::string& quantity, const std::string& format) {
  if (format == "json") {
    std::string out = "{\"group\":\"" + group + "\",\"quantity\":\"" + quantity + "\",\"rows\":[";
    for (int r = 0; r < m.rows(); ++r) {
      out += r ? ",[" : "[";
      for (int c = 0; c < m.cols(); ++c) out += (c ? "," : "") + fmt17(m(r, c));
      out += "]";
    }
    out += "]}";
    std::cout << out << "\n";
  } else if (format == "csv") {
    for (int r = 0; r < m.rows(); ++r) {
      for (int c = 0; c < m.cols(); ++c) std::cout << (c ? "," : "") << fmt17(m(r, c));
      std::cout << "\n";
    }
  } else {
    std::cout << group << " " << quantity << " (" << m.rows() << "x" << m.cols() << "):\n";
    for (int r = 0; r < m.rows(); ++r) {
      for (int c = 0; c < m.cols(); ++c) std::printf("% 14.8g", m(r, c));
      std::printf("\n");
    }
  }
}

int print_report(const CheckReport& rep, const std::string& format) {
  if (format == "json") {
    std::string out = "{\"suite\":\"" + rep.suite + "\",\"seed\":" + std::to_string(rep.seed) +
                      ",\"samples\":" + std::to_string(rep.samples) +
                      ",\"pass\":" + (rep.pass ? "true" : "false") +
                      ",\"wall_seconds\":" + fmt17(rep.wall_seconds) + ",\"items\":[";
    bool first = true;
    for (const CheckItem& it : rep.items) {
      if (!first) out += ",";
      first = false;
      out += "{\"name\":\"" + it.name + "\",\"max_residual\":" + fmt17(it.max_residual) +
             ",\"tolerance\":" + fmt17(it.tolerance) +
             ",\"pass\":" + (it.pass ? "true" : "false") + "}";
    }
    out += "]}";
    std::cout << out << "\n";
  } else if (format == "csv") {
    std::cout << "suite,item,max_residual,tolerance,status\n";
    for (const CheckItem& it : rep.items)
      std::cout << rep.suite << "," << it.name << "," << fmt17(it.max_residual) << ","
                << fmt17(it.tolerance) << "," << (it.pass ? "pass" : "fail") << "\n";
  } else {
    std::printf("suite %-18s seed %llu  samples %d  %.3fs  %s\n", rep.suite.c_str(),
                static_cast<unsigned long long>(rep.seed), rep.samples, rep.wall_seconds,
                rep.pass ? "PASS" : "FAIL");
    for (const CheckItem& it : rep.items)
      std::printf("  %-32s %-12.3e tol %-8.0e %s\n", it.name.c_str(), it.max_residual,
                  it.tolerance, it.pass ? "pass" : "FAIL");
  }
  return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"liegamma: closed-form Lie group building blocks and their verification"};
  app.require_subcommand(1);

  std::string group_str = "se3", xi_str, format = "pretty", suite = "all";
  int ell = 0;
  int samples = -1;
  std::uint64_t seed = default_seed();
  double tol = -1.0;

  auto add_common = [&](CLI::App* cmd, bool needs_xi) {
    cmd->add_option("--group", group_str, "group id: so2 se2 so3 se3 se23 sgal3 sim3");
    if (needs_xi)
      cmd->add_option("--xi", xi_str, "tangent coordinates, comma-separated")->required();
    cmd->add_option("--format", format, "json | csv | pretty");
  };

  CLI::App* cmd_exp = app.add_subcommand("exp", "group element exp(xi^)");
  add_common(cmd_exp, true);
  CLI::App* cmd_adj = app.add_subcommand("adjoint", "adjoint matrix exp(xi^curlywedge)");
  add_common(cmd_adj, true);
  CLI::App* cmd_jac = app.add_subcommand("jacobian", "left Jacobian (quadrature for sim3)");
  add_common(cmd_jac, true);
  CLI::App* cmd_gamma = app.add_subcommand("gamma", "Gamma_ell(xi^)");
  add_common(cmd_gamma, true);
  cmd_gamma->add_option("--ell", ell, "series index, >= 0");

  CLI::App* cmd_check = app.add_subcommand("check", "run a property suite");
  cmd_check->add_option("--suite", suite, "suite id or 'all'");
  cmd_check->add_option("--samples", samples, "samples per check");
  cmd_check->add_option("--seed", seed, "rng seed (env LIEGAMMA_SEED overrides default)");
  cmd_check->add_option("--tol", tol, "override every tolerance");
  cmd_check->add_option("--format", format, "json | csv | pretty");

  CLI::App* cmd_table = app.add_subcommand("table1", "summary-table residual report");
  cmd_table->add_option("--samples", samples, "sampled xi per group (default 20)");
  cmd_table->add_option("--seed", seed, "rng seed");
  cmd_table->add_option("--format", format, "json | csv | pretty");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*cmd_exp || *cmd_adj || *cmd_jac || *cmd_gamma) {
      const GroupId g = parse_group(group_str);
      const TangentVector xi = make_tangent(g, xi_str);
      Eigen::MatrixXd m;
      std::string quantity;
      if (*cmd_exp) {
        m = exp_group(xi).matrix;
        quantity = "exp";
      } else if (*cmd_adj) {
        m = adjoint_of(xi).matrix;
        quantity = "adjoint";
      } else if (*cmd_jac) {
        m = g == GroupId::Sim3 ? jacobian_by_quadrature(xi) : left_jacobian(xi);
        quantity = "jacobian";
      } else {
        if (g == GroupId::SO3) m = gamma_so3(ell, xi.phi3());
        else if (g == GroupId::SO2) m = gamma_so2(ell, xi.phi_scalar());
        else {
          SeriesSpec s;
          s.ell = ell;
          s.x = wedge(xi);
          m = series_eval(s);
        }
        quantity = "gamma_" + std::to_string(ell);
      }
      print_matrix(m, group_name(g), quantity, format);
      return 0;
    }
    if (*cmd_check) {
      std::map<std::string, double> overrides;
      if (tol > 0) overrides["*"] = tol;
      int rc = 0;
      if (suite == "all") {
        for (const std::string& name : suite_names())
          rc |= print_report(run_suite(name, samples > 0 ? samples : 100, seed, overrides),
                             format);
      } else {
        rc = print_report(run_suite(suite, samples > 0 ? samples : 100, seed, overrides),
                          format);
      }
      return rc;
    }
    // table1
    const CheckReport rep = run_suite("table1", samples > 0 ? samples : 20, seed, {});
    if (format == "csv") {
      std::cout << "group,quantity,max_abs_residual,tolerance,status\n";
      for (const CheckItem& it : rep.items) {
        const size_t slash = it.name.find('/');
        std::cout << it.name.substr(0, slash) << "," << it.name.substr(slash + 1) << ","
                  << fmt17(it.max_residual) << "," << fmt17(it.tolerance) << ","
                  << (it.pass ? "pass" : "fail") << "\n";
      }
      return rep.pass ? 0 : 1;
    }
    return print_report(rep, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
