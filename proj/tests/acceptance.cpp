// Acceptance gate: one line per criterion, non-zero exit on any failure.
#include <cstdio>
#include <string>
#include <vector>

#include "liegamma/checks.hpp"

using namespace liegamma;

namespace {

int failures = 0;

void verdict(int number, const std::string& label, bool pass, double worst) {
  std::printf("%s  criterion %2d: %-52s (max residual %.3e)\n", pass ? "PASS" : "FAIL", number,
              label.c_str(), worst);
  if (!pass) ++failures;
}

// Evaluate a suite and reduce over items whose name starts with any prefix
// (empty prefix list = all items).
void criterion(int number, const std::string& label, const std::string& suite, int samples,
               const std::vector<std::string>& prefixes = {}) {
  const CheckReport rep = run_suite(suite, samples, 42);
  bool pass = true;
  double worst = 0.0;
  bool any = false;
  for (const CheckItem& it : rep.items) {
    bool selected = prefixes.empty();
    for (const std::string& p : prefixes)
      if (it.name.rfind(p, 0) == 0) selected = true;
    if (!selected) continue;
    any = true;
    pass = pass && it.pass;
    worst = std::max(worst, it.max_residual);
  }
  verdict(number, label, pass && any, worst);
}

}  // namespace

int main() {
  criterion(1, "closed forms vs generic matrix exponential", "oracle-exp", 200, {"exp/"});
  {
    const CheckReport rep = run_suite("oracle-adjoint", 200, 42);
    bool pass = true;
    double worst = 0.0;
    for (const CheckItem& it : rep.items) {
      pass = pass && it.pass;
      worst = std::max(worst, it.max_residual);
    }
    verdict(1, "adjoint closed forms vs generic matrix exponential", pass, worst);
  }
  criterion(2, "kernel closed forms vs truncated series", "oracle-exp", 200, {"kernel/"});
  criterion(3, "lemma 3.2 recursion via quadrature", "jacobian-recursion", 200);
  criterion(4, "minimal polynomial residuals", "minimal-poly", 1000);
  criterion(5, "adjoint conjugation identity", "adjoint-identity", 200);
  criterion(6, "derivative theorems vs finite differences", "derivatives", 100);
  criterion(7, "appendix lemmas (exact and sampled)", "appendix-lemmas", 200);
  criterion(8, "sim(3) degenerate limits", "sim3-limits", 100);
  criterion(9, "compounding approximation halving order", "bch-order", 50);
  criterion(10, "summary table reproduction", "table1", 20);
  if (failures) std::printf("%d criterion group(s) FAILED\n", failures);
  else std::printf("all acceptance criteria passed\n");
  return failures ? 1 : 0;
}
