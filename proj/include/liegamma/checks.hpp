#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "liegamma/types.hpp"

namespace liegamma {

struct CheckItem {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct CheckReport {
  std::string suite;
  std::uint64_t seed = 0;
  int samples = 0;
  std::vector<CheckItem> items;
  bool pass = false;
  double wall_seconds = 0.0;
};

// Valid suite ids, in canonical order.
const std::vector<std::string>& suite_names();

// Deterministic given (name, samples, seed).  tol_overrides maps item name
// (or "*") to a replacement tolerance.
CheckReport run_suite(const std::string& name, int samples, std::uint64_t seed,
                      const std::map<std::string, double>& tol_overrides = {});

// (closed form, "suite:item") pairs tying every closed form to the suite
// item exercising it; a registry test asserts the items exist and pass.
const std::vector<std::pair<std::string, std::string>>& coverage_registry();

}  // namespace liegamma
