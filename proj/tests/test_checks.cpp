#include <doctest.h>

#include <map>

#include "liegamma/checks.hpp"

using namespace liegamma;

TEST_CASE("unknown suites are rejected") {
  CHECK_THROWS_AS(run_suite("nope", 1, 42), UnknownSuite);
  CHECK_THROWS(run_suite("minimal-poly", 0, 42));
}

TEST_CASE("reports are deterministic in (suite, samples, seed)") {
  for (const std::string& name : suite_names()) {
    const CheckReport a = run_suite(name, 3, 42);
    const CheckReport b = run_suite(name, 3, 42);
    REQUIRE(a.items.size() == b.items.size());
    for (size_t i = 0; i < a.items.size(); ++i) {
      CHECK(a.items[i].name == b.items[i].name);
      CHECK(a.items[i].max_residual == b.items[i].max_residual);  // bit-identical
    }
  }
}

TEST_CASE("tolerance overrides apply") {
  std::map<std::string, double> overrides{{"*", 1e300}};
  const CheckReport r = run_suite("minimal-poly", 2, 42, overrides);
  for (const CheckItem& it : r.items) CHECK(it.tolerance == 1e300);
}

TEST_CASE("every suite passes at desk scale") {
  for (const std::string& name : suite_names()) {
    const CheckReport r = run_suite(name, 10, 42);
    for (const CheckItem& it : r.items) {
      INFO(name << ":" << it.name << " residual " << it.max_residual << " tol "
                << it.tolerance);
      CHECK(it.pass);
    }
  }
}

TEST_CASE("coverage registry resolves and passes") {
  std::map<std::string, CheckReport> cache;
  for (const auto& [closed_form, anchor] : coverage_registry()) {
    const size_t colon = anchor.find(':');
    REQUIRE(colon != std::string::npos);
    const std::string suite = anchor.substr(0, colon);
    const std::string item = anchor.substr(colon + 1);
    if (!cache.count(suite)) cache.emplace(suite, run_suite(suite, 5, 42));
    const CheckReport& rep = cache.at(suite);
    bool found = false;
    for (const CheckItem& it : rep.items) {
      if (it.name == item) {
        found = true;
        INFO(closed_form << " via " << anchor);
        CHECK(it.pass);
      }
    }
    INFO(closed_form << " anchor " << anchor);
    CHECK(found);
  }
}
