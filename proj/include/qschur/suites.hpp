#pragma once

// Verification suites behind `qschur verify`.  Each suite runs a fixed
// exhaustive core and, where it has one, a seeded random extension, and
// returns a report whose JSON form is deterministic for a given config.

#include "qschur/json_io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qschur {

struct SuiteConfig {
  /// Unset fields take the suite's own default.
  std::optional<int> n;
  std::optional<int> r_max;
  std::optional<int> l;
  std::optional<int> bound;
  int oracle_cap = kDefaultOracleCap;
  std::uint64_t seed = 1;
  int random_count = 200;
  /// Corrupts one coefficient of the formula output (harness self-test).
  bool inject_fault = false;
};

struct SuiteReport {
  std::string suite;
  Json parameters = Json::object();
  std::size_t instances = 0;
  std::size_t failure_count = 0;
  /// The first few failures with full reproduction data.
  Json failures = Json::array();
  /// Suite-specific findings (ranks, observed coefficient ring, ...).
  Json details = Json::object();
  bool passed() const { return failure_count == 0; }
  void record_failure(Json f);
  Json to_json() const;
};

/// Names accepted by run_suite, in a fixed order.
const std::vector<std::string>& suite_names();

/// Throws DomainError on an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);

SuiteReport verify_binomials(const SuiteConfig& cfg);
SuiteReport verify_blm_formulas(const SuiteConfig& cfg);
SuiteReport verify_formula1(const SuiteConfig& cfg);
SuiteReport verify_formula2(const SuiteConfig& cfg);
SuiteReport verify_closure(const SuiteConfig& cfg);
SuiteReport verify_relations(const SuiteConfig& cfg);
SuiteReport verify_triangular(const SuiteConfig& cfg);
SuiteReport verify_pbw_independence(const SuiteConfig& cfg);
SuiteReport verify_realization(const SuiteConfig& cfg);
SuiteReport verify_specialization(const SuiteConfig& cfg);
SuiteReport verify_basis_count(const SuiteConfig& cfg);

}  // namespace qschur
