#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gmt/io/documents.hpp"

namespace gmt::verify {

using io::json;

/// Result of one seeded case. Inputs go into `counterexample` when the case
/// fails so that the report can be replayed with --case.
struct CaseOutcome {
  bool passed = true;
  std::string detail;
  json counterexample;

  static CaseOutcome pass() { return {}; }
  static CaseOutcome failure(std::string detail, json inputs = json::object()) {
    return {false, std::move(detail), std::move(inputs)};
  }
};

using CaseFn = std::function<CaseOutcome(std::uint64_t seed, std::size_t index)>;

struct Suite {
  std::string name;
  std::string description;
  std::size_t default_cases = 0;
  CaseFn run;
  /// Fixed case count (exhaustive suites); --cases is ignored when set.
  std::optional<std::size_t> exhaustive;
};

/// All registered suites in a stable order.
const std::vector<Suite>& suites();
const Suite* find_suite(const std::string& name);

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t cases_run = 0;
  std::size_t cases_passed = 0;
  std::optional<std::size_t> failing_case;
  std::string failure_detail;
  json counterexample;
  double elapsed_ms = 0.0;

  bool ok() const { return cases_passed == cases_run; }
  json to_json() const;
};

/// Worker count: GMT_CHAINS_THREADS when set (at least 1), else the
/// hardware concurrency.
unsigned worker_count();

/// Runs cases [0, cases) (or just `only_case`) and reports the first failure
/// by case index, so the report does not depend on scheduling.
Report run_suite(const Suite& suite, std::uint64_t seed, std::optional<std::size_t> cases = std::nullopt,
                 std::optional<std::size_t> only_case = std::nullopt, unsigned workers = 0);

// Suite groups, defined across the suites_*.cpp files.
void register_group_suites(std::vector<Suite>& out);
void register_exterior_suites(std::vector<Suite>& out);
void register_bundle_suites(std::vector<Suite>& out);
void register_chain_suites(std::vector<Suite>& out);
void register_calculus_suites(std::vector<Suite>& out);
void register_flat_suites(std::vector<Suite>& out);

}  // namespace gmt::verify
