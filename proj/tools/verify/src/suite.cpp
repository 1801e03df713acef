#include "gmt/verify/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace gmt::verify {

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = [] {
    std::vector<Suite> out;
    register_group_suites(out);
    register_exterior_suites(out);
    register_bundle_suites(out);
    register_chain_suites(out);
    register_calculus_suites(out);
    register_flat_suites(out);
    return out;
  }();
  return all;
}

const Suite* find_suite(const std::string& name) {
  for (const auto& s : suites())
    if (s.name == name) return &s;
  return nullptr;
}

json Report::to_json() const {
  json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["cases_run"] = cases_run;
  j["cases_passed"] = cases_passed;
  j["passed"] = ok();
  if (failing_case) {
    j["counterexample"] = {{"case", *failing_case}, {"detail", failure_detail}, {"inputs", counterexample}};
  } else {
    j["counterexample"] = nullptr;
  }
  j["timing"] = {{"elapsed_ms", io::format_double(elapsed_ms)}};
  return j;
}

unsigned worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("GMT_CHAINS_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) n = static_cast<unsigned>(v);
  }
  return n;
}

namespace {

CaseOutcome guarded(const Suite& suite, std::uint64_t seed, std::size_t index) {
  try {
    return suite.run(seed, index);
  } catch (const Error& e) {
    return CaseOutcome::failure(std::string("unexpected ") + std::string(to_string(e.code())) + ": " + e.what());
  } catch (const std::exception& e) {
    return CaseOutcome::failure(std::string("unexpected exception: ") + e.what());
  }
}

}  // namespace

Report run_suite(const Suite& suite, std::uint64_t seed, std::optional<std::size_t> cases,
                 std::optional<std::size_t> only_case, unsigned workers) {
  const auto start = std::chrono::steady_clock::now();
  Report report;
  report.suite = suite.name;
  report.seed = seed;

  std::vector<std::size_t> indices;
  if (only_case) {
    indices.push_back(*only_case);
  } else {
    const std::size_t n = suite.exhaustive ? *suite.exhaustive : cases.value_or(suite.default_cases);
    indices.resize(n);
    for (std::size_t i = 0; i < n; ++i) indices[i] = i;
  }

  std::vector<CaseOutcome> outcomes(indices.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < indices.size(); k = next++) outcomes[k] = guarded(suite, seed, indices[k]);
  };
  if (workers == 0) workers = worker_count();
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, indices.size())));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  report.cases_run = indices.size();
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    if (outcomes[k].passed) {
      ++report.cases_passed;
    } else if (!report.failing_case) {
      report.failing_case = indices[k];
      report.failure_detail = outcomes[k].detail;
      report.counterexample = std::move(outcomes[k].counterexample);
    }
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace gmt::verify
