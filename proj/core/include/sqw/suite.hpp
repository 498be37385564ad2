#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sqw {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  // identity checks passed, independent of the time limit
  bool exact = false;
  double seconds = 0;
  double limit = 0;
  long checks = 0;
  std::string detail;
  // failing cases, at most a handful
  std::vector<std::string> witnesses;
};

struct SuiteOptions {
  std::uint64_t seed = 20240601;
};

constexpr int kCriterionCount = 12;

const char* criterion_name(int id);
double criterion_limit(int id);

// Throws Errc::OutOfRange unless 1 ≤ id ≤ kCriterionCount.
CriterionResult run_criterion(int id, const SuiteOptions& opt = {});
// All criteria when ids is empty.
std::vector<CriterionResult> run_suite(const SuiteOptions& opt = {}, const std::vector<int>& ids = {});

// "[PASS]  3 q-Gauss (0.41 s / 10 s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace sqw
