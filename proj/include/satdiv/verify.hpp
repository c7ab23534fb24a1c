#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace satdiv::verify {

struct VerifyOptions {
  std::uint64_t seed = 20240611;
};

struct Outcome {
  bool pass = false;
  std::string expected;
  std::string actual;
};

struct Criterion {
  std::string id;     // "C1" .. "C12"
  std::string suite;  // tables | bounds | algorithms | reductions
  std::string title;
  double time_limit_seconds = 60;
  std::function<Outcome(const VerifyOptions&)> run;
};

struct CriterionResult {
  std::string id;
  std::string suite;
  std::string title;
  Outcome outcome;
  double seconds = 0;
  double time_limit_seconds = 0;

  bool within_time() const { return seconds <= time_limit_seconds; }
};

const std::vector<Criterion>& criteria();

/// tables, bounds, algorithms, reductions, all.
const std::vector<std::string>& suite_names();

/// Runs every criterion of the suite in order. Unknown suite names throw BadParam.
std::vector<CriterionResult> run_suite(std::string_view suite, const VerifyOptions& options = {});

CriterionResult run_criterion(const Criterion& c, const VerifyOptions& options = {});

}  // namespace satdiv::verify
