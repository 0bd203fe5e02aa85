#pragma once

#include <cstdint>
#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "qhess/groebner.hpp"

namespace qhess {

struct CheckResult {
  std::string id;      // stable check identifier
  std::string params;  // instance parameters, e.g. "i=3 j=1"
  bool pass = false;
  bool resource_error = false;
  std::string witness;  // serialized witness or message on failure
};

struct VerificationReport {
  std::string suite;
  int n_max = 0;
  std::vector<CheckResult> checks;
  double wall_seconds = 0.0;

  bool passed() const;
  bool resource_exhausted() const;
  std::size_t failure_count() const;
  std::string to_text() const;
  nlohmann::json to_json() const;
};

struct VerifyOptions {
  int n_max = 0;  // 0 means the suite default (5, or 4 for Groebner-backed suites)
  std::uint64_t seed = 20240917;
  MonomialOrder order{};
  long degree_bound = 40;
  unsigned threads = 0;  // 0 means hardware concurrency
};

const std::vector<std::string>& suite_names();

/// Runs one named suite ("all" runs every suite and concatenates the checks).
/// Checks are executed on a worker pool and aggregated sorted by id/params.
VerificationReport run_suite(const std::string& suite, const VerifyOptions& opt);

/// Hilbert series of a graded complete intersection with generator degrees
/// `degrees` over variables of degree 2: the coefficient list of
/// prod_j (1 + t^2 + ... + t^(d_j - 2)). Used as the independent prediction
/// for the regular-sequence quotients.
std::vector<std::int64_t> complete_intersection_series(const std::vector<long>& degrees);

}  // namespace qhess
