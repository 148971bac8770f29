#pragma once

// Exhaustive verification suites for the combinatorial statements about
// B^{(x)N}, B(Y_lambda) and B(lambda).

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qcrystal {

struct Failure {
  std::string input;
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  static constexpr std::size_t kMaxStoredFailures = 100;

  std::string suite;
  std::string parameters;
  std::uint64_t checked = 0;
  std::uint64_t failure_count = 0;
  std::vector<Failure> failures;  ///< first kMaxStoredFailures only
  std::chrono::duration<double> elapsed{0};

  bool passed() const { return failure_count == 0; }
};

struct VerifyBounds {
  int n_max = 4;
  int power_max = 6;
  int shape_max = 6;
  int assoc_trials = 10'000;
  int assoc_length_max = 9;
  std::uint64_t seed = 1729;
};

/// Called for every failure as it is found, before the cap applies.
using FailureSink = std::function<void(const std::string& suite, const Failure&)>;

/// nilpotency, assoc, charhw, strict, e1f1, lemmaA, swib0, branching,
/// reading, weyl, counts.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Throws std::invalid_argument for an unknown suite name.
VerificationReport run_suite(const std::string& name, const VerifyBounds& bounds,
                             const FailureSink& sink = {});

/// One summary line plus one line per stored failure; excludes timing.
std::string report_text(const VerificationReport& r);
std::string report_json(const VerificationReport& r);

}  // namespace qcrystal
