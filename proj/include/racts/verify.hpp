#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "racts/enumerate.hpp"

namespace racts {

// Named differential/verification suites, runnable from the CLI and reused
// by the acceptance harness.  Each pits a closed-form prediction against
// the brute-force engine, or checks an instantiated structural fact, over
// a deterministic instance stream.
//
//   prop2.6    monocyclic closed form == engine closure (Rees, |I| = 1)
//   thm2.7     si prediction == engine, Rees specs with zero
//   thm2.9     irreducibility prediction == engine, same instance set
//   prop2.5    uniformity prediction == engine, with and without zero
//   thm3.6     rect-band atlas: si agreement + zero-count structure facts
//   thm3.10    rect-band atlas: uniformity agreement + kernel existence
//   prop3.5    rect-band atlas: orbit and order bounds for two-zero si acts
//   remark2.8  least congruence of an si regular act is two-sided
//   cor2.3     uniform regular acts: xy = y forces left identity/left zero
//   prop2.4    uniform acts: >= 2-state subacts pairwise intersect in >= 2
struct SuiteOptions {
  std::vector<std::string> groups;  // empty -> suite default
  int max_i = 0;                    // 0 -> suite default
  int max_lambda = 0;
  int max_states = 0;
  std::uint32_t seed = kDefaultSeed;
  std::uint64_t max_sandwich_samples = 50;
  double budget = kDefaultBudget;
  bool override_budget = false;
};

struct SuiteReport {
  std::string suite;
  bool passed = false;
  std::uint64_t instances = 0;  // instances visited (specs/acts/semigroups)
  std::uint64_t checks = 0;     // individual comparisons made
  std::uint32_t seed = kDefaultSeed;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
};

const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

// Engine-vs-oracle differential: on every act with <= 3 states over the
// two-element right zero semigroup (exhaustive), and on seeded random acts
// over small catalog semigroups, closure(pairs) must equal the least
// congruence containing the pairs among all_congruences_bruteforce.
struct OracleReport {
  bool passed = false;
  std::uint64_t exhaustive_acts = 0;
  std::uint64_t random_acts = 0;
  std::uint64_t checks = 0;
  std::uint32_t seed = kDefaultSeed;
  std::vector<std::string> failures;
};
OracleReport engine_oracle_suite(std::uint32_t seed, int random_acts);

}  // namespace racts
