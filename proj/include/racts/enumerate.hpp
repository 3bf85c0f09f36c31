#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "racts/act.hpp"
#include "racts/closedform.hpp"
#include "racts/rees.hpp"

namespace racts {

inline constexpr std::uint32_t kDefaultSeed = 24601;
inline constexpr double kDefaultBudget = 1e8;

struct EnumerationBounds {
  double budget = kDefaultBudget;  // raw table count n^(n*|S|) must fit
  bool override_budget = false;
  bool dedup = true;  // keep only canonical representatives
};

// Visits every compatible action matrix of s on n states, depth-first in
// row-major cell order with partial-compatibility pruning.  With dedup,
// only canonical representatives are yielded: an act is canonical when no
// state permutation produces a lexicographically smaller flattened matrix.
// The raw search space n^(n*|S|) is checked against the budget up front;
// Error(kBudgetExceeded) suggests --override-budget.
// Return false from the callback to stop early.
void enumerate_acts(const FiniteSemigroup& s, int n_states,
                    const EnumerationBounds& bounds,
                    const std::function<bool(const RightAct&)>& visit);

std::uint64_t count_acts(const FiniteSemigroup& s, int n_states,
                         const EnumerationBounds& bounds);

// True when no state permutation lowers the flattened action matrix.
bool is_canonical_act(const RightAct& act);
RightAct canonical_form(const RightAct& act);

struct ReesEnumerationOptions {
  int max_group_size = 6;
  int max_i = 2;
  int max_lambda = 2;
  bool with_zero = true;
  std::uint64_t max_sandwich_samples = 50;  // exhaustive when space fits
  std::uint32_t seed = kDefaultSeed;
};

// All specs over the named groups with i_size <= max_i, lambda_size <=
// max_lambda.  Sandwich matrices are exhaustive when the raw space is at
// most max_sandwich_samples, otherwise that many distinct seeded samples,
// always including the all-identity matrix; irregular candidates are
// skipped.  Enumeration order (and therefore any report built from it) is
// deterministic for a fixed seed.
void enumerate_rees(const std::vector<std::string>& group_names,
                    const ReesEnumerationOptions& options,
                    const std::function<bool(const ReesMatrixSpec&)>& visit);

// Deterministic seeded sampling helper (splitmix-style mixer; the standard
// distributions are not portable across standard libraries).
class SplitRng {
 public:
  explicit SplitRng(std::uint32_t seed) : state_(seed) {}
  std::uint32_t next();
  std::uint32_t below(std::uint32_t bound);  // uniform-ish in [0, bound)

 private:
  std::uint64_t state_;
};

// Seeded compatible act on n states over s: cells are filled depth-first
// in row-major order with value order shuffled per cell.  The all-constant
// table is always compatible, so the search never fails.
RightAct random_act(const FiniteSemigroup& s, int n_states, SplitRng& rng);

struct AtlasRow {
  std::string act_id;  // flattened action matrix, e.g. "n3:0,0,1,2,2,1"
  int n_states = 0;
  int zero_count = 0;
  bool si = false;
  bool irreducible = false;
  bool uniform = false;
  RectBandVerdict closed_verdict = RectBandVerdict::kNeither;
  RectBandCase case_tag = RectBandCase::kNotClassified;
};

struct AtlasViolation {
  std::string check;  // which agreement or instantiated fact failed
  std::string act_id;
  std::string detail;
};

struct AtlasCensus {
  std::uint64_t acts = 0;
  std::uint64_t si = 0;
  std::uint64_t irreducible = 0;
  std::uint64_t uniform = 0;
  std::uint64_t neither = 0;
};

struct AtlasReport {
  int band_i = 0;
  int band_lambda = 0;
  int max_states = 0;
  bool dedup = true;
  std::uint32_t seed = kDefaultSeed;
  std::vector<AtlasRow> rows;
  std::vector<AtlasViolation> violations;  // must stay empty
  AtlasCensus census;
};

// Enumerates every act (up to isomorphism when dedup) of the I x Lambda
// rectangular band on 1..max_states states; runs the engine and the
// closed-form classifier on each, recording disagreements, plus the
// instantiated structural facts (order bound for si acts without zero,
// orbit/bound facts for two zeros, separation consequences, kernel
// existence for non-separated uniform acts, pairwise subact intersections
// for uniform acts, and the least-congruence shape for si acts).
AtlasReport build_atlas(int band_i, int band_lambda, int max_states,
                        const EnumerationBounds& bounds);

}  // namespace racts
