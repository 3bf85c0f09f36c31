#pragma once

#include <optional>
#include <string>
#include <vector>

#include "racts/congruence.hpp"
#include "racts/rees.hpp"

namespace racts {

// Coordinates of a rectangular band recovered from an abstract semigroup:
// row(x) and col(x) with x*y = element_at[row(x)][col(y)].  Rows and
// columns are numbered by first appearance in the element order.
struct RectBandCoords {
  int i_size = 0;
  int lambda_size = 0;
  std::vector<int> row;
  std::vector<int> col;
  std::vector<std::vector<int>> element_at;
};

// Recognizes rectangular bands structurally (idempotency, x*y*x = x, and
// the product rule over recovered coordinates); throws
// Error(kNotARectangularBand) otherwise.
RectBandCoords recognize_rect_band(const FiniteSemigroup& s);
bool is_rect_band(const FiniteSemigroup& s);

// Monocyclic right congruence rho(m, n) on an act over a Rees matrix
// semigroup with i_size = 1 and a zero, computed from the sandwich data
// alone (no closure): with m = (i,a,l), n = (i,b,u) and
// X = a * p[l][i] * (b * p[u][i])^-1, classes are the <X>-orbit of {m, n}
// and the left <X>-cosets within each remaining column; the zero is a
// singleton.  A pair involving the zero generates the universal relation.
Congruence monocyclic_closed_form(const ReesMatrixSpec& spec,
                                  const RightAct& act, int m, int n);

struct TriplePredicates {
  bool si = false;
  bool irreducible = false;
  bool uniform = false;
};

// Predictions for the regular act of rees_matrix(spec), straight from the
// spec: uniform iff |I| = 1; si iff |I| = |Lambda| = 1 and G is cocyclic;
// irreducible iff |I| = |Lambda| = 1 and the nontrivial subgroups of G
// pairwise intersect.  Semigroups with |S| <= 3 fall outside those
// characterizations and are answered by the engine instead (the 3-element
// case matters: the right zero pair with adjoined zero is right
// subdirectly irreducible and right irreducible but not a 0-group).
TriplePredicates predict_completely_0_simple(const ReesMatrixSpec& spec);

// Same for specs without zero; only uniformity is characterized there:
// uniform iff |I| = 1 (always, when |S| <= 2).
bool predict_completely_simple(const ReesMatrixSpec& spec);

enum class RectBandVerdict { kSi, kUniformNotSi, kNeither };

// Structural case tags for acts over rectangular bands, keyed by the
// number of zero states.
enum class RectBandCase {
  kNoZeroSimplePair,   // no zero: two-state simple act
  kOneZeroKernel,      // one zero: kernel pair {x, y} with Lambda split
  kTwoZeroSeparated,   // two zeros: every pair lands on {z1, z2}
  kNotClassified,
};

const char* rect_band_verdict_name(RectBandVerdict v);
const char* rect_band_case_name(RectBandCase c);

struct RectBandClassification {
  RectBandVerdict verdict = RectBandVerdict::kNeither;
  RectBandCase case_tag = RectBandCase::kNotClassified;
  bool si = false;
  bool uniform = false;
  std::optional<std::pair<int, int>> kernel_pair;  // (x, y) or (z1, z2)
  // Column (lambda) indices sending the kernel pair to its first / second
  // member; both nonempty when present.
  std::optional<std::pair<std::vector<int>, std::vector<int>>> lambda_partition;
  std::vector<int> zeros;
  std::string detail;
};

// Decides si and uniformity of an act over a rectangular band from the
// structure theory for 0, 1, 2 and >= 3 zero states, without running the
// congruence engine.  Acts with at most two states are degenerate for
// every case split: any one-state act is uniform and not si, any
// two-state act is si (the only non-diagonal equivalence is universal).
RectBandClassification classify_act_rect_band(const RightAct& act);

// Consequence check for si acts with exactly two zeros: every nonzero
// state's orbit is exactly the zero pair, and |A| <= 2^|I|.
struct BoundCheckReport {
  bool ok = true;
  std::vector<std::string> violations;
};
BoundCheckReport two_zero_bound_check(const RightAct& act);

}  // namespace racts
