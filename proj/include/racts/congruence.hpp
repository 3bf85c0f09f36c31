#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "racts/act.hpp"

namespace racts {

// Right congruence on an act, stored as class_of: state -> class id.
// Class ids are normalized to first-occurrence order, so equal partitions
// have equal representations.
struct Congruence {
  const RightAct* act = nullptr;
  std::vector<int> class_of;
  int num_classes = 0;

  bool same(int x, int y) const { return class_of[x] == class_of[y]; }
  bool is_diagonal() const {
    return num_classes == static_cast<int>(class_of.size());
  }
  bool is_universal() const { return num_classes <= 1; }
  std::vector<std::vector<int>> classes() const;

  bool operator==(const Congruence& other) const {
    return class_of == other.class_of;
  }
};

Congruence diagonal_congruence(const RightAct& act);
Congruence universal_congruence(const RightAct& act);

// Least right congruence containing the given pairs: union-find closure
// with a worklist.  Merging x ~ y enqueues (x*s, y*s) for every s; the
// queue drains to the unique fixpoint, so the result does not depend on
// processing order.
Congruence closure(const RightAct& act,
                   const std::vector<std::pair<int, int>>& pairs);

// rho(x, y): the monocyclic (principal) right congruence.
Congruence monocyclic(const RightAct& act, int x, int y);

// Rees congruence of a subact: b collapsed to one class, rest diagonal.
Congruence rees_congruence(const RightAct& act, const std::vector<int>& b);

Congruence intersect(const Congruence& a, const Congruence& b);

// a refines b: every a-class lies inside a b-class.
bool refines(const Congruence& a, const Congruence& b);

// A subact b with >= 2 states is large when rho_b meets every non-diagonal
// right congruence nontrivially; it suffices to check the monocyclic ones,
// and rho_b /\ rho != diagonal iff some rho-class holds two elements of b.
// On failure the generating pair of the offending congruence is returned.
struct LargenessResult {
  bool large = true;
  std::pair<int, int> witness{-1, -1};
};
LargenessResult is_large(const RightAct& act, const std::vector<int>& b);

// One entry per distinct non-diagonal monocyclic congruence, tagged with
// the first generating pair found for it.
struct PrincipalCongruence {
  Congruence congruence;
  std::pair<int, int> pair;
};

struct CongruenceSummary {
  std::vector<PrincipalCongruence> principal;  // deduplicated
  std::optional<Congruence> least;  // least non-diagonal congruence, if any
  bool si = false;           // subdirectly irreducible
  bool irreducible = false;  // pairwise meets of non-diagonal congruences
  bool uniform = false;      // every >= 2-state subact is large
  std::pair<int, int> uniform_witness{-1, -1};  // pair generating a failing rho
};

// Brute-force-by-definition classification.  The set of non-diagonal
// congruences has a least element iff the intersection of the monocyclic
// ones is non-diagonal (every non-diagonal congruence contains a
// monocyclic one); uniformity reduces to largeness of minimal subacts,
// namely >= 2-state cyclic subacts and zero pairs.
CongruenceSummary summarize(const RightAct& act);

// Every right congruence, via restricted-growth strings filtered for
// right compatibility; guarded to |A| <= 8.  Ordered by the RGS encoding.
std::vector<Congruence> all_congruences_bruteforce(const RightAct& act);

// For a congruence on the regular act of s: is it also left compatible
// (x ~ y implies sx ~ sy)?  Witness is (s, x, y) on failure.
struct TwoSidedResult {
  bool two_sided = true;
  std::array<int, 3> witness{-1, -1, -1};
};
TwoSidedResult two_sided_check(const FiniteSemigroup& s, const Congruence& r);

}  // namespace racts
