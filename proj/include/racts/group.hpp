#pragma once

#include <vector>

#include "racts/semigroup.hpp"

namespace racts {

// A finite group is a semigroup together with its identity and inverse
// table.  Obtained from as_group, which checks the group axioms.
struct FiniteGroup {
  FiniteSemigroup base;
  int identity = 0;
  std::vector<int> inverse;

  int size() const { return base.size(); }
  int mul(int x, int y) const { return base.mul(x, y); }
  int inv(int x) const { return inverse[x]; }
  const std::string& label(int x) const { return base.label(x); }

  bool operator==(const FiniteGroup& other) const { return base == other.base; }
};

// Checks that s has an identity and that every element has a two-sided
// inverse; throws Error(kNotAGroup) otherwise.
FiniteGroup as_group(const FiniteSemigroup& s);

int element_order(const FiniteGroup& g, int x);

// Cyclic subgroup <x> = {e, x, x^2, ...} sorted by index.
std::vector<int> cyclic_subgroup(const FiniteGroup& g, int x);

// Every subgroup, as sorted index sets, ordered by (size, lexicographic).
// Uses cyclic extension from {e}; guarded to |G| <= 16.
std::vector<std::vector<int>> subgroups(const FiniteGroup& g);

// A finite group is cocyclic when it has a unique minimal nontrivial
// subgroup (equivalently, every nontrivial subgroup contains that one).
// The trivial group is not cocyclic: it has no nontrivial subgroup at all.
struct CocyclicResult {
  bool cocyclic = false;
  std::vector<int> minimal_subgroup;  // the socle when cocyclic, else empty
};
CocyclicResult is_cocyclic(const FiniteGroup& g);

// True when every two nontrivial subgroups intersect nontrivially.  On
// finite groups this is equivalent to cocyclicity; both are exposed so the
// equivalence can be tested rather than assumed.
bool nontrivial_subgroups_pairwise_intersect(const FiniteGroup& g);

}  // namespace racts
