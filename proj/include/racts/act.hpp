#pragma once

#include <optional>
#include <string>
#include <vector>

#include "racts/semigroup.hpp"

namespace racts {

// Right act of a finite semigroup on a finite state set: action[a][s] is
// the index of a * s, subject to a(st) = (as)t.
struct RightAct {
  FiniteSemigroup semigroup;
  std::vector<std::string> states;
  std::vector<std::vector<int>> action;

  int size() const { return static_cast<int>(states.size()); }
  int act(int a, int s) const { return action[a][s]; }
  const std::string& state_label(int a) const { return states[a]; }
  int state_index(const std::string& label) const;  // -1 when absent

  bool operator==(const RightAct& other) const {
    return semigroup == other.semigroup && states == other.states &&
           action == other.action;
  }
};

// Shape, range, label uniqueness and the compatibility law; the first
// violating triple (a, s, t) in lexicographic scan order is the witness.
RightAct make_act(FiniteSemigroup semigroup, std::vector<std::string> states,
                  std::vector<std::vector<int>> action);
ValidationResult validate_act(const FiniteSemigroup& semigroup,
                              const std::vector<std::string>& states,
                              const std::vector<std::vector<int>>& action);

// S acting on itself by right multiplication; states share S's labels.
RightAct regular_act(const FiniteSemigroup& s);

// States fixed by every semigroup element.
std::vector<int> zero_states(const RightAct& act);

// x * S (the orbit) and x * S^1 = orbit plus x itself; sorted index sets.
std::vector<int> orbit(const RightAct& act, int x);
std::vector<int> cyclic_subact(const RightAct& act, int x);

// b (sorted, duplicate-free) is a subact when it is nonempty and closed
// under the action.
bool is_subact(const RightAct& act, const std::vector<int>& b);

// Distinct states x, y are separated when x*s != y*s for some s in S; the
// act is separated when every distinct pair is.
bool separates(const RightAct& act, int x, int y);
bool is_separated(const RightAct& act);

// Kernel: the containment-minimum subact with >= 2 states, when one
// exists.  Computed as the intersection of all >= 2-state cyclic subacts
// x*S^1 and all two-element zero sets {z1, z2}; every >= 2-state subact
// contains a member of that family, so the intersection equals the
// intersection of all >= 2-state subacts.
std::optional<std::vector<int>> kernel_of(const RightAct& act);

inline constexpr int kDefaultSubactBound = 12;

struct ActAnalysis {
  std::vector<int> zeros;
  std::vector<std::vector<int>> subacts;  // all subacts, by (size, lex)
  std::optional<std::vector<int>> kernel;
  bool separated = false;
};

// Full analysis including the subact list.  Subact enumeration is bounded:
// acts with more than max_states states throw Error(kSizeLimit).
ActAnalysis analyze(const RightAct& act, int max_states = kDefaultSubactBound);

}  // namespace racts
