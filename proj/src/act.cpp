#include "racts/act.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace racts {

int RightAct::state_index(const std::string& label) const {
  for (int i = 0; i < size(); ++i) {
    if (states[i] == label) return i;
  }
  return -1;
}

ValidationResult validate_act(const FiniteSemigroup& semigroup,
                              const std::vector<std::string>& states,
                              const std::vector<std::vector<int>>& action) {
  ValidationResult r;
  auto fail = [&r](ErrorKind kind, std::array<int, 3> witness,
                   std::string msg) {
    r.ok = false;
    r.kind = kind;
    r.witness = witness;
    r.message = std::move(msg);
    return r;
  };
  const int n = static_cast<int>(states.size());
  const int k = semigroup.size();
  if (n == 0) {
    return fail(ErrorKind::kShapeMismatch, {-1, -1, -1},
                "act must have at least one state");
  }
  if (static_cast<int>(action.size()) != n) {
    return fail(ErrorKind::kShapeMismatch,
                {static_cast<int>(action.size()), n, -1},
                "action has " + std::to_string(action.size()) +
                    " rows, expected " + std::to_string(n));
  }
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(action[a].size()) != k) {
      return fail(ErrorKind::kShapeMismatch,
                  {a, static_cast<int>(action[a].size()), k},
                  "action row " + std::to_string(a) + " has " +
                      std::to_string(action[a].size()) + " entries, expected " +
                      std::to_string(k));
    }
    for (int s = 0; s < k; ++s) {
      if (action[a][s] < 0 || action[a][s] >= n) {
        return fail(ErrorKind::kIndexOutOfRange, {a, s, action[a][s]},
                    "action[" + std::to_string(a) + "][" + std::to_string(s) +
                        "] out of range");
      }
    }
  }
  std::unordered_set<std::string> seen;
  for (int i = 0; i < n; ++i) {
    if (!seen.insert(states[i]).second) {
      return fail(ErrorKind::kShapeMismatch, {i, -1, -1},
                  "duplicate state label \"" + states[i] + "\"");
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int s = 0; s < k; ++s) {
      for (int t = 0; t < k; ++t) {
        if (action[action[a][s]][t] != action[a][semigroup.mul(s, t)]) {
          return fail(ErrorKind::kIncompatibleAction, {a, s, t},
                      "(" + states[a] + " * " + semigroup.label(s) + ") * " +
                          semigroup.label(t) + " != " + states[a] + " * (" +
                          semigroup.label(s) + " " + semigroup.label(t) + ")");
        }
      }
    }
  }
  return r;
}

RightAct make_act(FiniteSemigroup semigroup, std::vector<std::string> states,
                  std::vector<std::vector<int>> action) {
  ValidationResult v = validate_act(semigroup, states, action);
  if (!v.ok) throw Error(v.kind, v.message, v.witness);
  RightAct act;
  act.semigroup = std::move(semigroup);
  act.states = std::move(states);
  act.action = std::move(action);
  return act;
}

RightAct regular_act(const FiniteSemigroup& s) {
  RightAct act;
  act.states = s.elements;
  act.action = s.table;
  act.semigroup = s;
  return act;
}

std::vector<int> zero_states(const RightAct& act) {
  std::vector<int> zeros;
  for (int a = 0; a < act.size(); ++a) {
    bool fixed = true;
    for (int s = 0; s < act.semigroup.size() && fixed; ++s) {
      fixed = act.act(a, s) == a;
    }
    if (fixed) zeros.push_back(a);
  }
  return zeros;
}

std::vector<int> orbit(const RightAct& act, int x) {
  std::set<int> out;
  for (int s = 0; s < act.semigroup.size(); ++s) out.insert(act.act(x, s));
  return {out.begin(), out.end()};
}

std::vector<int> cyclic_subact(const RightAct& act, int x) {
  std::vector<int> orb = orbit(act, x);
  if (!std::binary_search(orb.begin(), orb.end(), x)) {
    orb.insert(std::lower_bound(orb.begin(), orb.end(), x), x);
  }
  return orb;
}

bool is_subact(const RightAct& act, const std::vector<int>& b) {
  if (b.empty()) return false;
  if (!std::is_sorted(b.begin(), b.end())) return false;
  for (size_t i = 0; i + 1 < b.size(); ++i) {
    if (b[i] == b[i + 1]) return false;
  }
  for (int x : b) {
    if (x < 0 || x >= act.size()) return false;
    for (int s = 0; s < act.semigroup.size(); ++s) {
      if (!std::binary_search(b.begin(), b.end(), act.act(x, s))) return false;
    }
  }
  return true;
}

bool separates(const RightAct& act, int x, int y) {
  for (int s = 0; s < act.semigroup.size(); ++s) {
    if (act.act(x, s) != act.act(y, s)) return true;
  }
  return false;
}

bool is_separated(const RightAct& act) {
  for (int x = 0; x < act.size(); ++x) {
    for (int y = x + 1; y < act.size(); ++y) {
      if (!separates(act, x, y)) return false;
    }
  }
  return true;
}

namespace {

// The minimal family: every subact with >= 2 states contains either a
// two-state-or-bigger cyclic subact or two distinct zeros, and each family
// member is itself a subact with >= 2 states.
std::vector<std::vector<int>> minimal_family(const RightAct& act) {
  std::set<std::vector<int>> family;
  for (int x = 0; x < act.size(); ++x) {
    std::vector<int> cyc = cyclic_subact(act, x);
    if (cyc.size() >= 2) family.insert(std::move(cyc));
  }
  std::vector<int> zeros = zero_states(act);
  for (size_t a = 0; a < zeros.size(); ++a) {
    for (size_t b = a + 1; b < zeros.size(); ++b) {
      family.insert({zeros[a], zeros[b]});
    }
  }
  return {family.begin(), family.end()};
}

}  // namespace

std::optional<std::vector<int>> kernel_of(const RightAct& act) {
  std::vector<std::vector<int>> family = minimal_family(act);
  if (family.empty()) return std::nullopt;  // no subact with >= 2 states
  std::vector<int> meet = family.front();
  for (size_t i = 1; i < family.size() && meet.size() >= 2; ++i) {
    std::vector<int> next;
    std::set_intersection(meet.begin(), meet.end(), family[i].begin(),
                          family[i].end(), std::back_inserter(next));
    meet = std::move(next);
  }
  if (meet.size() < 2) return std::nullopt;  // no containment-minimum
  return meet;
}

ActAnalysis analyze(const RightAct& act, int max_states) {
  if (act.size() > max_states) {
    throw Error(ErrorKind::kSizeLimit,
                "subact enumeration limited to " + std::to_string(max_states) +
                    " states, act has " + std::to_string(act.size()));
  }
  ActAnalysis out;
  out.zeros = zero_states(act);
  out.kernel = kernel_of(act);
  out.separated = is_separated(act);

  // Every subact is a union of cyclic subacts x*S^1, so the subact lattice
  // is exactly the set of unions of the distinct cyclic ones.
  std::vector<std::vector<int>> cyclic;
  {
    std::set<std::vector<int>> distinct;
    for (int x = 0; x < act.size(); ++x) distinct.insert(cyclic_subact(act, x));
    cyclic.assign(distinct.begin(), distinct.end());
  }
  std::set<std::vector<int>> subacts;
  const size_t m = cyclic.size();
  for (std::uint64_t mask = 1; mask < (1ull << m); ++mask) {
    std::set<int> u;
    for (size_t i = 0; i < m; ++i) {
      if (mask & (1ull << i)) u.insert(cyclic[i].begin(), cyclic[i].end());
    }
    subacts.insert(std::vector<int>(u.begin(), u.end()));
  }
  out.subacts.assign(subacts.begin(), subacts.end());
  std::sort(out.subacts.begin(), out.subacts.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return out;
}

}  // namespace racts
