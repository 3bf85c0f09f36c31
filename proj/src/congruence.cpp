#include "racts/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace racts {

namespace {

int uf_find(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];  // path halving
    x = parent[x];
  }
  return x;
}

// Normalize a parent forest into first-occurrence class ids.
Congruence from_parents(const RightAct& act, std::vector<int>& parent) {
  Congruence c;
  c.act = &act;
  c.class_of.assign(act.size(), -1);
  for (int x = 0; x < act.size(); ++x) {
    const int root = uf_find(parent, x);
    if (c.class_of[root] < 0) c.class_of[root] = c.num_classes++;
    c.class_of[x] = c.class_of[root];
  }
  return c;
}

void check_same_act(const Congruence& a, const Congruence& b) {
  const bool same =
      a.act == b.act || (a.act != nullptr && b.act != nullptr && *a.act == *b.act);
  if (!same) {
    throw Error(ErrorKind::kActMismatch,
                "congruences belong to different acts");
  }
}

}  // namespace

std::vector<std::vector<int>> Congruence::classes() const {
  std::vector<std::vector<int>> out(num_classes);
  for (int x = 0; x < static_cast<int>(class_of.size()); ++x) {
    out[class_of[x]].push_back(x);
  }
  return out;
}

Congruence diagonal_congruence(const RightAct& act) {
  Congruence c;
  c.act = &act;
  c.class_of.resize(act.size());
  std::iota(c.class_of.begin(), c.class_of.end(), 0);
  c.num_classes = act.size();
  return c;
}

Congruence universal_congruence(const RightAct& act) {
  Congruence c;
  c.act = &act;
  c.class_of.assign(act.size(), 0);
  c.num_classes = act.size() > 0 ? 1 : 0;
  return c;
}

Congruence closure(const RightAct& act,
                   const std::vector<std::pair<int, int>>& pairs) {
  const int n = act.size();
  const int k = act.semigroup.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<std::pair<int, int>> work;
  for (auto [x, y] : pairs) {
    if (x < 0 || x >= n || y < 0 || y >= n) {
      throw Error(ErrorKind::kIndexOutOfRange, "congruence pair out of range",
                  {x, y, n});
    }
    work.emplace_back(x, y);
  }
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    const int rx = uf_find(parent, x);
    const int ry = uf_find(parent, y);
    if (rx == ry) continue;
    parent[ry] = rx;
    // A merge of x ~ y forces x*s ~ y*s; queuing the endpoint images of
    // every merge event reaches the full fixpoint by induction over
    // congruence chains.
    for (int s = 0; s < k; ++s) work.emplace_back(act.act(x, s), act.act(y, s));
  }
  return from_parents(act, parent);
}

Congruence monocyclic(const RightAct& act, int x, int y) {
  return closure(act, {{x, y}});
}

Congruence rees_congruence(const RightAct& act, const std::vector<int>& b) {
  if (!is_subact(act, b)) {
    throw Error(ErrorKind::kNotASubact,
                "rees congruence needs a subact (sorted, nonempty, closed)");
  }
  std::vector<int> parent(act.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (size_t i = 1; i < b.size(); ++i) parent[b[i]] = b[0];
  return from_parents(act, parent);
}

Congruence intersect(const Congruence& a, const Congruence& b) {
  check_same_act(a, b);
  Congruence c;
  c.act = a.act;
  const int n = static_cast<int>(a.class_of.size());
  c.class_of.assign(n, -1);
  std::vector<std::pair<int, int>> seen;  // (a-class, b-class) -> id by order
  for (int x = 0; x < n; ++x) {
    const std::pair<int, int> key{a.class_of[x], b.class_of[x]};
    int id = -1;
    for (size_t i = 0; i < seen.size(); ++i) {
      if (seen[i] == key) {
        id = static_cast<int>(i);
        break;
      }
    }
    if (id < 0) {
      id = static_cast<int>(seen.size());
      seen.push_back(key);
    }
    c.class_of[x] = id;
  }
  c.num_classes = static_cast<int>(seen.size());
  return c;
}

bool refines(const Congruence& a, const Congruence& b) {
  check_same_act(a, b);
  // Each a-class must map into a single b-class.
  std::vector<int> image(a.num_classes, -1);
  for (size_t x = 0; x < a.class_of.size(); ++x) {
    int& slot = image[a.class_of[x]];
    if (slot < 0) {
      slot = b.class_of[x];
    } else if (slot != b.class_of[x]) {
      return false;
    }
  }
  return true;
}

LargenessResult is_large(const RightAct& act, const std::vector<int>& b) {
  if (!is_subact(act, b)) {
    throw Error(ErrorKind::kNotASubact, "largeness is defined for subacts");
  }
  if (b.size() < 2 && b.size() != act.states.size()) {
    throw Error(ErrorKind::kPreconditionViolated,
                "largeness needs a subact with >= 2 states");
  }
  LargenessResult r;
  for (int x = 0; x < act.size(); ++x) {
    for (int y = x + 1; y < act.size(); ++y) {
      const Congruence rho = monocyclic(act, x, y);
      // rho_b meets rho nontrivially iff some rho-class holds two members
      // of b.
      std::vector<int> count(rho.num_classes, 0);
      bool meets = false;
      for (int m : b) {
        if (++count[rho.class_of[m]] >= 2) {
          meets = true;
          break;
        }
      }
      if (!meets) {
        r.large = false;
        r.witness = {x, y};
        return r;
      }
    }
  }
  return r;
}

CongruenceSummary summarize(const RightAct& act) {
  CongruenceSummary out;
  const int n = act.size();
  if (n == 1) {
    // No non-diagonal congruence at all: vacuously not si and not
    // irreducible, and uniform (no subact with >= 2 states).
    out.uniform = true;
    return out;
  }
  {
    std::set<std::vector<int>> seen;
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) {
        Congruence rho = monocyclic(act, x, y);
        if (seen.insert(rho.class_of).second) {
          out.principal.push_back({std::move(rho), {x, y}});
        }
      }
    }
  }
  // Every non-diagonal congruence contains a monocyclic one, so the meet
  // of all non-diagonal congruences equals the meet of the monocyclic
  // ones, and pairwise-meet questions reduce to the monocyclic family.
  // Folding finest-first makes the meet collapse to the diagonal early
  // when it is going to.
  std::vector<size_t> by_fineness(out.principal.size());
  std::iota(by_fineness.begin(), by_fineness.end(), size_t{0});
  std::stable_sort(by_fineness.begin(), by_fineness.end(),
                   [&out](size_t a, size_t b) {
                     return out.principal[a].congruence.num_classes >
                            out.principal[b].congruence.num_classes;
                   });
  Congruence meet = out.principal[by_fineness[0]].congruence;
  for (size_t i = 1; i < by_fineness.size() && !meet.is_diagonal(); ++i) {
    meet = intersect(meet, out.principal[by_fineness[i]].congruence);
  }
  if (!meet.is_diagonal()) {
    out.si = true;
    out.least = std::move(meet);
  }
  out.irreducible = true;
  for (size_t i = 0; i < by_fineness.size() && out.irreducible; ++i) {
    for (size_t j = i + 1; j < by_fineness.size() && out.irreducible; ++j) {
      out.irreducible = !intersect(out.principal[by_fineness[i]].congruence,
                                   out.principal[by_fineness[j]].congruence)
                             .is_diagonal();
    }
  }
  // Uniformity: largeness is inherited upward, and every subact with >= 2
  // states contains a >= 2-state cyclic subact or a pair of zeros, so it
  // is enough to test those.
  out.uniform = true;
  std::vector<std::vector<int>> family;
  {
    std::set<std::vector<int>> distinct;
    for (int x = 0; x < n; ++x) {
      std::vector<int> cyc = cyclic_subact(act, x);
      if (cyc.size() >= 2) distinct.insert(std::move(cyc));
    }
    std::vector<int> zeros = zero_states(act);
    for (size_t a = 0; a < zeros.size(); ++a) {
      for (size_t b = a + 1; b < zeros.size(); ++b) {
        distinct.insert({zeros[a], zeros[b]});
      }
    }
    family.assign(distinct.begin(), distinct.end());
  }
  for (const std::vector<int>& b : family) {
    for (const PrincipalCongruence& p : out.principal) {
      std::vector<int> count(p.congruence.num_classes, 0);
      bool meets = false;
      for (int m : b) {
        if (++count[p.congruence.class_of[m]] >= 2) {
          meets = true;
          break;
        }
      }
      if (!meets) {
        out.uniform = false;
        out.uniform_witness = p.pair;
        break;
      }
    }
    if (!out.uniform) break;
  }
  return out;
}

std::vector<Congruence> all_congruences_bruteforce(const RightAct& act) {
  const int n = act.size();
  if (n > 8) {
    throw Error(ErrorKind::kSizeLimit,
                "congruence enumeration limited to 8 states, act has " +
                    std::to_string(n));
  }
  const int k = act.semigroup.size();
  std::vector<Congruence> out;
  std::vector<int> rgs(n, 0);
  // Restricted growth strings enumerate set partitions exactly once.
  while (true) {
    bool compatible = true;
    for (int x = 0; x < n && compatible; ++x) {
      for (int y = x + 1; y < n && compatible; ++y) {
        if (rgs[x] != rgs[y]) continue;
        for (int s = 0; s < k; ++s) {
          if (rgs[act.act(x, s)] != rgs[act.act(y, s)]) {
            compatible = false;
            break;
          }
        }
      }
    }
    if (compatible) {
      Congruence c;
      c.act = &act;
      c.class_of = rgs;
      c.num_classes = *std::max_element(rgs.begin(), rgs.end()) + 1;
      out.push_back(std::move(c));
    }
    // Next RGS: increment the rightmost position that can still grow.
    int pos = n - 1;
    for (; pos > 0; --pos) {
      int cap = 0;
      for (int i = 0; i < pos; ++i) cap = std::max(cap, rgs[i]);
      if (rgs[pos] <= cap) break;
    }
    if (pos == 0) break;
    ++rgs[pos];
    for (int i = pos + 1; i < n; ++i) rgs[i] = 0;
  }
  return out;
}

TwoSidedResult two_sided_check(const FiniteSemigroup& s, const Congruence& r) {
  if (static_cast<int>(r.class_of.size()) != s.size()) {
    throw Error(ErrorKind::kActMismatch,
                "congruence does not live on the regular act of this semigroup");
  }
  TwoSidedResult out;
  for (int x = 0; x < s.size(); ++x) {
    for (int y = x + 1; y < s.size(); ++y) {
      if (!r.same(x, y)) continue;
      for (int t = 0; t < s.size(); ++t) {
        if (!r.same(s.mul(t, x), s.mul(t, y))) {
          out.two_sided = false;
          out.witness = {t, x, y};
          return out;
        }
      }
    }
  }
  return out;
}

}  // namespace racts
