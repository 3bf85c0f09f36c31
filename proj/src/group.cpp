#include "racts/group.hpp"

#include <algorithm>
#include <set>

namespace racts {

FiniteGroup as_group(const FiniteSemigroup& s) {
  if (!s.identity) {
    throw Error(ErrorKind::kNotAGroup, "semigroup has no identity");
  }
  FiniteGroup g;
  g.base = s;
  g.identity = *s.identity;
  g.inverse.assign(s.size(), -1);
  for (int x = 0; x < s.size(); ++x) {
    for (int y = 0; y < s.size(); ++y) {
      if (s.mul(x, y) == g.identity && s.mul(y, x) == g.identity) {
        g.inverse[x] = y;
        break;
      }
    }
    if (g.inverse[x] < 0) {
      throw Error(ErrorKind::kNotAGroup,
                  "element \"" + s.label(x) + "\" has no inverse", {x, -1, -1});
    }
  }
  return g;
}

int element_order(const FiniteGroup& g, int x) {
  int n = 1;
  int p = x;
  while (p != g.identity) {
    p = g.mul(p, x);
    ++n;
  }
  return n;
}

std::vector<int> cyclic_subgroup(const FiniteGroup& g, int x) {
  std::vector<int> out{g.identity};
  int p = x;
  while (p != g.identity) {
    out.push_back(p);
    p = g.mul(p, x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Closure of a subset under products; in a finite group this is already a
// subgroup (inverses are positive powers).
std::vector<int> generated_subgroup(const FiniteGroup& g, std::vector<int> gens) {
  std::set<int> members(gens.begin(), gens.end());
  members.insert(g.identity);
  std::vector<int> frontier(members.begin(), members.end());
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      for (int y : members) {
        for (int p : {g.mul(x, y), g.mul(y, x)}) {
          if (members.insert(p).second) next.push_back(p);
        }
      }
    }
    frontier = std::move(next);
  }
  return {members.begin(), members.end()};
}

}  // namespace

std::vector<std::vector<int>> subgroups(const FiniteGroup& g) {
  if (g.size() > 16) {
    throw Error(ErrorKind::kSizeLimit,
                "subgroup enumeration limited to |G| <= 16, got " +
                    std::to_string(g.size()));
  }
  // Cyclic extension: grow each known subgroup by one generator until
  // nothing new appears.
  std::set<std::vector<int>> found;
  found.insert({g.identity});
  std::vector<std::vector<int>> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& h : frontier) {
      for (int x = 0; x < g.size(); ++x) {
        if (std::binary_search(h.begin(), h.end(), x)) continue;
        std::vector<int> gens = h;
        gens.push_back(x);
        std::vector<int> bigger = generated_subgroup(g, std::move(gens));
        if (found.insert(bigger).second) next.push_back(std::move(bigger));
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

CocyclicResult is_cocyclic(const FiniteGroup& g) {
  CocyclicResult r;
  std::vector<std::vector<int>> subs = subgroups(g);
  std::vector<std::vector<int>> nontrivial;
  for (auto& h : subs) {
    if (h.size() >= 2) nontrivial.push_back(std::move(h));
  }
  if (nontrivial.empty()) return r;  // trivial group: not cocyclic
  // subs is sorted by size, so a containment-minimum must be the first.
  const std::vector<int>& least = nontrivial.front();
  for (const auto& h : nontrivial) {
    if (!std::includes(h.begin(), h.end(), least.begin(), least.end())) return r;
  }
  r.cocyclic = true;
  r.minimal_subgroup = least;
  return r;
}

bool nontrivial_subgroups_pairwise_intersect(const FiniteGroup& g) {
  std::vector<std::vector<int>> subs = subgroups(g);
  std::vector<const std::vector<int>*> nontrivial;
  for (const auto& h : subs) {
    if (h.size() >= 2) nontrivial.push_back(&h);
  }
  for (size_t a = 0; a < nontrivial.size(); ++a) {
    for (size_t b = a + 1; b < nontrivial.size(); ++b) {
      std::vector<int> meet;
      std::set_intersection(nontrivial[a]->begin(), nontrivial[a]->end(),
                            nontrivial[b]->begin(), nontrivial[b]->end(),
                            std::back_inserter(meet));
      if (meet.size() < 2) return false;  // only the identity in common
    }
  }
  return true;
}

}  // namespace racts
