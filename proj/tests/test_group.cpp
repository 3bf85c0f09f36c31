#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "racts/catalog.hpp"
#include "racts/group.hpp"

using namespace racts;

TEST_CASE("as_group accepts groups and rejects plain semigroups") {
  FiniteGroup z3 = cyclic_group(3);
  REQUIRE(z3.identity == 0);
  REQUIRE(z3.inv(1) == 2);
  REQUIRE(z3.inv(0) == 0);
  FiniteSemigroup rz = rectangular_band(1, 2);
  REQUIRE_THROWS_AS(as_group(rz), Error);
  try {
    as_group(rz);
  } catch (const Error& e) {
    REQUIRE(e.kind() == ErrorKind::kNotAGroup);
  }
}

TEST_CASE("element_order and cyclic_subgroup") {
  FiniteGroup z12 = cyclic_group(12);
  REQUIRE(element_order(z12, 0) == 1);
  REQUIRE(element_order(z12, 1) == 12);
  REQUIRE(element_order(z12, 4) == 3);
  REQUIRE(cyclic_subgroup(z12, 4) == std::vector<int>{0, 4, 8});
  FiniteGroup q8 = group_by_name("Q8");
  for (int x = 0; x < q8.size(); ++x) {
    std::vector<int> c = cyclic_subgroup(q8, x);
    REQUIRE(static_cast<int>(c.size()) == element_order(q8, x));
  }
}

TEST_CASE("subgroups match the subset-filter oracle on the whole catalog") {
  for (const std::string& name : catalog_group_names()) {
    FiniteGroup g = group_by_name(name);
    CAPTURE(name);
    REQUIRE(subgroups(g) == oracles::subgroups_by_filter(g));
  }
}

TEST_CASE("subgroup counts on known groups") {
  std::map<std::string, int> expected = {
      {"Z1", 1}, {"Z4", 3},  {"Z6", 4}, {"Z12", 6},
      {"V4", 5}, {"S3", 6},  {"Q8", 6},
  };
  for (const auto& [name, count] : expected) {
    CAPTURE(name);
    REQUIRE(static_cast<int>(subgroups(group_by_name(name)).size()) == count);
  }
}

TEST_CASE("cocyclic groups are exactly those with a unique minimal subgroup") {
  std::map<std::string, bool> expected = {
      {"Z1", false}, {"Z2", true},  {"Z3", true},  {"Z4", true},
      {"Z5", true},  {"Z6", false}, {"Z7", true},  {"Z8", true},
      {"Z9", true},  {"Z10", false}, {"Z11", true}, {"Z12", false},
      {"V4", false}, {"S3", false}, {"Q8", true},
  };
  for (const auto& [name, want] : expected) {
    FiniteGroup g = group_by_name(name);
    CAPTURE(name);
    CocyclicResult r = is_cocyclic(g);
    REQUIRE(r.cocyclic == want);
    if (want) {
      // the socle is a nontrivial subgroup contained in every other one
      REQUIRE(r.minimal_subgroup.size() >= 2);
      for (const std::vector<int>& h : subgroups(g)) {
        if (h.size() < 2) continue;
        REQUIRE(std::includes(h.begin(), h.end(), r.minimal_subgroup.begin(),
                              r.minimal_subgroup.end()));
      }
    }
  }
}

TEST_CASE("Q8 socle is the center pair") {
  FiniteGroup q8 = group_by_name("Q8");
  CocyclicResult r = is_cocyclic(q8);
  REQUIRE(r.cocyclic);
  REQUIRE(r.minimal_subgroup.size() == 2);
  int minus_one = r.minimal_subgroup[1];
  REQUIRE(q8.mul(minus_one, minus_one) == q8.identity);
}

TEST_CASE("pairwise subgroup intersection coincides with cocyclicity") {
  // finite nontrivial case: both say "unique minimal nontrivial subgroup";
  // the trivial group is vacuously pairwise-intersecting yet not cocyclic
  REQUIRE(nontrivial_subgroups_pairwise_intersect(group_by_name("Z1")));
  REQUIRE(!is_cocyclic(group_by_name("Z1")).cocyclic);
  for (const std::string& name : catalog_group_names()) {
    FiniteGroup g = group_by_name(name);
    if (g.size() == 1) continue;
    CAPTURE(name);
    bool pairwise = nontrivial_subgroups_pairwise_intersect(g);
    REQUIRE(pairwise == is_cocyclic(g).cocyclic);
  }
}
