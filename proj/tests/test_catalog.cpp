#include <string>
#include <vector>

#include "doctest.h"
#include "racts/catalog.hpp"

using namespace racts;

TEST_CASE("catalog names resolve and sizes are right") {
  for (int n = 1; n <= 12; ++n) {
    FiniteGroup g = group_by_name("Z" + std::to_string(n));
    REQUIRE(g.size() == n);
    REQUIRE(element_order(g, g.size() > 1 ? 1 : 0) == n);
  }
  REQUIRE(group_by_name("V4").size() == 4);
  REQUIRE(group_by_name("S3").size() == 6);
  REQUIRE(group_by_name("Q8").size() == 8);
  REQUIRE(catalog_group_names().size() == 15);
}

TEST_CASE("unknown group names throw kUnknownGroup") {
  REQUIRE_THROWS_AS(group_by_name("Z13"), Error);
  try {
    group_by_name("D4");
  } catch (const Error& e) {
    REQUIRE(e.kind() == ErrorKind::kUnknownGroup);
  }
}

TEST_CASE("cyclic_group is Z_n with the usual addition") {
  FiniteGroup z6 = cyclic_group(6);
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      REQUIRE(z6.mul(a, b) == (a + b) % 6);
    }
  }
}

TEST_CASE("V4 is elementary abelian") {
  FiniteGroup v4 = klein_four_group();
  for (int x = 0; x < 4; ++x) {
    REQUIRE(v4.mul(x, x) == v4.identity);
    for (int y = 0; y < 4; ++y) REQUIRE(v4.mul(x, y) == v4.mul(y, x));
  }
}

TEST_CASE("S3 is the noncommutative group of order 6") {
  FiniteGroup s3 = symmetric_group_3();
  bool commutative = true;
  for (int x = 0; x < 6; ++x) {
    for (int y = 0; y < 6; ++y) {
      if (s3.mul(x, y) != s3.mul(y, x)) commutative = false;
    }
  }
  REQUIRE(!commutative);
  // element orders: one identity, three transpositions, two 3-cycles
  int ord1 = 0, ord2 = 0, ord3 = 0;
  for (int x = 0; x < 6; ++x) {
    int o = element_order(s3, x);
    if (o == 1) ++ord1;
    if (o == 2) ++ord2;
    if (o == 3) ++ord3;
  }
  REQUIRE(ord1 == 1);
  REQUIRE(ord2 == 3);
  REQUIRE(ord3 == 2);
}

TEST_CASE("Q8 relations") {
  FiniteGroup q8 = quaternion_group_8();
  int i = q8.base.index_of("i");
  int j = q8.base.index_of("j");
  int k = q8.base.index_of("k");
  int minus_one = q8.base.index_of("-1");
  int minus_k = q8.base.index_of("-k");
  REQUIRE(i >= 0);
  REQUIRE(q8.mul(i, i) == minus_one);
  REQUIRE(q8.mul(j, j) == minus_one);
  REQUIRE(q8.mul(i, j) == k);
  REQUIRE(q8.mul(j, i) == minus_k);
  REQUIRE(q8.mul(minus_one, minus_one) == q8.identity);
  int ord4 = 0;
  for (int x = 0; x < 8; ++x) {
    if (element_order(q8, x) == 4) ++ord4;
  }
  REQUIRE(ord4 == 6);
}

TEST_CASE("expand_group_list handles ranges and plain names") {
  REQUIRE(expand_group_list("Z2..Z4,Q8") ==
          std::vector<std::string>({"Z2", "Z3", "Z4", "Q8"}));
  REQUIRE(expand_group_list("V4") == std::vector<std::string>({"V4"}));
  REQUIRE(expand_group_list("Z5..Z5") == std::vector<std::string>({"Z5"}));
}
