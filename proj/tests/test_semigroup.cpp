#include <vector>

#include "doctest.h"
#include "racts/semigroup.hpp"

using namespace racts;

TEST_CASE("make_semigroup accepts the two-element right zero semigroup") {
  FiniteSemigroup s = make_semigroup({"s1", "s2"}, {{0, 1}, {0, 1}});
  REQUIRE(s.size() == 2);
  REQUIRE(s.mul(0, 1) == 1);
  REQUIRE(s.mul(1, 0) == 0);
  REQUIRE(!s.identity.has_value());
  REQUIRE(s.index_of("s2") == 1);
  REQUIRE(s.index_of("nope") == -1);
}

TEST_CASE("make_semigroup rejects a non-associative table with a witness") {
  std::vector<std::vector<int>> t = {{1, 0}, {0, 0}};
  ValidationResult r = validate_semigroup({"a", "b"}, t);
  REQUIRE(!r.ok);
  REQUIRE(r.kind == ErrorKind::kNonAssociative);
  auto [x, y, z] = r.witness;
  REQUIRE(t[t[x][y]][z] != t[x][t[y][z]]);
  REQUIRE_THROWS_AS(make_semigroup({"a", "b"}, t), Error);
}

TEST_CASE("validate_semigroup rejects shape and range problems") {
  REQUIRE(validate_semigroup({"a"}, {{0, 0}}).kind ==
          ErrorKind::kShapeMismatch);
  REQUIRE(validate_semigroup({"a", "b"}, {{0, 2}, {0, 1}}).kind ==
          ErrorKind::kIndexOutOfRange);
  ValidationResult dup = validate_semigroup({"a", "a"}, {{0, 1}, {0, 1}});
  REQUIRE(!dup.ok);
}

TEST_CASE("identity detection finds two-sided identities only") {
  // Z2 written by hand
  FiniteSemigroup z2 = make_semigroup({"e", "g"}, {{0, 1}, {1, 0}});
  REQUIRE(z2.identity.has_value());
  REQUIRE(*z2.identity == 0);
  // right zero semigroup: every element is a left identity, none two-sided
  FiniteSemigroup rz = make_semigroup({"s1", "s2"}, {{0, 1}, {0, 1}});
  REQUIRE(!rz.identity.has_value());
  REQUIRE(is_left_identity(rz, 0));
  REQUIRE(is_left_identity(rz, 1));
}

TEST_CASE("rectangular_band builds I x Lambda with the projection product") {
  FiniteSemigroup b = rectangular_band(2, 3);
  REQUIRE(b.size() == 6);
  for (int x = 0; x < 6; ++x) {
    REQUIRE(b.mul(x, x) == x);  // idempotent
    for (int y = 0; y < 6; ++y) {
      REQUIRE(b.mul(b.mul(x, y), x) == x);  // x y x = x
      // (i,l)(j,m) = (i,m): row of x, column of y (row-major layout)
      REQUIRE(b.mul(x, y) == (x / 3) * 3 + (y % 3));
    }
  }
  REQUIRE(b.label(0) == "(0,0)");
  REQUIRE(b.label(5) == "(1,2)");
}

TEST_CASE("rectangular band degenerate shapes are the zero bands") {
  // 1 x n is the right zero semigroup, n x 1 the left zero semigroup
  FiniteSemigroup rz = rectangular_band(1, 2);
  REQUIRE(rz.mul(0, 1) == 1);
  REQUIRE(rz.mul(1, 0) == 0);
  FiniteSemigroup lz = rectangular_band(2, 1);
  REQUIRE(is_left_zero(lz, 0));
  REQUIRE(is_left_zero(lz, 1));
  REQUIRE(lz.mul(0, 1) == 0);
}

TEST_CASE("idempotents of a band are everything, of Z4 only the identity") {
  FiniteSemigroup b = rectangular_band(2, 2);
  REQUIRE(idempotents(b).size() == 4);
  FiniteSemigroup z4 = make_semigroup(
      {"e", "g", "g2", "g3"},
      {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}});
  REQUIRE(idempotents(z4) == std::vector<int>{0});
}
