#pragma once

#include <optional>
#include <string>
#include <vector>

#include "racts/errors.hpp"

namespace racts {

// Finite semigroup given by its Cayley table: table[x][y] is the index of
// x * y.  Instances are built through make_semigroup (or the constructors in
// rees.hpp / catalog.hpp) and never mutated afterwards.
struct FiniteSemigroup {
  std::vector<std::string> elements;
  std::vector<std::vector<int>> table;
  std::optional<int> identity;  // two-sided identity, if one exists

  int size() const { return static_cast<int>(elements.size()); }
  int mul(int x, int y) const { return table[x][y]; }
  const std::string& label(int x) const { return elements[x]; }
  int index_of(const std::string& label) const;  // -1 when absent

  bool operator==(const FiniteSemigroup& other) const {
    return elements == other.elements && table == other.table;
  }
};

// Validates shape, entry range, label uniqueness and associativity, then
// locates the identity (if any).  Associativity failures report the first
// violating triple (x, y, z) in lexicographic scan order.
FiniteSemigroup make_semigroup(std::vector<std::string> elements,
                               std::vector<std::vector<int>> table);

// Same checks as make_semigroup but as a predicate; the witness of the
// first failure is returned instead of thrown.
struct ValidationResult {
  bool ok = true;
  ErrorKind kind = ErrorKind::kNonAssociative;
  std::array<int, 3> witness{-1, -1, -1};
  std::string message;
};
ValidationResult validate_semigroup(const std::vector<std::string>& elements,
                                    const std::vector<std::vector<int>>& table);

// The rectangular band on I x Lambda: (i,l)(j,m) = (i,m).  Elements are
// labelled "(i,l)" in row-major order.
FiniteSemigroup rectangular_band(int i_size, int lambda_size);

std::vector<int> idempotents(const FiniteSemigroup& s);

bool is_left_identity(const FiniteSemigroup& s, int x);
bool is_left_zero(const FiniteSemigroup& s, int x);

}  // namespace racts
