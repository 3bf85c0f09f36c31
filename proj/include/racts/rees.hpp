#pragma once

#include <string>
#include <vector>

#include "racts/group.hpp"

namespace racts {

// Distinguished sandwich entry marking the zero of G^0.
inline constexpr int kSandwichZero = -1;

// Data for a Rees matrix semigroup M[G; I, Lambda; P] (with or without an
// adjoined zero).  sandwich is Lambda x I; entries are group element
// indices or kSandwichZero.
struct ReesMatrixSpec {
  FiniteGroup group;
  int i_size = 1;
  int lambda_size = 1;
  std::vector<std::vector<int>> sandwich;
  bool with_zero = false;
};

// Shape/range checks plus the two semantic rules: ZERO entries need
// with_zero, and P must be regular (no all-ZERO row or column).
void validate_spec(const ReesMatrixSpec& spec);

// P with every entry the group identity.
std::vector<std::vector<int>> identity_sandwich(const FiniteGroup& g,
                                                int i_size, int lambda_size);

// Nonzero elements are triples (i, a, lambda) with product
// (i,a,l)(j,b,m) = (i, a * p[l][j] * b, m), or the zero when p[l][j] is
// ZERO.  With with_zero the zero element sits at index 0 and is labelled
// "0"; triples are labelled "(i,a,l)" with a the group element label.
FiniteSemigroup rees_matrix(const ReesMatrixSpec& spec);

// Index helpers for the element ordering used by rees_matrix.
int rees_index(const ReesMatrixSpec& spec, int i, int g, int lambda);
struct ReesTriple {
  bool is_zero = false;
  int i = 0, g = 0, lambda = 0;
};
ReesTriple rees_decode(const ReesMatrixSpec& spec, int index);

int rees_size(const ReesMatrixSpec& spec);

}  // namespace racts
