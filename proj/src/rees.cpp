#include "racts/rees.hpp"

namespace racts {

void validate_spec(const ReesMatrixSpec& spec) {
  if (spec.i_size < 1 || spec.lambda_size < 1) {
    throw Error(ErrorKind::kShapeMismatch,
                "i_size and lambda_size must be positive",
                {spec.i_size, spec.lambda_size, -1});
  }
  if (static_cast<int>(spec.sandwich.size()) != spec.lambda_size) {
    throw Error(ErrorKind::kShapeMismatch,
                "sandwich must have lambda_size rows",
                {static_cast<int>(spec.sandwich.size()), spec.lambda_size, -1});
  }
  for (int l = 0; l < spec.lambda_size; ++l) {
    if (static_cast<int>(spec.sandwich[l].size()) != spec.i_size) {
      throw Error(ErrorKind::kShapeMismatch, "sandwich row has wrong width",
                  {l, static_cast<int>(spec.sandwich[l].size()), spec.i_size});
    }
    for (int i = 0; i < spec.i_size; ++i) {
      const int p = spec.sandwich[l][i];
      if (p == kSandwichZero) {
        if (!spec.with_zero) {
          throw Error(ErrorKind::kZeroEntryWithoutZeroFlag,
                      "sandwich has a ZERO entry but with_zero is false",
                      {l, i, -1});
        }
        continue;
      }
      if (p < 0 || p >= spec.group.size()) {
        throw Error(ErrorKind::kIndexOutOfRange,
                    "sandwich entry out of group range", {l, i, p});
      }
    }
  }
  // Regularity: every row and every column holds a nonzero entry.
  for (int l = 0; l < spec.lambda_size; ++l) {
    bool nonzero = false;
    for (int i = 0; i < spec.i_size; ++i) nonzero |= spec.sandwich[l][i] != kSandwichZero;
    if (!nonzero) {
      throw Error(ErrorKind::kIrregularSandwich,
                  "sandwich row " + std::to_string(l) + " is all ZERO",
                  {l, -1, -1});
    }
  }
  for (int i = 0; i < spec.i_size; ++i) {
    bool nonzero = false;
    for (int l = 0; l < spec.lambda_size; ++l) nonzero |= spec.sandwich[l][i] != kSandwichZero;
    if (!nonzero) {
      throw Error(ErrorKind::kIrregularSandwich,
                  "sandwich column " + std::to_string(i) + " is all ZERO",
                  {i, -1, -1});
    }
  }
}

std::vector<std::vector<int>> identity_sandwich(const FiniteGroup& g,
                                                int i_size, int lambda_size) {
  return std::vector<std::vector<int>>(lambda_size,
                                       std::vector<int>(i_size, g.identity));
}

int rees_size(const ReesMatrixSpec& spec) {
  return spec.group.size() * spec.i_size * spec.lambda_size +
         (spec.with_zero ? 1 : 0);
}

int rees_index(const ReesMatrixSpec& spec, int i, int g, int lambda) {
  const int offset = spec.with_zero ? 1 : 0;
  return offset + (i * spec.group.size() + g) * spec.lambda_size + lambda;
}

ReesTriple rees_decode(const ReesMatrixSpec& spec, int index) {
  ReesTriple t;
  if (spec.with_zero) {
    if (index == 0) {
      t.is_zero = true;
      return t;
    }
    --index;
  }
  t.lambda = index % spec.lambda_size;
  index /= spec.lambda_size;
  t.g = index % spec.group.size();
  t.i = index / spec.group.size();
  return t;
}

FiniteSemigroup rees_matrix(const ReesMatrixSpec& spec) {
  validate_spec(spec);
  const int n = rees_size(spec);
  std::vector<std::string> elements(n);
  if (spec.with_zero) elements[0] = "0";
  for (int i = 0; i < spec.i_size; ++i) {
    for (int g = 0; g < spec.group.size(); ++g) {
      for (int l = 0; l < spec.lambda_size; ++l) {
        elements[rees_index(spec, i, g, l)] = "(" + std::to_string(i) + "," +
                                              spec.group.label(g) + "," +
                                              std::to_string(l) + ")";
      }
    }
  }
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  if (spec.with_zero) {
    for (int x = 0; x < n; ++x) table[0][x] = table[x][0] = 0;
  }
  const int base = spec.with_zero ? 1 : 0;
  for (int x = base; x < n; ++x) {
    const ReesTriple a = rees_decode(spec, x);
    for (int y = base; y < n; ++y) {
      const ReesTriple b = rees_decode(spec, y);
      const int p = spec.sandwich[a.lambda][b.i];
      if (p == kSandwichZero) {
        table[x][y] = 0;  // only reachable when with_zero
      } else {
        const int prod = spec.group.mul(spec.group.mul(a.g, p), b.g);
        table[x][y] = rees_index(spec, a.i, prod, b.lambda);
      }
    }
  }
  FiniteSemigroup s;
  s.elements = std::move(elements);
  s.table = std::move(table);
  // Identity scan: a Rees matrix semigroup has one only in tiny cases
  // (e.g. |I| = |Lambda| = 1 with identity sandwich entry, no zero).
  for (int e = 0; e < n && !s.identity; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      ok = s.table[e][x] == x && s.table[x][e] == x;
    }
    if (ok) s.identity = e;
  }
  return s;
}

}  // namespace racts
