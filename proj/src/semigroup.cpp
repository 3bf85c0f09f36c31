#include "racts/semigroup.hpp"

#include <string>
#include <unordered_set>

namespace racts {

namespace {

std::optional<int> find_identity(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      ok = table[e][x] == x && table[x][e] == x;
    }
    if (ok) return e;  // a two-sided identity is unique
  }
  return std::nullopt;
}

}  // namespace

int FiniteSemigroup::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i) {
    if (elements[i] == label) return i;
  }
  return -1;
}

ValidationResult validate_semigroup(const std::vector<std::string>& elements,
                                    const std::vector<std::vector<int>>& table) {
  ValidationResult r;
  const int n = static_cast<int>(elements.size());
  auto fail = [&r](ErrorKind kind, std::array<int, 3> witness,
                   std::string msg) {
    r.ok = false;
    r.kind = kind;
    r.witness = witness;
    r.message = std::move(msg);
    return r;
  };

  if (n == 0) {
    return fail(ErrorKind::kShapeMismatch, {-1, -1, -1},
                "semigroup must have at least one element");
  }
  if (static_cast<int>(table.size()) != n) {
    return fail(ErrorKind::kShapeMismatch, {static_cast<int>(table.size()), n, -1},
                "table has " + std::to_string(table.size()) + " rows, expected " +
                    std::to_string(n));
  }
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(table[x].size()) != n) {
      return fail(ErrorKind::kShapeMismatch, {x, static_cast<int>(table[x].size()), n},
                  "table row " + std::to_string(x) + " has " +
                      std::to_string(table[x].size()) + " entries, expected " +
                      std::to_string(n));
    }
    for (int y = 0; y < n; ++y) {
      if (table[x][y] < 0 || table[x][y] >= n) {
        return fail(ErrorKind::kIndexOutOfRange, {x, y, table[x][y]},
                    "table[" + std::to_string(x) + "][" + std::to_string(y) +
                        "] = " + std::to_string(table[x][y]) + " out of range");
      }
    }
  }
  std::unordered_set<std::string> seen;
  for (int i = 0; i < n; ++i) {
    if (!seen.insert(elements[i]).second) {
      return fail(ErrorKind::kShapeMismatch, {i, -1, -1},
                  "duplicate element label \"" + elements[i] + "\"");
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (table[table[x][y]][z] != table[x][table[y][z]]) {
          return fail(ErrorKind::kNonAssociative, {x, y, z},
                      "(" + elements[x] + " " + elements[y] + ") " + elements[z] +
                          " != " + elements[x] + " (" + elements[y] + " " +
                          elements[z] + ")");
        }
      }
    }
  }
  return r;
}

FiniteSemigroup make_semigroup(std::vector<std::string> elements,
                               std::vector<std::vector<int>> table) {
  ValidationResult v = validate_semigroup(elements, table);
  if (!v.ok) throw Error(v.kind, v.message, v.witness);
  FiniteSemigroup s;
  s.elements = std::move(elements);
  s.table = std::move(table);
  s.identity = find_identity(s.table);
  return s;
}

FiniteSemigroup rectangular_band(int i_size, int lambda_size) {
  if (i_size < 1 || lambda_size < 1) {
    throw Error(ErrorKind::kPreconditionViolated,
                "rectangular band needs positive dimensions",
                {i_size, lambda_size, -1});
  }
  const int n = i_size * lambda_size;
  std::vector<std::string> elements;
  elements.reserve(n);
  for (int i = 0; i < i_size; ++i) {
    for (int l = 0; l < lambda_size; ++l) {
      elements.push_back("(" + std::to_string(i) + "," + std::to_string(l) + ")");
    }
  }
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    const int xi = x / lambda_size;
    for (int y = 0; y < n; ++y) {
      const int yl = y % lambda_size;
      table[x][y] = xi * lambda_size + yl;  // (i,l)(j,m) = (i,m)
    }
  }
  FiniteSemigroup s;
  s.elements = std::move(elements);
  s.table = std::move(table);
  s.identity = find_identity(s.table);  // only when n == 1
  return s;
}

std::vector<int> idempotents(const FiniteSemigroup& s) {
  std::vector<int> out;
  for (int x = 0; x < s.size(); ++x) {
    if (s.mul(x, x) == x) out.push_back(x);
  }
  return out;
}

bool is_left_identity(const FiniteSemigroup& s, int x) {
  for (int y = 0; y < s.size(); ++y) {
    if (s.mul(x, y) != y) return false;
  }
  return true;
}

bool is_left_zero(const FiniteSemigroup& s, int x) {
  for (int y = 0; y < s.size(); ++y) {
    if (s.mul(x, y) != x) return false;
  }
  return true;
}

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNonAssociative: return "non-associative";
    case ErrorKind::kShapeMismatch: return "shape-mismatch";
    case ErrorKind::kIndexOutOfRange: return "index-out-of-range";
    case ErrorKind::kNotAGroup: return "not-a-group";
    case ErrorKind::kIrregularSandwich: return "irregular-sandwich";
    case ErrorKind::kZeroEntryWithoutZeroFlag: return "zero-entry-without-zero-flag";
    case ErrorKind::kIncompatibleAction: return "incompatible-action";
    case ErrorKind::kSizeLimit: return "size-limit";
    case ErrorKind::kNotASubact: return "not-a-subact";
    case ErrorKind::kActMismatch: return "act-mismatch";
    case ErrorKind::kPreconditionViolated: return "precondition-violated";
    case ErrorKind::kNotARectangularBand: return "not-a-rectangular-band";
    case ErrorKind::kBudgetExceeded: return "budget-exceeded";
    case ErrorKind::kUnknownGroup: return "unknown-group";
    case ErrorKind::kParseError: return "parse-error";
  }
  return "unknown";
}

}  // namespace racts
