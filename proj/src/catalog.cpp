#include "racts/catalog.hpp"

#include <array>
#include <map>

namespace racts {

FiniteGroup cyclic_group(int n) {
  if (n < 1 || n > 64) {
    throw Error(ErrorKind::kPreconditionViolated,
                "cyclic group order out of range: " + std::to_string(n));
  }
  std::vector<std::string> elements;
  elements.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (i == 0) {
      elements.emplace_back("e");
    } else if (i == 1) {
      elements.emplace_back("g");
    } else {
      elements.push_back("g" + std::to_string(i));
    }
  }
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return as_group(make_semigroup(std::move(elements), std::move(table)));
}

FiniteGroup klein_four_group() {
  // e, a, b, c with a*b = c and every element its own inverse.
  std::vector<std::string> elements{"e", "a", "b", "c"};
  std::vector<std::vector<int>> table{
      {0, 1, 2, 3},
      {1, 0, 3, 2},
      {2, 3, 0, 1},
      {3, 2, 1, 0},
  };
  return as_group(make_semigroup(std::move(elements), std::move(table)));
}

namespace {

using Perm = std::array<int, 3>;

// x * y means "apply x, then y".
Perm compose(const Perm& x, const Perm& y) {
  return {y[x[0]], y[x[1]], y[x[2]]};
}

}  // namespace

FiniteGroup symmetric_group_3() {
  const Perm e{0, 1, 2};
  const Perm r{1, 2, 0};
  const Perm s{1, 0, 2};
  const Perm r2 = compose(r, r);
  const std::vector<std::pair<std::string, Perm>> elems{
      {"e", e},           {"r", r},
      {"r2", r2},         {"s", s},
      {"rs", compose(r, s)}, {"r2s", compose(r2, s)},
  };
  auto index_of = [&elems](const Perm& p) {
    for (size_t i = 0; i < elems.size(); ++i) {
      if (elems[i].second == p) return static_cast<int>(i);
    }
    return -1;
  };
  std::vector<std::string> labels;
  for (const auto& [name, perm] : elems) labels.push_back(name);
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      table[i][j] = index_of(compose(elems[i].second, elems[j].second));
    }
  }
  return as_group(make_semigroup(std::move(labels), std::move(table)));
}

FiniteGroup quaternion_group_8() {
  // Elements 1,-1,i,-i,j,-j,k,-k encoded as (axis, sign) with axis
  // 0:identity 1:i 2:j 3:k; index = 2*axis + (sign < 0).
  struct AxisProduct {
    int axis;
    int sign;  // +1 or -1
  };
  // axis_mul[a][b] for a,b in {1,i,j,k}.
  const AxisProduct axis_mul[4][4] = {
      {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
      {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
      {{2, 1}, {3, -1}, {0, -1}, {1, 1}},
      {{3, 1}, {2, 1}, {1, -1}, {0, -1}},
  };
  const std::vector<std::string> labels{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const AxisProduct p = axis_mul[x / 2][y / 2];
      const int neg = (x % 2) ^ (y % 2) ^ (p.sign < 0 ? 1 : 0);
      table[x][y] = 2 * p.axis + neg;
    }
  }
  return as_group(make_semigroup(labels, std::move(table)));
}

FiniteGroup group_by_name(const std::string& name) {
  if (name.size() >= 2 && name[0] == 'Z') {
    const std::string digits = name.substr(1);
    bool numeric = !digits.empty();
    for (char c : digits) numeric = numeric && c >= '0' && c <= '9';
    if (numeric) {
      const int n = std::stoi(digits);
      if (n >= 1 && n <= 12) return cyclic_group(n);
    }
  }
  if (name == "V4") return klein_four_group();
  if (name == "S3") return symmetric_group_3();
  if (name == "Q8") return quaternion_group_8();
  throw Error(ErrorKind::kUnknownGroup, "unknown group \"" + name +
                                            "\" (catalog: Z1..Z12, V4, S3, Q8)");
}

std::vector<std::string> catalog_group_names() {
  std::vector<std::string> names;
  for (int n = 1; n <= 12; ++n) names.push_back("Z" + std::to_string(n));
  names.push_back("V4");
  names.push_back("S3");
  names.push_back("Q8");
  return names;
}

std::vector<std::string> expand_group_list(const std::string& list) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos <= list.size()) {
    size_t comma = list.find(',', pos);
    if (comma == std::string::npos) comma = list.size();
    std::string token = list.substr(pos, comma - pos);
    pos = comma + 1;
    if (token.empty()) {
      if (comma == list.size()) break;
      throw Error(ErrorKind::kParseError, "empty group name in list");
    }
    const size_t dots = token.find("..");
    if (dots != std::string::npos) {
      const std::string lo = token.substr(0, dots);
      const std::string hi = token.substr(dots + 2);
      if (lo.size() < 2 || hi.size() < 2 || lo[0] != 'Z' || hi[0] != 'Z') {
        throw Error(ErrorKind::kParseError,
                    "range syntax is Za..Zb, got \"" + token + "\"");
      }
      const int a = std::stoi(lo.substr(1));
      const int b = std::stoi(hi.substr(1));
      if (a < 1 || b > 12 || a > b) {
        throw Error(ErrorKind::kParseError, "bad group range \"" + token + "\"");
      }
      for (int n = a; n <= b; ++n) out.push_back("Z" + std::to_string(n));
    } else {
      group_by_name(token);  // validate
      out.push_back(token);
    }
  }
  if (out.empty()) {
    throw Error(ErrorKind::kParseError, "empty group list");
  }
  return out;
}

}  // namespace racts
