#include "racts/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "racts/catalog.hpp"
#include "racts/congruence.hpp"

namespace racts {

std::uint32_t SplitRng::next() {
  // splitmix64, truncated to 32 bits: identical output on every platform,
  // unlike std::uniform_int_distribution driving a standard engine.
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return static_cast<std::uint32_t>((z ^ (z >> 31)) >> 32);
}

std::uint32_t SplitRng::below(std::uint32_t bound) {
  return bound <= 1 ? 0 : next() % bound;
}

namespace {

std::vector<std::string> numbered_states(int n) {
  std::vector<std::string> states;
  states.reserve(n);
  for (int i = 0; i < n; ++i) states.push_back("a" + std::to_string(i));
  return states;
}

double raw_space(int n_states, int k) {
  return std::pow(static_cast<double>(n_states),
                  static_cast<double>(n_states) * k);
}

// Incremental compatibility: cell (a, s) was just assigned (cells are
// filled row-major, so (x, u) is known iff x*k + u <= limit).  Checks
// every instance of the law a(st) = (as)t whose three cells are now all
// known and involve (a, s).
bool partial_ok(const FiniteSemigroup& s,
                const std::vector<std::vector<int>>& action, int a, int si,
                int limit,
                const std::vector<std::vector<std::pair<int, int>>>& factors) {
  const int k = s.size();
  const int v = action[a][si];
  // (a, s) as the first cell: a(s t) vs (a s) t.
  for (int t = 0; t < k; ++t) {
    const int st = s.mul(si, t);
    if (a * k + st <= limit && v * k + t <= limit) {
      if (action[a][st] != action[v][t]) return false;
    }
  }
  // (a, s) as the composite cell a(ut) with ut = s.
  for (const auto& [u, t] : factors[si]) {
    if (a * k + u > limit) continue;
    const int mid = action[a][u];
    if (mid * k + t > limit) continue;
    if (action[mid][t] != v) return false;
  }
  // (a, s) as the outer cell (x u) s: need action[x][u] == a.
  for (int x = 0; x < static_cast<int>(action.size()); ++x) {
    for (int u = 0; u < k; ++u) {
      if (x * k + u > limit) break;
      if (action[x][u] != a) continue;
      const int us = s.mul(u, si);
      if (x * k + us <= limit && action[x][us] != v) return false;
    }
  }
  return true;
}

}  // namespace

bool is_canonical_act(const RightAct& act) {
  const int n = act.size();
  const int k = act.semigroup.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> inv(n);
  while (std::next_permutation(perm.begin(), perm.end())) {
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    // Flattened comparison of the relabelled act against the original.
    int cmp = 0;
    for (int b = 0; b < n && cmp == 0; ++b) {
      const int orig_row = inv[b];
      for (int s = 0; s < k && cmp == 0; ++s) {
        const int relabelled = perm[act.action[orig_row][s]];
        cmp = relabelled - act.action[b][s];
      }
    }
    if (cmp < 0) return false;  // a strictly smaller relabelling exists
  }
  return true;
}

RightAct canonical_form(const RightAct& act) {
  const int n = act.size();
  const int k = act.semigroup.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> inv(n);
  std::vector<std::vector<int>> best = act.action;
  do {
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    std::vector<std::vector<int>> candidate(n, std::vector<int>(k));
    for (int b = 0; b < n; ++b) {
      for (int s = 0; s < k; ++s) {
        candidate[b][s] = perm[act.action[inv[b]][s]];
      }
    }
    if (candidate < best) best = std::move(candidate);
  } while (std::next_permutation(perm.begin(), perm.end()));
  RightAct out;
  out.semigroup = act.semigroup;
  out.states = numbered_states(n);
  out.action = std::move(best);
  return out;
}

void enumerate_acts(const FiniteSemigroup& s, int n_states,
                    const EnumerationBounds& bounds,
                    const std::function<bool(const RightAct&)>& visit) {
  if (n_states < 1) {
    throw Error(ErrorKind::kPreconditionViolated,
                "enumeration needs at least one state");
  }
  const int k = s.size();
  const double raw = raw_space(n_states, k);
  if (!bounds.override_budget && raw > bounds.budget) {
    std::ostringstream msg;
    msg << "raw search space n^(n*|S|) = " << raw << " exceeds budget "
        << bounds.budget << " (pass the override to proceed)";
    throw Error(ErrorKind::kBudgetExceeded, msg.str());
  }
  std::vector<std::vector<std::pair<int, int>>> factors(k);
  for (int u = 0; u < k; ++u) {
    for (int t = 0; t < k; ++t) factors[s.mul(u, t)].emplace_back(u, t);
  }
  std::vector<std::vector<int>> action(n_states, std::vector<int>(k, 0));
  const std::vector<std::string> states = numbered_states(n_states);
  const int cells = n_states * k;
  bool keep_going = true;

  // Iterative DFS over cells in row-major order.
  std::vector<int> value(cells, -1);
  int cell = 0;
  while (cell >= 0 && keep_going) {
    if (cell == cells) {
      RightAct act;
      act.semigroup = s;
      act.states = states;
      act.action = action;
      if (!bounds.dedup || is_canonical_act(act)) keep_going = visit(act);
      --cell;
      continue;
    }
    const int a = cell / k;
    const int si = cell % k;
    int v = ++value[cell];
    bool advanced = false;
    for (; v < n_states; ++v) {
      action[a][si] = v;
      value[cell] = v;
      if (partial_ok(s, action, a, si, cell, factors)) {
        advanced = true;
        break;
      }
    }
    if (advanced) {
      ++cell;
    } else {
      value[cell] = -1;
      --cell;
    }
  }
}

std::uint64_t count_acts(const FiniteSemigroup& s, int n_states,
                         const EnumerationBounds& bounds) {
  std::uint64_t count = 0;
  enumerate_acts(s, n_states, bounds, [&count](const RightAct&) {
    ++count;
    return true;
  });
  return count;
}

RightAct random_act(const FiniteSemigroup& s, int n_states, SplitRng& rng) {
  const int k = s.size();
  std::vector<std::vector<std::pair<int, int>>> factors(k);
  for (int u = 0; u < k; ++u) {
    for (int t = 0; t < k; ++t) factors[s.mul(u, t)].emplace_back(u, t);
  }
  const int cells = n_states * k;
  // Per-cell shuffled value order, then plain DFS; some completion always
  // exists (every constant table is compatible), and the node cap is a
  // safety net that falls back to the constant table.
  std::vector<std::vector<int>> order(cells);
  for (int c = 0; c < cells; ++c) {
    order[c].resize(n_states);
    std::iota(order[c].begin(), order[c].end(), 0);
    for (int i = n_states - 1; i > 0; --i) {
      const int j = static_cast<int>(rng.below(static_cast<std::uint32_t>(i + 1)));
      std::swap(order[c][i], order[c][j]);
    }
  }
  std::vector<std::vector<int>> action(n_states, std::vector<int>(k, 0));
  std::vector<int> choice(cells, -1);
  int cell = 0;
  std::uint64_t nodes = 0;
  while (cell < cells) {
    if (++nodes > 1000000) {
      for (auto& row : action) std::fill(row.begin(), row.end(), 0);
      break;
    }
    const int a = cell / k;
    const int si = cell % k;
    int idx = ++choice[cell];
    bool advanced = false;
    for (; idx < n_states; ++idx) {
      choice[cell] = idx;
      action[a][si] = order[cell][idx];
      if (partial_ok(s, action, a, si, cell, factors)) {
        advanced = true;
        break;
      }
    }
    if (advanced) {
      ++cell;
    } else {
      choice[cell] = -1;
      --cell;
      if (cell < 0) {  // cannot happen: constant tables complete
        for (auto& row : action) std::fill(row.begin(), row.end(), 0);
        break;
      }
    }
  }
  RightAct act;
  act.semigroup = s;
  act.states = numbered_states(n_states);
  act.action = std::move(action);
  return act;
}

void enumerate_rees(const std::vector<std::string>& group_names,
                    const ReesEnumerationOptions& options,
                    const std::function<bool(const ReesMatrixSpec&)>& visit) {
  for (const std::string& name : group_names) {
    const FiniteGroup group = group_by_name(name);
    if (group.size() > options.max_group_size) continue;
    for (int i = 1; i <= options.max_i; ++i) {
      for (int l = 1; l <= options.max_lambda; ++l) {
        const int values = group.size() + (options.with_zero ? 1 : 0);
        const int cells = i * l;
        std::uint64_t space = 1;
        bool overflow = false;
        for (int c = 0; c < cells && !overflow; ++c) {
          overflow = space > (1ull << 60) / values;
          space *= values;
        }
        ReesMatrixSpec spec;
        spec.group = group;
        spec.i_size = i;
        spec.lambda_size = l;
        spec.with_zero = options.with_zero;
        auto emit = [&](const std::vector<std::vector<int>>& sandwich) {
          spec.sandwich = sandwich;
          try {
            validate_spec(spec);
          } catch (const Error& e) {
            if (e.kind() == ErrorKind::kIrregularSandwich) return true;
            throw;
          }
          return visit(spec);
        };
        if (!overflow && space <= options.max_sandwich_samples) {
          // Exhaustive odometer; group entries first, ZERO last.
          std::vector<int> digits(cells, 0);
          while (true) {
            std::vector<std::vector<int>> sandwich(l, std::vector<int>(i));
            for (int c = 0; c < cells; ++c) {
              sandwich[c / i][c % i] =
                  digits[c] == group.size() ? kSandwichZero : digits[c];
            }
            if (!emit(sandwich)) return;
            int pos = cells - 1;
            while (pos >= 0 && digits[pos] == values - 1) digits[pos--] = 0;
            if (pos < 0) break;
            ++digits[pos];
          }
        } else {
          SplitRng rng(options.seed ^ (static_cast<std::uint32_t>(group.size())
                                       << 16 | i << 8 | l));
          std::set<std::vector<std::vector<int>>> seen;
          std::vector<std::vector<std::vector<int>>> samples;
          const auto identity = identity_sandwich(group, i, l);
          seen.insert(identity);
          samples.push_back(identity);
          std::uint64_t attempts = 0;
          const std::uint64_t max_attempts =
              20 * options.max_sandwich_samples + 200;
          while (samples.size() < options.max_sandwich_samples &&
                 attempts++ < max_attempts) {
            std::vector<std::vector<int>> candidate(l, std::vector<int>(i));
            for (int c = 0; c < cells; ++c) {
              const int d = static_cast<int>(
                  rng.below(static_cast<std::uint32_t>(values)));
              candidate[c / i][c % i] = d == group.size() ? kSandwichZero : d;
            }
            bool regular = true;
            for (int row = 0; row < l && regular; ++row) {
              bool nonzero = false;
              for (int col = 0; col < i; ++col) {
                nonzero |= candidate[row][col] != kSandwichZero;
              }
              regular = nonzero;
            }
            for (int col = 0; col < i && regular; ++col) {
              bool nonzero = false;
              for (int row = 0; row < l; ++row) {
                nonzero |= candidate[row][col] != kSandwichZero;
              }
              regular = nonzero;
            }
            if (!regular) continue;
            if (seen.insert(candidate).second) samples.push_back(candidate);
          }
          for (const auto& sandwich : samples) {
            if (!emit(sandwich)) return;
          }
        }
      }
    }
  }
}

namespace {

std::string act_signature(const RightAct& act) {
  std::ostringstream out;
  out << "n" << act.size() << ":";
  bool first = true;
  for (const auto& row : act.action) {
    for (int v : row) {
      if (!first) out << ",";
      out << v;
      first = false;
    }
  }
  return out.str();
}

void record(AtlasReport& report, const std::string& check,
            const std::string& act_id, const std::string& detail) {
  report.violations.push_back({check, act_id, detail});
}

// Instantiated structural facts for a single enumerated act; engine
// results come in via summary.
void check_structure(AtlasReport& report, const RightAct& act,
                     const CongruenceSummary& summary,
                     const RectBandClassification& closed,
                     const std::string& act_id) {
  const int n = act.size();
  const std::vector<int>& zeros = closed.zeros;

  if (closed.si != summary.si) {
    record(report, "si-agreement", act_id,
           std::string("closed form says ") + (closed.si ? "si" : "not si"));
  }
  if (closed.uniform != summary.uniform) {
    record(report, "uniform-agreement", act_id,
           std::string("closed form says ") +
               (closed.uniform ? "uniform" : "not uniform"));
  }
  if (summary.si && !summary.irreducible) {
    record(report, "si-implies-irreducible", act_id, "implication chain broke");
  }
  if (summary.irreducible && !summary.uniform) {
    record(report, "irreducible-implies-uniform", act_id,
           "implication chain broke");
  }
  // No zero: si forces a two-state simple act.
  if (zeros.empty() && summary.si && n != 2) {
    record(report, "no-zero-order-bound", act_id,
           "si with no zero must have exactly 2 states");
  }
  // Two zeros: orbits collapse onto the zero pair and |A| <= 2^|I|.
  if (zeros.size() == 2 && summary.si) {
    const BoundCheckReport bounds = two_zero_bound_check(act);
    for (const std::string& v : bounds.violations) {
      record(report, "two-zero-bounds", act_id, v);
    }
  }
  // Uniform but not separated: the kernel must exist.
  if (summary.uniform && !is_separated(act) && !kernel_of(act)) {
    record(report, "kernel-existence", act_id,
           "uniform non-separated act without kernel");
  }
  // Uniform: subacts with >= 2 states pairwise intersect in >= 2 states.
  if (summary.uniform) {
    const ActAnalysis analysis = analyze(act);
    std::vector<const std::vector<int>*> big;
    for (const auto& b : analysis.subacts) {
      if (b.size() >= 2) big.push_back(&b);
    }
    for (size_t x = 0; x < big.size(); ++x) {
      for (size_t y = x + 1; y < big.size(); ++y) {
        std::vector<int> meet;
        std::set_intersection(big[x]->begin(), big[x]->end(), big[y]->begin(),
                              big[y]->end(), std::back_inserter(meet));
        if (meet.size() < 2) {
          record(report, "uniform-subact-meets", act_id,
                 "two large-eligible subacts share fewer than 2 states");
        }
      }
    }
  }
  // Si: every action-derived distinct pair x = a(i,l) != y = a(i,u)
  // generates the least congruence, whose only non-singleton class is
  // {x, y}.
  if (summary.si && summary.least) {
    const RectBandCoords coords = recognize_rect_band(act.semigroup);
    for (int a = 0; a < n; ++a) {
      for (int r = 0; r < coords.i_size; ++r) {
        for (int c1 = 0; c1 < coords.lambda_size; ++c1) {
          for (int c2 = c1 + 1; c2 < coords.lambda_size; ++c2) {
            const int x = act.act(a, coords.element_at[r][c1]);
            const int y = act.act(a, coords.element_at[r][c2]);
            if (x == y) continue;
            const Congruence rho = monocyclic(act, x, y);
            if (!(rho == *summary.least)) {
              record(report, "least-pair", act_id,
                     "rho(" + act.state_label(x) + "," + act.state_label(y) +
                         ") is not the least congruence");
              continue;
            }
            if (rho.num_classes != n - 1) {
              record(report, "least-pair", act_id,
                     "least congruence is bigger than one merged pair");
            }
          }
        }
      }
    }
  }
}

}  // namespace

AtlasReport build_atlas(int band_i, int band_lambda, int max_states,
                        const EnumerationBounds& bounds) {
  AtlasReport report;
  report.band_i = band_i;
  report.band_lambda = band_lambda;
  report.max_states = max_states;
  report.dedup = bounds.dedup;
  const FiniteSemigroup band = rectangular_band(band_i, band_lambda);

  // The uniform regular act criterion for the band itself: xy = y forces
  // a left identity or a left zero.
  {
    const RightAct regular = regular_act(band);
    const CongruenceSummary summary = summarize(regular);
    if (summary.uniform) {
      for (int x = 0; x < band.size(); ++x) {
        for (int y = 0; y < band.size(); ++y) {
          if (band.mul(x, y) == y && !is_left_identity(band, x) &&
              !is_left_zero(band, y)) {
            record(report, "uniform-left-identity", "regular",
                   "xy = y without left identity/left zero at (" +
                       band.label(x) + ", " + band.label(y) + ")");
          }
        }
      }
      // A rectangular band beyond two elements is uniform only as a right
      // zero semigroup.
      if (band.size() > 2 && band_i != 1) {
        record(report, "uniform-right-zero", "regular",
               "uniform band with |I| > 1");
      }
    } else if (band.size() > 2 && band_i == 1) {
      record(report, "uniform-right-zero", "regular",
             "right zero band not uniform");
    }
  }

  for (int n = 1; n <= max_states; ++n) {
    enumerate_acts(band, n, bounds, [&](const RightAct& act) {
      const CongruenceSummary summary = summarize(act);
      const RectBandClassification closed = classify_act_rect_band(act);
      const std::string act_id = act_signature(act);
      AtlasRow row;
      row.act_id = act_id;
      row.n_states = n;
      row.zero_count = static_cast<int>(closed.zeros.size());
      row.si = summary.si;
      row.irreducible = summary.irreducible;
      row.uniform = summary.uniform;
      row.closed_verdict = closed.verdict;
      row.case_tag = closed.case_tag;
      report.rows.push_back(row);
      ++report.census.acts;
      if (summary.si) ++report.census.si;
      if (summary.irreducible) ++report.census.irreducible;
      if (summary.uniform) ++report.census.uniform;
      if (!summary.si && !summary.uniform) ++report.census.neither;
      check_structure(report, act, summary, closed, act_id);
      return true;
    });
  }
  return report;
}

}  // namespace racts
