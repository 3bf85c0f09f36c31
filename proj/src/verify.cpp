#include "racts/verify.hpp"

#include <algorithm>
#include <sstream>

#include "racts/catalog.hpp"
#include "racts/closedform.hpp"
#include "racts/congruence.hpp"
#include "racts/json_io.hpp"

namespace racts {

namespace {

std::string spec_tag(const ReesMatrixSpec& spec) {
  std::ostringstream out;
  out << "M" << (spec.with_zero ? "0" : "") << "[|G|=" << spec.group.size()
      << ";" << spec.i_size << "x" << spec.lambda_size << ";P=";
  for (int l = 0; l < spec.lambda_size; ++l) {
    out << (l ? ";" : "");
    for (int i = 0; i < spec.i_size; ++i) {
      out << (i ? "," : "");
      if (spec.sandwich[l][i] == kSandwichZero) {
        out << "0";
      } else {
        out << spec.group.label(spec.sandwich[l][i]);
      }
    }
  }
  out << "]";
  return out.str();
}

std::vector<std::string> default_or(const std::vector<std::string>& groups,
                                    std::vector<std::string> fallback) {
  return groups.empty() ? std::move(fallback) : groups;
}

// Closed-form monocyclic congruences against the engine, per spec and
// nonzero pair.
SuiteReport run_prop26(const SuiteOptions& options) {
  SuiteReport report;
  report.suite = "prop2.6";
  report.seed = options.seed;
  const std::vector<std::string> groups =
      default_or(options.groups, {"Z2", "Z3", "Z4", "Z5", "Z6", "S3"});
  const int max_lambda = options.max_lambda > 0 ? options.max_lambda : 3;
  for (const std::string& name : groups) {
    const FiniteGroup group = group_by_name(name);
    ReesEnumerationOptions ropts;
    ropts.max_group_size = 16;
    ropts.max_i = 1;
    ropts.max_lambda = max_lambda;
    ropts.with_zero = true;
    // Exhaustive sandwich enumeration for |G| <= 4, seeded samples above.
    ropts.max_sandwich_samples =
        group.size() <= 4 ? 1000000 : options.max_sandwich_samples;
    ropts.seed = options.seed;
    enumerate_rees({name}, ropts, [&](const ReesMatrixSpec& spec) {
      ++report.instances;
      const FiniteSemigroup s = rees_matrix(spec);
      const RightAct act = regular_act(s);
      for (int m = 1; m < act.size(); ++m) {
        for (int n = m + 1; n < act.size(); ++n) {
          ++report.checks;
          const Congruence closed = monocyclic_closed_form(spec, act, m, n);
          const Congruence engine = monocyclic(act, m, n);
          if (!(closed == engine)) {
            report.failures.push_back(
                spec_tag(spec) + " pair (" + act.state_label(m) + "," +
                act.state_label(n) + "): closed form disagrees with closure");
          }
        }
      }
      return report.failures.size() < 25;
    });
  }
  report.passed = report.failures.empty();
  return report;
}

// The shared spec stream for the si/irreducibility suites: catalog groups
// of order <= 8 at i,lambda in {1,2}, plus Z9..Z12 at 1x1, all with zero.
void for_each_standard_spec(
    const SuiteOptions& options,
    const std::function<bool(const ReesMatrixSpec&)>& visit) {
  const bool defaults = options.groups.empty();
  const std::vector<std::string> groups = default_or(
      options.groups,
      {"Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "V4", "S3", "Q8"});
  ReesEnumerationOptions ropts;
  ropts.max_group_size = 16;
  ropts.max_i = options.max_i > 0 ? options.max_i : 2;
  ropts.max_lambda = options.max_lambda > 0 ? options.max_lambda : 2;
  ropts.with_zero = true;
  ropts.max_sandwich_samples = options.max_sandwich_samples;
  ropts.seed = options.seed;
  bool keep_going = true;
  enumerate_rees(groups, ropts, [&](const ReesMatrixSpec& spec) {
    keep_going = visit(spec);
    return keep_going;
  });
  if (defaults && options.max_i == 0 && keep_going) {
    ReesEnumerationOptions ext = ropts;
    ext.max_i = 1;
    ext.max_lambda = 1;
    enumerate_rees({"Z9", "Z10", "Z11", "Z12"}, ext, visit);
  }
}

SuiteReport run_prediction_suite(const SuiteOptions& options,
                                 const std::string& name, bool check_si) {
  SuiteReport report;
  report.suite = name;
  report.seed = options.seed;
  for_each_standard_spec(options, [&](const ReesMatrixSpec& spec) {
    ++report.instances;
    ++report.checks;
    const TriplePredicates predicted = predict_completely_0_simple(spec);
    const FiniteSemigroup s = rees_matrix(spec);
    const CongruenceSummary engine = summarize(regular_act(s));
    const bool want = check_si ? predicted.si : predicted.irreducible;
    const bool got = check_si ? engine.si : engine.irreducible;
    if (want != got) {
      report.failures.push_back(spec_tag(spec) + ": predicted " +
                                (want ? "true" : "false") + ", engine says " +
                                (got ? "true" : "false"));
    }
    return report.failures.size() < 25;
  });
  report.passed = report.failures.empty();
  return report;
}

SuiteReport run_prop25(const SuiteOptions& options) {
  SuiteReport report;
  report.suite = "prop2.5";
  report.seed = options.seed;
  const std::vector<std::string> groups =
      default_or(options.groups, {"Z1", "Z2", "Z3"});
  ReesEnumerationOptions ropts;
  ropts.max_group_size = 16;
  ropts.max_i = options.max_i > 0 ? options.max_i : 3;
  ropts.max_lambda = options.max_lambda > 0 ? options.max_lambda : 3;
  ropts.max_sandwich_samples = options.max_sandwich_samples;
  ropts.seed = options.seed;
  for (bool with_zero : {false, true}) {
    ropts.with_zero = with_zero;
    enumerate_rees(groups, ropts, [&](const ReesMatrixSpec& spec) {
      ++report.instances;
      ++report.checks;
      const bool predicted = with_zero
                                 ? predict_completely_0_simple(spec).uniform
                                 : predict_completely_simple(spec);
      const FiniteSemigroup s = rees_matrix(spec);
      const CongruenceSummary engine = summarize(regular_act(s));
      if (predicted != engine.uniform) {
        report.failures.push_back(spec_tag(spec) + ": predicted uniform=" +
                                  (predicted ? "true" : "false") +
                                  ", engine says " +
                                  (engine.uniform ? "true" : "false"));
      }
      return report.failures.size() < 25;
    });
  }
  report.passed = report.failures.empty();
  return report;
}

struct BandRun {
  int i;
  int lambda;
  int max_states;
};

std::vector<BandRun> band_runs(const SuiteOptions& options) {
  if (options.max_i > 0 && options.max_lambda > 0) {
    return {{options.max_i, options.max_lambda,
             options.max_states > 0 ? options.max_states : 3}};
  }
  return {{1, 2, 3}, {2, 1, 3}, {1, 3, 3}, {3, 1, 3}, {2, 2, 3},
          {1, 2, 4}, {2, 1, 4}};
}

SuiteReport run_atlas_suite(const SuiteOptions& options,
                            const std::string& name,
                            const std::vector<std::string>& checks) {
  SuiteReport report;
  report.suite = name;
  report.seed = options.seed;
  for (const BandRun& run : band_runs(options)) {
    EnumerationBounds bounds;
    bounds.budget = options.budget;
    bounds.override_budget = options.override_budget;
    const AtlasReport atlas =
        build_atlas(run.i, run.lambda, run.max_states, bounds);
    report.instances += atlas.census.acts;
    report.checks += atlas.rows.size() * checks.size();
    for (const AtlasViolation& v : atlas.violations) {
      if (std::find(checks.begin(), checks.end(), v.check) != checks.end()) {
        std::ostringstream line;
        line << "band " << run.i << "x" << run.lambda << " act " << v.act_id
             << " [" << v.check << "]: " << v.detail;
        report.failures.push_back(line.str());
      }
    }
    std::ostringstream note;
    note << "band " << run.i << "x" << run.lambda << " n<=" << run.max_states
         << ": acts=" << atlas.census.acts << " si=" << atlas.census.si
         << " uniform=" << atlas.census.uniform;
    report.notes.push_back(note.str());
  }
  report.passed = report.failures.empty();
  return report;
}

SuiteReport run_remark28(const SuiteOptions& options) {
  SuiteReport report;
  report.suite = "remark2.8";
  report.seed = options.seed;
  auto check_spec = [&report](const ReesMatrixSpec& spec) {
    ++report.instances;
    const FiniteSemigroup s = rees_matrix(spec);
    const CongruenceSummary engine = summarize(regular_act(s));
    if (engine.si) {
      ++report.checks;
      const TwoSidedResult two_sided = two_sided_check(s, *engine.least);
      if (!two_sided.two_sided) {
        report.failures.push_back(
            spec_tag(spec) + ": least right congruence is not left compatible at (" +
            s.label(two_sided.witness[0]) + ", " + s.label(two_sided.witness[1]) +
            ", " + s.label(two_sided.witness[2]) + ")");
      }
    }
    return report.failures.size() < 25;
  };
  for_each_standard_spec(options, check_spec);
  // The uniformity suite's instances too (they include specs without zero).
  {
    const std::vector<std::string> groups =
        default_or(options.groups, {"Z1", "Z2", "Z3"});
    ReesEnumerationOptions ropts;
    ropts.max_group_size = 16;
    ropts.max_i = options.max_i > 0 ? options.max_i : 3;
    ropts.max_lambda = options.max_lambda > 0 ? options.max_lambda : 3;
    ropts.max_sandwich_samples = options.max_sandwich_samples;
    ropts.seed = options.seed;
    for (bool with_zero : {false, true}) {
      ropts.with_zero = with_zero;
      enumerate_rees(groups, ropts, check_spec);
    }
  }
  report.passed = report.failures.empty();
  return report;
}

SuiteReport run_cor23(const SuiteOptions& options) {
  SuiteReport report;
  report.suite = "cor2.3";
  report.seed = options.seed;
  auto check_semigroup = [&report](const FiniteSemigroup& s,
                                   const std::string& tag) {
    ++report.instances;
    const CongruenceSummary summary = summarize(regular_act(s));
    if (!summary.uniform) return;
    for (int x = 0; x < s.size(); ++x) {
      for (int y = 0; y < s.size(); ++y) {
        if (s.mul(x, y) != y) continue;
        ++report.checks;
        if (!is_left_identity(s, x) && !is_left_zero(s, y)) {
          report.failures.push_back(tag + ": xy = y at (" + s.label(x) + ", " +
                                    s.label(y) +
                                    ") without left identity or left zero");
        }
      }
    }
  };
  for (int i = 1; i <= 3; ++i) {
    for (int l = 1; l <= 3; ++l) {
      check_semigroup(rectangular_band(i, l),
                      "band " + std::to_string(i) + "x" + std::to_string(l));
    }
  }
  const std::vector<std::string> groups = default_or(
      options.groups,
      {"Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "V4", "S3", "Q8"});
  for (const std::string& name : groups) {
    check_semigroup(group_by_name(name).base, name);
  }
  for (const char* name : {"Z1", "Z2", "Z3", "Z4"}) {
    const FiniteGroup group = group_by_name(name);
    for (int i = 1; i <= 2; ++i) {
      for (int l = 1; l <= 2; ++l) {
        for (bool with_zero : {false, true}) {
          ReesMatrixSpec spec;
          spec.group = group;
          spec.i_size = i;
          spec.lambda_size = l;
          spec.sandwich = identity_sandwich(group, i, l);
          spec.with_zero = with_zero;
          check_semigroup(rees_matrix(spec), spec_tag(spec));
        }
      }
    }
  }
  report.passed = report.failures.empty();
  return report;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "prop2.6", "thm2.7",    "thm2.9", "prop2.5", "thm3.6",
      "thm3.10", "prop3.5",   "remark2.8", "cor2.3", "prop2.4"};
  return names;
}

bool is_suite_name(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "prop2.6") return run_prop26(options);
  if (name == "thm2.7") return run_prediction_suite(options, name, true);
  if (name == "thm2.9") return run_prediction_suite(options, name, false);
  if (name == "prop2.5") return run_prop25(options);
  if (name == "thm3.6") {
    return run_atlas_suite(options, name,
                           {"si-agreement", "no-zero-order-bound", "least-pair",
                            "si-implies-irreducible"});
  }
  if (name == "thm3.10") {
    return run_atlas_suite(options, name,
                           {"uniform-agreement", "kernel-existence",
                            "uniform-right-zero", "irreducible-implies-uniform"});
  }
  if (name == "prop3.5") return run_atlas_suite(options, name, {"two-zero-bounds"});
  if (name == "prop2.4") {
    return run_atlas_suite(options, name, {"uniform-subact-meets"});
  }
  if (name == "remark2.8") return run_remark28(options);
  if (name == "cor2.3") return run_cor23(options);
  throw Error(ErrorKind::kParseError,
              "unknown suite \"" + name + "\" (see suite list)");
}

OracleReport engine_oracle_suite(std::uint32_t seed, int random_acts) {
  OracleReport report;
  report.seed = seed;

  // The least congruence containing the pairs, straight from the
  // definition: filter the full lattice and take the unique member that
  // refines every other candidate.
  auto brute_least = [](const std::vector<std::pair<int, int>>& pairs,
                        const std::vector<Congruence>& all) {
    const Congruence* least = nullptr;
    for (const Congruence& c : all) {
      bool contains = true;
      for (auto [x, y] : pairs) contains = contains && c.same(x, y);
      if (!contains) continue;
      if (least == nullptr || refines(c, *least)) least = &c;
    }
    return least;  // never null: the universal congruence qualifies
  };

  auto check_act = [&](const RightAct& act, bool exhaustive_pairs,
                       SplitRng* rng) {
    const std::vector<Congruence> all = all_congruences_bruteforce(act);
    std::vector<std::vector<std::pair<int, int>>> pair_sets;
    if (exhaustive_pairs) {
      pair_sets.push_back({});
      std::vector<std::pair<int, int>> singles;
      for (int x = 0; x < act.size(); ++x) {
        for (int y = x + 1; y < act.size(); ++y) singles.emplace_back(x, y);
      }
      for (auto p : singles) pair_sets.push_back({p});
      for (size_t a = 0; a < singles.size(); ++a) {
        for (size_t b = a + 1; b < singles.size(); ++b) {
          pair_sets.push_back({singles[a], singles[b]});
        }
      }
    } else {
      std::vector<std::pair<int, int>> set;
      const int count = 1 + static_cast<int>(rng->below(2));
      for (int i = 0; i < count; ++i) {
        const int x = static_cast<int>(rng->below(act.size()));
        const int y = static_cast<int>(rng->below(act.size()));
        if (x != y) set.emplace_back(x, y);
      }
      pair_sets.push_back(std::move(set));
    }
    for (const auto& pairs : pair_sets) {
      ++report.checks;
      const Congruence fast = closure(act, pairs);
      const Congruence* expected = brute_least(pairs, all);
      if (expected == nullptr || !(fast == *expected)) {
        report.failures.push_back("closure mismatch on act with " +
                                  std::to_string(act.size()) + " states");
        return;
      }
    }
  };

  // Exhaustive leg: every act on <= 3 states over every rectangular band
  // with <= 4 elements, every pair set of size <= 2.
  for (auto [bi, bl] : {std::pair<int, int>{1, 1}, {1, 2}, {2, 1}, {1, 3},
                        {3, 1}, {2, 2}, {1, 4}, {4, 1}}) {
    const FiniteSemigroup band = rectangular_band(bi, bl);
    for (int n = 1; n <= 3; ++n) {
      EnumerationBounds bounds;
      bounds.dedup = false;
      enumerate_acts(band, n, bounds, [&](const RightAct& act) {
        ++report.exhaustive_acts;
        check_act(act, true, nullptr);
        return report.failures.size() < 10;
      });
    }
  }

  // Random leg: seeded acts over a pool of small catalog semigroups.
  std::vector<FiniteSemigroup> pool;
  for (const char* name : {"Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "V4", "S3"}) {
    pool.push_back(group_by_name(name).base);
  }
  for (auto [i, l] : {std::pair<int, int>{1, 2}, {2, 1}, {2, 2}, {1, 3}, {3, 1},
                      {2, 3}, {3, 2}}) {
    pool.push_back(rectangular_band(i, l));
  }
  {
    ReesMatrixSpec spec;
    spec.group = group_by_name("Z2");
    spec.i_size = 1;
    spec.lambda_size = 1;
    spec.sandwich = identity_sandwich(spec.group, 1, 1);
    spec.with_zero = true;
    pool.push_back(rees_matrix(spec));
  }
  SplitRng rng(seed);
  for (int i = 0; i < random_acts && report.failures.size() < 10; ++i) {
    const FiniteSemigroup& s = pool[i % pool.size()];
    const int n = 2 + static_cast<int>(rng.below(5));  // 2..6 states
    const RightAct act = random_act(s, n, rng);
    ++report.random_acts;
    check_act(act, false, &rng);
  }
  report.passed = report.failures.empty();
  return report;
}

}  // namespace racts
