#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "racts/catalog.hpp"
#include "racts/closedform.hpp"
#include "racts/congruence.hpp"
#include "racts/rees.hpp"

using namespace racts;

namespace {

ReesMatrixSpec make_spec(const char* group, int i, int lambda, bool zero) {
  ReesMatrixSpec spec;
  spec.group = group_by_name(group);
  spec.i_size = i;
  spec.lambda_size = lambda;
  spec.sandwich = identity_sandwich(spec.group, i, lambda);
  spec.with_zero = zero;
  return spec;
}

}  // namespace

TEST_CASE("rectangular band recognition recovers coordinates") {
  FiniteSemigroup band = rectangular_band(3, 2);
  REQUIRE(is_rect_band(band));
  RectBandCoords coords = recognize_rect_band(band);
  REQUIRE(coords.i_size == 3);
  REQUIRE(coords.lambda_size == 2);
  for (int x = 0; x < band.size(); ++x) {
    for (int y = 0; y < band.size(); ++y) {
      REQUIRE(band.mul(x, y) == coords.element_at[coords.row[x]][coords.col[y]]);
    }
  }
  REQUIRE(!is_rect_band(cyclic_group(2).base));
  REQUIRE_THROWS_AS(recognize_rect_band(cyclic_group(2).base), Error);
}

TEST_CASE("monocyclic closed form: generator pair spanning both columns") {
  ReesMatrixSpec spec = make_spec("Z4", 1, 2, true);
  RightAct act = regular_act(rees_matrix(spec));
  int m = rees_index(spec, 0, 0, 0);  // (0,e,0)
  int n = rees_index(spec, 0, 1, 1);  // (0,g,1)
  Congruence c = monocyclic_closed_form(spec, act, m, n);
  // X = e * p * (g * p)^-1 = g^3, which generates Z4: one nonzero class
  REQUIRE(c.num_classes == 2);
  REQUIRE(!c.same(0, m));
  for (int x = 1; x < act.size(); ++x) REQUIRE(c.same(m, x));
  REQUIRE(c == closure(act, {{m, n}}));
}

TEST_CASE("monocyclic closed form: X = e gives the diagonal plus the pair") {
  ReesMatrixSpec spec = make_spec("Z4", 1, 2, true);
  RightAct act = regular_act(rees_matrix(spec));
  int m = rees_index(spec, 0, 1, 0);  // (0,g,0)
  int n = rees_index(spec, 0, 1, 1);  // (0,g,1)
  Congruence c = monocyclic_closed_form(spec, act, m, n);
  REQUIRE(c.num_classes == act.size() - 1);  // 8 classes on 9 states
  REQUIRE(c.same(m, n));
  for (int x = 0; x < act.size(); ++x) {
    for (int y = x + 1; y < act.size(); ++y) {
      if (x == m && y == n) continue;
      REQUIRE(!c.same(x, y));
    }
  }
  REQUIRE(c == closure(act, {{m, n}}));
}

TEST_CASE("monocyclic closed form: X of order two splits a single column") {
  ReesMatrixSpec spec = make_spec("Z4", 1, 1, true);
  RightAct act = regular_act(rees_matrix(spec));
  int m = rees_index(spec, 0, 2, 0);  // (0,g2,0)
  int n = rees_index(spec, 0, 0, 0);  // (0,e,0)
  Congruence c = monocyclic_closed_form(spec, act, m, n);
  REQUIRE(c.num_classes == 3);  // {0}, {e,g2}, {g,g3}
  REQUIRE(c.same(rees_index(spec, 0, 0, 0), rees_index(spec, 0, 2, 0)));
  REQUIRE(c.same(rees_index(spec, 0, 1, 0), rees_index(spec, 0, 3, 0)));
  REQUIRE(!c.same(rees_index(spec, 0, 0, 0), rees_index(spec, 0, 1, 0)));
  REQUIRE(!c.same(0, rees_index(spec, 0, 0, 0)));
  REQUIRE(c == closure(act, {{m, n}}));
}

TEST_CASE("monocyclic closed form: pairs through the zero are universal") {
  ReesMatrixSpec spec = make_spec("Z3", 1, 2, true);
  RightAct act = regular_act(rees_matrix(spec));
  Congruence c = monocyclic_closed_form(spec, act, 0, 3);
  REQUIRE(c.is_universal());
  REQUIRE(c == closure(act, {{0, 3}}));
}

TEST_CASE("monocyclic closed form preconditions") {
  ReesMatrixSpec wide = make_spec("Z2", 2, 1, true);
  RightAct wide_act = regular_act(rees_matrix(wide));
  REQUIRE_THROWS_AS(monocyclic_closed_form(wide, wide_act, 1, 2), Error);
  ReesMatrixSpec no_zero = make_spec("Z2", 1, 2, false);
  RightAct nz_act = regular_act(rees_matrix(no_zero));
  try {
    monocyclic_closed_form(no_zero, nz_act, 0, 1);
    REQUIRE(false);
  } catch (const Error& e) {
    REQUIRE(e.kind() == ErrorKind::kPreconditionViolated);
  }
}

TEST_CASE("monocyclic closed form equals closure for non-identity sandwiches") {
  std::vector<ReesMatrixSpec> specs;
  ReesMatrixSpec a = make_spec("Z4", 1, 2, true);
  a.sandwich = {{0}, {1}};  // p = [e; g]
  specs.push_back(a);
  ReesMatrixSpec b = make_spec("Z6", 1, 3, true);
  b.sandwich = {{1}, {4}, {3}};
  specs.push_back(b);
  ReesMatrixSpec c = make_spec("S3", 1, 2, true);
  c.sandwich = {{3}, {1}};
  specs.push_back(c);
  for (const ReesMatrixSpec& spec : specs) {
    RightAct act = regular_act(rees_matrix(spec));
    for (int m = 1; m < act.size(); ++m) {
      for (int n = m + 1; n < act.size(); ++n) {
        CAPTURE(act.size());
        CAPTURE(m);
        CAPTURE(n);
        REQUIRE(monocyclic_closed_form(spec, act, m, n) ==
                closure(act, {{m, n}}));
      }
    }
  }
}

TEST_CASE("0-simple predictions on the documented instances") {
  TriplePredicates p = predict_completely_0_simple(make_spec("Z4", 1, 1, true));
  REQUIRE(p.si);
  REQUIRE(p.irreducible);
  REQUIRE(p.uniform);

  p = predict_completely_0_simple(make_spec("Z6", 1, 1, true));
  REQUIRE(!p.si);
  REQUIRE(!p.irreducible);
  REQUIRE(p.uniform);

  p = predict_completely_0_simple(make_spec("Z4", 1, 2, true));
  REQUIRE(!p.si);
  REQUIRE(p.uniform);

  p = predict_completely_0_simple(make_spec("Q8", 1, 1, true));
  REQUIRE(p.si);
  REQUIRE(p.irreducible);

  p = predict_completely_0_simple(make_spec("Z12", 1, 1, true));
  REQUIRE(!p.si);
  REQUIRE(!p.irreducible);

  p = predict_completely_0_simple(make_spec("Z9", 1, 1, true));
  REQUIRE(p.si);
  REQUIRE(p.irreducible);

  p = predict_completely_0_simple(make_spec("V4", 1, 1, true));
  REQUIRE(!p.si);
}

TEST_CASE("the three-element 0-group edge case is answered by the engine") {
  // over the trivial group with two columns the semigroup is the right
  // zero pair with an adjoined zero; it is si and irreducible even though
  // the group is trivial, so the small-size bypass must cover it
  ReesMatrixSpec spec = make_spec("Z1", 1, 2, true);
  TriplePredicates p = predict_completely_0_simple(spec);
  CongruenceSummary s = summarize(regular_act(rees_matrix(spec)));
  REQUIRE(p.si == s.si);
  REQUIRE(p.irreducible == s.irreducible);
  REQUIRE(p.uniform == s.uniform);
  REQUIRE(p.si);
  REQUIRE(p.irreducible);
  REQUIRE(p.uniform);
  // the two-element case (trivial group, single cell) likewise
  ReesMatrixSpec tiny = make_spec("Z1", 1, 1, true);
  TriplePredicates q = predict_completely_0_simple(tiny);
  REQUIRE(q.si);
  REQUIRE(q.uniform);
}

TEST_CASE("0-simple predictions agree with the engine on a sweep") {
  for (const char* name : {"Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "V4"}) {
    for (int i = 1; i <= 2; ++i) {
      for (int l = 1; l <= 2; ++l) {
        ReesMatrixSpec spec = make_spec(name, i, l, true);
        TriplePredicates p = predict_completely_0_simple(spec);
        CongruenceSummary s = summarize(regular_act(rees_matrix(spec)));
        CAPTURE(name);
        CAPTURE(i);
        CAPTURE(l);
        REQUIRE(p.si == s.si);
        REQUIRE(p.irreducible == s.irreducible);
        REQUIRE(p.uniform == s.uniform);
      }
    }
  }
}

TEST_CASE("completely simple uniformity: |I| = 1 outside the 2-element case") {
  REQUIRE(predict_completely_simple(make_spec("Z1", 1, 3, false)));
  REQUIRE(!predict_completely_simple(make_spec("Z1", 2, 2, false)));
  REQUIRE(predict_completely_simple(make_spec("Z1", 2, 1, false)));  // |S| = 2
  REQUIRE(predict_completely_simple(make_spec("Z1", 1, 2, false)));
  REQUIRE(predict_completely_simple(make_spec("Z4", 1, 1, false)));
  REQUIRE(!predict_completely_simple(make_spec("Z4", 2, 1, false)));
  // engine agreement on the same instances
  for (const char* name : {"Z1", "Z2", "Z3"}) {
    for (int i = 1; i <= 3; ++i) {
      for (int l = 1; l <= 3; ++l) {
        ReesMatrixSpec spec = make_spec(name, i, l, false);
        CAPTURE(name);
        CAPTURE(i);
        CAPTURE(l);
        REQUIRE(predict_completely_simple(spec) ==
                summarize(regular_act(rees_matrix(spec))).uniform);
      }
    }
  }
}

TEST_CASE("rect band classification: simple pair without zero") {
  RightAct act = regular_act(rectangular_band(1, 2));
  RectBandClassification c = classify_act_rect_band(act);
  REQUIRE(c.verdict == RectBandVerdict::kSi);
  REQUIRE(c.si);
  REQUIRE(c.uniform);
  REQUIRE(c.case_tag == RectBandCase::kNoZeroSimplePair);
  REQUIRE(c.zeros.empty());
  REQUIRE(c.lambda_partition.has_value());
  REQUIRE(c.lambda_partition->first == std::vector<int>{0});
  REQUIRE(c.lambda_partition->second == std::vector<int>{1});
}

TEST_CASE("rect band classification: two zeros, separated") {
  FiniteSemigroup lz = rectangular_band(2, 1);
  RightAct act = make_act(lz, {"t1", "t2", "a"}, {{0, 0}, {1, 1}, {0, 1}});
  RectBandClassification c = classify_act_rect_band(act);
  REQUIRE(c.verdict == RectBandVerdict::kSi);
  REQUIRE(c.case_tag == RectBandCase::kTwoZeroSeparated);
  REQUIRE(c.zeros == std::vector<int>{0, 1});
  REQUIRE(c.kernel_pair.has_value());
  REQUIRE(c.kernel_pair->first == 0);
  REQUIRE(c.kernel_pair->second == 1);
}

TEST_CASE("rect band classification: one zero with a kernel pair") {
  FiniteSemigroup rz = rectangular_band(1, 2);
  RightAct act = make_act(rz, {"z", "x", "y"}, {{0, 0}, {1, 2}, {1, 2}});
  RectBandClassification c = classify_act_rect_band(act);
  REQUIRE(c.verdict == RectBandVerdict::kSi);
  REQUIRE(c.case_tag == RectBandCase::kOneZeroKernel);
  REQUIRE(c.kernel_pair.has_value());
  REQUIRE(c.kernel_pair->first == 1);
  REQUIRE(c.kernel_pair->second == 2);
  REQUIRE(c.lambda_partition.has_value());
  CongruenceSummary s = summarize(act);
  REQUIRE(s.si);
  REQUIRE(s.least.has_value());
  REQUIRE(*s.least == rees_congruence(act, {1, 2}));
}

TEST_CASE("rect band classification: disjoint nonzero subacts give neither") {
  FiniteSemigroup rz = rectangular_band(1, 2);
  RightAct act = make_act(rz, {"z", "a", "b"}, {{0, 0}, {0, 0}, {0, 0}});
  RectBandClassification c = classify_act_rect_band(act);
  REQUIRE(c.verdict == RectBandVerdict::kNeither);
  REQUIRE(!c.si);
  REQUIRE(!c.uniform);
  CongruenceSummary s = summarize(act);
  REQUIRE(!s.si);
  REQUIRE(!s.uniform);
}

TEST_CASE("rect band classification: three zeros can be neither si nor uniform") {
  FiniteSemigroup rz = rectangular_band(1, 2);
  RightAct act =
      make_act(rz, {"z1", "z2", "z3"}, {{0, 0}, {1, 1}, {2, 2}});
  RectBandClassification c = classify_act_rect_band(act);
  REQUIRE(c.verdict == RectBandVerdict::kNeither);
  CongruenceSummary s = summarize(act);
  REQUIRE(!s.si);
  REQUIRE(!s.uniform);
}

TEST_CASE("rect band classification handles the degenerate sizes") {
  FiniteSemigroup rz = rectangular_band(1, 2);
  RightAct one = make_act(rz, {"z"}, {{0, 0}});
  RectBandClassification c1 = classify_act_rect_band(one);
  REQUIRE(c1.verdict == RectBandVerdict::kUniformNotSi);
  REQUIRE(!c1.si);
  REQUIRE(c1.uniform);
  // any two-state act over a band is si
  RightAct two = make_act(rz, {"z", "a"}, {{0, 0}, {0, 0}});
  RectBandClassification c2 = classify_act_rect_band(two);
  REQUIRE(c2.si);
  REQUIRE(summarize(two).si);
}

TEST_CASE("classification rejects non-band semigroups") {
  RightAct act = regular_act(cyclic_group(2).base);
  try {
    classify_act_rect_band(act);
    REQUIRE(false);
  } catch (const Error& e) {
    REQUIRE(e.kind() == ErrorKind::kNotARectangularBand);
  }
}

TEST_CASE("two-zero bound check on the three-state si act and a violator") {
  FiniteSemigroup lz = rectangular_band(2, 1);
  RightAct good = make_act(lz, {"t1", "t2", "a"}, {{0, 0}, {1, 1}, {0, 1}});
  BoundCheckReport r = two_zero_bound_check(good);
  REQUIRE(r.ok);
  REQUIRE(r.violations.empty());

  // a fourth state whose orbit is a single zero violates the orbit clause
  RightAct bad = make_act(lz, {"t1", "t2", "a", "b"},
                          {{0, 0}, {1, 1}, {0, 1}, {0, 0}});
  BoundCheckReport rb = two_zero_bound_check(bad);
  REQUIRE(!rb.ok);
  REQUIRE(rb.violations.size() == 1);

  // one-zero acts are outside the precondition
  FiniteSemigroup rz = rectangular_band(1, 2);
  RightAct one_zero = make_act(rz, {"z", "x", "y"}, {{0, 0}, {1, 2}, {1, 2}});
  REQUIRE_THROWS_AS(two_zero_bound_check(one_zero), Error);
}
