#include <string>
#include <vector>

#include "doctest.h"
#include "racts/catalog.hpp"
#include "racts/congruence.hpp"
#include "racts/json_io.hpp"

using namespace racts;

namespace {

const std::string kDataDir = RACTS_TEST_DATA_DIR;

ReesMatrixSpec sample_spec() {
  ReesMatrixSpec spec;
  spec.group = group_by_name("Z3");
  spec.i_size = 2;
  spec.lambda_size = 2;
  spec.sandwich = {{0, kSandwichZero}, {1, 2}};
  spec.with_zero = true;
  return spec;
}

}  // namespace

TEST_CASE("semigroup json round trip") {
  FiniteSemigroup s = rectangular_band(2, 3);
  json j = semigroup_to_json(s);
  REQUIRE(j["version"] == 1);
  FiniteSemigroup back = semigroup_from_json(j);
  REQUIRE(back == s);
}

TEST_CASE("unsupported versions and malformed shapes are rejected") {
  json j = semigroup_to_json(rectangular_band(1, 2));
  j["version"] = 2;
  try {
    semigroup_from_json(j);
    REQUIRE(false);
  } catch (const Error& e) {
    REQUIRE(e.kind() == ErrorKind::kParseError);
  }
  REQUIRE_THROWS_AS(semigroup_from_json(json::parse("{\"version\":1}")), Error);
  REQUIRE_THROWS_AS(semigroup_from_json(json::parse("[1,2]")), Error);
  REQUIRE_THROWS_AS(act_from_json(json::parse("{\"version\":1}")), Error);
  REQUIRE_THROWS_AS(rees_spec_from_json(json::parse("{\"version\":1}")), Error);
}

TEST_CASE("rees spec json round trip keeps ZERO entries") {
  ReesMatrixSpec spec = sample_spec();
  json j = rees_spec_to_json(spec);
  REQUIRE(j["sandwich"][0][1] == "0");
  REQUIRE(j["sandwich"][1][0] == 1);
  ReesMatrixSpec back = rees_spec_from_json(j);
  REQUIRE(back.group == spec.group);
  REQUIRE(back.i_size == spec.i_size);
  REQUIRE(back.lambda_size == spec.lambda_size);
  REQUIRE(back.sandwich == spec.sandwich);
  REQUIRE(back.with_zero == spec.with_zero);
}

TEST_CASE("rees spec json accepts the cyclic group shorthand") {
  json j = load_json_file(kDataDir + "/z4_1x1.json");
  REQUIRE(detect_artifact_kind(j) == ArtifactKind::kReesSpec);
  ReesMatrixSpec spec = rees_spec_from_json(j);
  REQUIRE(spec.group.size() == 4);
  REQUIRE(spec.i_size == 1);
  REQUIRE(spec.lambda_size == 1);
  REQUIRE(spec.with_zero);
  REQUIRE(rees_size(spec) == 5);
}

TEST_CASE("rees spec json validates semantics on load") {
  json j = rees_spec_to_json(sample_spec());
  j["sandwich"][0][0] = "0";
  j["sandwich"][1][0] = "0";  // column 0 all ZERO -> irregular
  try {
    rees_spec_from_json(j);
    REQUIRE(false);
  } catch (const Error& e) {
    REQUIRE(e.kind() == ErrorKind::kIrregularSandwich);
  }
}

TEST_CASE("act json round trip") {
  FiniteSemigroup lz = rectangular_band(2, 1);
  RightAct act = make_act(lz, {"t1", "t2", "a"}, {{0, 0}, {1, 1}, {0, 1}});
  json j = act_to_json(act);
  RightAct back = act_from_json(j);
  REQUIRE(back == act);
}

TEST_CASE("act json resolves semigroup file references against base_dir") {
  json j = load_json_file(kDataDir + "/act_file_ref.json");
  RightAct act = act_from_json(j, kDataDir);
  REQUIRE(act.size() == 3);
  REQUIRE(act.semigroup.size() == 2);
  REQUIRE(act.semigroup.label(0) == "s1");
  REQUIRE(act.state_index("y") == 2);
  CongruenceSummary s = summarize(act);
  REQUIRE(s.si);
}

TEST_CASE("congruence json lists classes by smallest member and round trips") {
  FiniteSemigroup lz = rectangular_band(2, 1);
  RightAct act = make_act(lz, {"t1", "t2", "a"}, {{0, 0}, {1, 1}, {0, 1}});
  Congruence c = rees_congruence(act, {0, 1});
  json j = congruence_to_json(act, c);
  REQUIRE(j["classes"].size() == 2);
  REQUIRE(j["classes"][0] == json::array({"t1", "t2"}));
  REQUIRE(j["classes"][1] == json::array({"a"}));
  Congruence back = congruence_from_json(act, j);
  REQUIRE(back == c);

  json shuffled = json::parse(
      R"({"version":1,"classes":[["a"],["t2","t1"]]})");
  REQUIRE(congruence_from_json(act, shuffled) == c);
}

TEST_CASE("congruence json rejects unknown, missing and duplicate states") {
  FiniteSemigroup lz = rectangular_band(2, 1);
  RightAct act = make_act(lz, {"t1", "t2", "a"}, {{0, 0}, {1, 1}, {0, 1}});
  for (const char* text :
       {R"({"classes":[["t1","t2"],["bogus"]]})",
        R"({"classes":[["t1","t2"]]})",
        R"({"classes":[["t1","t2"],["a","t1"]]})"}) {
    CAPTURE(text);
    try {
      congruence_from_json(act, json::parse(text));
      REQUIRE(false);
    } catch (const Error& e) {
      REQUIRE(e.kind() == ErrorKind::kParseError);
    }
  }
}

TEST_CASE("artifact kind detection") {
  REQUIRE(detect_artifact_kind(load_json_file(kDataDir + "/band_1x2.json")) ==
          ArtifactKind::kSemigroup);
  REQUIRE(detect_artifact_kind(load_json_file(kDataDir + "/act_two_zero.json")) ==
          ArtifactKind::kAct);
  REQUIRE(detect_artifact_kind(load_json_file(kDataDir + "/z4_two_lambda.json")) ==
          ArtifactKind::kReesSpec);
  REQUIRE_THROWS_AS(detect_artifact_kind(json::parse("{\"version\":1}")), Error);
}

TEST_CASE("load_json_file failures carry kParseError") {
  try {
    load_json_file(kDataDir + "/does_not_exist.json");
    REQUIRE(false);
  } catch (const Error& e) {
    REQUIRE(e.kind() == ErrorKind::kParseError);
  }
}

TEST_CASE("save and reload") {
  json j = semigroup_to_json(rectangular_band(1, 3));
  const std::string path = "/tmp/racts_test_roundtrip.json";
  save_json_file(path, j);
  REQUIRE(load_json_file(path) == j);
}

TEST_CASE("summary and classification serializations carry the verdict keys") {
  FiniteSemigroup lz = rectangular_band(2, 1);
  RightAct act = make_act(lz, {"t1", "t2", "a"}, {{0, 0}, {1, 1}, {0, 1}});
  json summary = summary_to_json(act, summarize(act));
  REQUIRE(summary["si"] == true);
  REQUIRE(summary["uniform"] == true);
  REQUIRE(summary["least"][0] == json::array({"t1", "t2"}));
  REQUIRE(summary["principal_count"] == 2);

  json cls = classification_to_json(act, classify_act_rect_band(act));
  REQUIRE(cls["si"] == true);
  REQUIRE(cls["case"] == "two-zero-separated");

  TriplePredicates p{true, true, true};
  json pred = predicates_to_json(p, "completely-0-simple");
  REQUIRE(pred["si"] == true);
  REQUIRE(pred["case"] == "completely-0-simple");
}

TEST_CASE("atlas report serialization is shaped for the golden tests") {
  EnumerationBounds bounds;
  AtlasReport report = build_atlas(1, 2, 2, bounds);
  json j = atlas_report_to_json(report);
  REQUIRE(j["band"] == json::array({1, 2}));
  REQUIRE(j["census"]["acts"].get<std::uint64_t>() == report.census.acts);
  REQUIRE(j["rows"].size() == report.rows.size());
  REQUIRE(j["violations"].empty());
}
