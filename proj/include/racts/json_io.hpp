#pragma once

#include <string>

#include "json.hpp"

#include "racts/act.hpp"
#include "racts/closedform.hpp"
#include "racts/congruence.hpp"
#include "racts/enumerate.hpp"
#include "racts/rees.hpp"

namespace racts {

using json = nlohmann::json;

// All artifacts carry "version": 1; readers reject other versions and
// malformed shapes with Error(kParseError) (range problems surface as the
// usual validation errors).

json semigroup_to_json(const FiniteSemigroup& s);
FiniteSemigroup semigroup_from_json(const json& j);

// {"group": {"cyclic": n} | inline semigroup, "i_size", "lambda_size",
//  "sandwich": [[int | "0", ...], ...], "with_zero"}
json rees_spec_to_json(const ReesMatrixSpec& spec);
ReesMatrixSpec rees_spec_from_json(const json& j);

// {"semigroup": inline | {"file": relative-path}, "states", "action"};
// base_dir resolves the file reference.  Serialization always inlines.
json act_to_json(const RightAct& act);
RightAct act_from_json(const json& j, const std::string& base_dir = ".");

// {"classes": [[state labels...], ...]} sorted by smallest member index.
json congruence_to_json(const RightAct& act, const Congruence& c);
Congruence congruence_from_json(const RightAct& act, const json& j);

json classification_to_json(const RightAct& act,
                            const RectBandClassification& c);
json predicates_to_json(const TriplePredicates& p, const std::string& case_tag);

json summary_to_json(const RightAct& act, const CongruenceSummary& s);

json atlas_row_to_json(const AtlasRow& row);
json atlas_report_to_json(const AtlasReport& report);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

// Act (or regular act of a spec/semigroup) loaded from any of the three
// artifact kinds; kind is detected from the fields present.
enum class ArtifactKind { kSemigroup, kReesSpec, kAct };
ArtifactKind detect_artifact_kind(const json& j);

}  // namespace racts
