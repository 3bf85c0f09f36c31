#include "racts/json_io.hpp"

#include <filesystem>
#include <fstream>

#include "racts/catalog.hpp"

namespace racts {

namespace {

void require_version(const json& j, const char* what) {
  if (j.contains("version")) {
    if (!j["version"].is_number_integer() || j["version"].get<int>() != 1) {
      throw Error(ErrorKind::kParseError,
                  std::string(what) + ": unsupported version");
    }
  }
}

void require_object(const json& j, const char* what) {
  if (!j.is_object()) {
    throw Error(ErrorKind::kParseError, std::string(what) + ": expected object");
  }
}

std::vector<std::string> string_array(const json& j, const char* what) {
  if (!j.is_array()) {
    throw Error(ErrorKind::kParseError, std::string(what) + ": expected array");
  }
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) {
      throw Error(ErrorKind::kParseError,
                  std::string(what) + ": expected array of strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::vector<std::vector<int>> int_matrix(const json& j, const char* what) {
  if (!j.is_array()) {
    throw Error(ErrorKind::kParseError, std::string(what) + ": expected matrix");
  }
  std::vector<std::vector<int>> out;
  for (const auto& row : j) {
    if (!row.is_array()) {
      throw Error(ErrorKind::kParseError,
                  std::string(what) + ": expected matrix of ints");
    }
    std::vector<int> r;
    for (const auto& cell : row) {
      if (!cell.is_number_integer()) {
        throw Error(ErrorKind::kParseError,
                    std::string(what) + ": expected matrix of ints");
      }
      r.push_back(cell.get<int>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

json semigroup_to_json(const FiniteSemigroup& s) {
  json j;
  j["version"] = 1;
  j["elements"] = s.elements;
  j["table"] = s.table;
  return j;
}

FiniteSemigroup semigroup_from_json(const json& j) {
  require_object(j, "semigroup");
  require_version(j, "semigroup");
  if (!j.contains("elements") || !j.contains("table")) {
    throw Error(ErrorKind::kParseError,
                "semigroup: missing \"elements\" or \"table\"");
  }
  return make_semigroup(string_array(j["elements"], "semigroup elements"),
                        int_matrix(j["table"], "semigroup table"));
}

json rees_spec_to_json(const ReesMatrixSpec& spec) {
  json j;
  j["version"] = 1;
  j["group"] = semigroup_to_json(spec.group.base);
  j["i_size"] = spec.i_size;
  j["lambda_size"] = spec.lambda_size;
  json sandwich = json::array();
  for (const auto& row : spec.sandwich) {
    json r = json::array();
    for (int p : row) {
      if (p == kSandwichZero) {
        r.push_back("0");
      } else {
        r.push_back(p);
      }
    }
    sandwich.push_back(std::move(r));
  }
  j["sandwich"] = std::move(sandwich);
  j["with_zero"] = spec.with_zero;
  return j;
}

ReesMatrixSpec rees_spec_from_json(const json& j) {
  require_object(j, "rees spec");
  require_version(j, "rees spec");
  for (const char* key : {"group", "i_size", "lambda_size", "sandwich"}) {
    if (!j.contains(key)) {
      throw Error(ErrorKind::kParseError,
                  std::string("rees spec: missing \"") + key + "\"");
    }
  }
  ReesMatrixSpec spec;
  const json& g = j["group"];
  if (g.is_object() && g.contains("cyclic")) {
    if (!g["cyclic"].is_number_integer()) {
      throw Error(ErrorKind::kParseError, "rees spec: \"cyclic\" must be an int");
    }
    spec.group = cyclic_group(g["cyclic"].get<int>());
  } else {
    spec.group = as_group(semigroup_from_json(g));
  }
  if (!j["i_size"].is_number_integer() || !j["lambda_size"].is_number_integer()) {
    throw Error(ErrorKind::kParseError, "rees spec: sizes must be integers");
  }
  spec.i_size = j["i_size"].get<int>();
  spec.lambda_size = j["lambda_size"].get<int>();
  spec.with_zero = j.value("with_zero", false);
  if (j.contains("with_zero") && !j["with_zero"].is_boolean()) {
    throw Error(ErrorKind::kParseError, "rees spec: \"with_zero\" must be bool");
  }
  const json& sandwich = j["sandwich"];
  if (!sandwich.is_array()) {
    throw Error(ErrorKind::kParseError, "rees spec: \"sandwich\" must be a matrix");
  }
  for (const auto& row : sandwich) {
    if (!row.is_array()) {
      throw Error(ErrorKind::kParseError, "rees spec: \"sandwich\" must be a matrix");
    }
    std::vector<int> r;
    for (const auto& cell : row) {
      if (cell.is_string()) {
        if (cell.get<std::string>() != "0") {
          throw Error(ErrorKind::kParseError,
                      "rees spec: sandwich strings must be the ZERO mark \"0\"");
        }
        r.push_back(kSandwichZero);
      } else if (cell.is_number_integer()) {
        r.push_back(cell.get<int>());
      } else {
        throw Error(ErrorKind::kParseError,
                    "rees spec: sandwich entries are ints or \"0\"");
      }
    }
    spec.sandwich.push_back(std::move(r));
  }
  validate_spec(spec);
  return spec;
}

json act_to_json(const RightAct& act) {
  json j;
  j["version"] = 1;
  j["semigroup"] = semigroup_to_json(act.semigroup);
  j["states"] = act.states;
  j["action"] = act.action;
  return j;
}

RightAct act_from_json(const json& j, const std::string& base_dir) {
  require_object(j, "act");
  require_version(j, "act");
  for (const char* key : {"semigroup", "states", "action"}) {
    if (!j.contains(key)) {
      throw Error(ErrorKind::kParseError,
                  std::string("act: missing \"") + key + "\"");
    }
  }
  FiniteSemigroup s;
  const json& sg = j["semigroup"];
  if (sg.is_object() && sg.contains("file")) {
    if (!sg["file"].is_string()) {
      throw Error(ErrorKind::kParseError, "act: semigroup \"file\" must be a path");
    }
    const std::filesystem::path path =
        std::filesystem::path(base_dir) / sg["file"].get<std::string>();
    s = semigroup_from_json(load_json_file(path.string()));
  } else {
    s = semigroup_from_json(sg);
  }
  return make_act(std::move(s), string_array(j["states"], "act states"),
                  int_matrix(j["action"], "act action"));
}

json congruence_to_json(const RightAct& act, const Congruence& c) {
  json j;
  j["version"] = 1;
  json classes = json::array();
  // class_of is normalized to first occurrence, so iterating class ids in
  // order lists classes by smallest member.
  for (const auto& cls : c.classes()) {
    json labels = json::array();
    for (int x : cls) labels.push_back(act.state_label(x));
    classes.push_back(std::move(labels));
  }
  j["classes"] = std::move(classes);
  return j;
}

Congruence congruence_from_json(const RightAct& act, const json& j) {
  require_object(j, "congruence");
  require_version(j, "congruence");
  if (!j.contains("classes") || !j["classes"].is_array()) {
    throw Error(ErrorKind::kParseError, "congruence: missing \"classes\"");
  }
  std::vector<int> class_of(act.size(), -1);
  int id = 0;
  for (const auto& cls : j["classes"]) {
    for (const std::string& label : string_array(cls, "congruence class")) {
      const int x = act.state_index(label);
      if (x < 0) {
        throw Error(ErrorKind::kParseError,
                    "congruence: unknown state \"" + label + "\"");
      }
      if (class_of[x] >= 0) {
        throw Error(ErrorKind::kParseError,
                    "congruence: state \"" + label + "\" listed twice");
      }
      class_of[x] = id;
    }
    ++id;
  }
  for (int x = 0; x < act.size(); ++x) {
    if (class_of[x] < 0) {
      throw Error(ErrorKind::kParseError, "congruence: state \"" +
                                              act.state_label(x) +
                                              "\" missing from classes");
    }
  }
  // Renumber to first-occurrence order so representations compare equal.
  Congruence c;
  c.act = &act;
  c.class_of.assign(act.size(), -1);
  std::vector<int> remap(id, -1);
  for (int x = 0; x < act.size(); ++x) {
    int& slot = remap[class_of[x]];
    if (slot < 0) slot = c.num_classes++;
    c.class_of[x] = slot;
  }
  return c;
}

namespace {

json optional_pair_labels(const RightAct& act,
                          const std::optional<std::pair<int, int>>& p) {
  if (!p) return nullptr;
  return json::array({act.state_label(p->first), act.state_label(p->second)});
}

}  // namespace

json classification_to_json(const RightAct& act,
                            const RectBandClassification& c) {
  json j;
  j["version"] = 1;
  j["si"] = c.si;
  j["irreducible"] = nullptr;  // not decided by the band structure theory
  j["uniform"] = c.uniform;
  j["case"] = rect_band_case_name(c.case_tag);
  j["verdict"] = rect_band_verdict_name(c.verdict);
  if (c.lambda_partition) {
    j["lambda_partition"] =
        json::array({c.lambda_partition->first, c.lambda_partition->second});
  } else {
    j["lambda_partition"] = nullptr;
  }
  j["kernel"] = optional_pair_labels(act, c.kernel_pair);
  json witnesses = json::object();
  json zeros = json::array();
  for (int z : c.zeros) zeros.push_back(act.state_label(z));
  witnesses["zeros"] = std::move(zeros);
  if (!c.detail.empty()) witnesses["detail"] = c.detail;
  j["witnesses"] = std::move(witnesses);
  return j;
}

json predicates_to_json(const TriplePredicates& p, const std::string& case_tag) {
  json j;
  j["version"] = 1;
  j["si"] = p.si;
  j["irreducible"] = p.irreducible;
  j["uniform"] = p.uniform;
  j["case"] = case_tag;
  j["lambda_partition"] = nullptr;
  j["kernel"] = nullptr;
  j["witnesses"] = json::object();
  return j;
}

json summary_to_json(const RightAct& act, const CongruenceSummary& s) {
  json j;
  j["version"] = 1;
  j["si"] = s.si;
  j["irreducible"] = s.irreducible;
  j["uniform"] = s.uniform;
  j["principal_count"] = s.principal.size();
  if (s.least) {
    j["least"] = congruence_to_json(act, *s.least)["classes"];
  } else {
    j["least"] = nullptr;
  }
  return j;
}

json atlas_row_to_json(const AtlasRow& row) {
  json j;
  j["id"] = row.act_id;
  j["n"] = row.n_states;
  j["zeros"] = row.zero_count;
  j["si"] = row.si;
  j["irreducible"] = row.irreducible;
  j["uniform"] = row.uniform;
  j["verdict"] = rect_band_verdict_name(row.closed_verdict);
  j["case"] = rect_band_case_name(row.case_tag);
  return j;
}

json atlas_report_to_json(const AtlasReport& report) {
  json j;
  j["version"] = 1;
  j["band"] = json::array({report.band_i, report.band_lambda});
  j["max_states"] = report.max_states;
  j["dedup"] = report.dedup;
  j["seed"] = report.seed;
  json rows = json::array();
  for (const AtlasRow& row : report.rows) rows.push_back(atlas_row_to_json(row));
  j["rows"] = std::move(rows);
  json violations = json::array();
  for (const AtlasViolation& v : report.violations) {
    violations.push_back({{"check", v.check}, {"id", v.act_id}, {"detail", v.detail}});
  }
  j["violations"] = std::move(violations);
  j["census"] = {{"acts", report.census.acts},
                 {"si", report.census.si},
                 {"irreducible", report.census.irreducible},
                 {"uniform", report.census.uniform},
                 {"neither", report.census.neither}};
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::kParseError, "cannot open \"" + path + "\"");
  }
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kParseError,
                "invalid JSON in \"" + path + "\": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorKind::kParseError, "cannot write \"" + path + "\"");
  }
  out << j.dump(2) << "\n";
}

ArtifactKind detect_artifact_kind(const json& j) {
  if (!j.is_object()) {
    throw Error(ErrorKind::kParseError, "artifact: expected a JSON object");
  }
  if (j.contains("sandwich")) return ArtifactKind::kReesSpec;
  if (j.contains("action")) return ArtifactKind::kAct;
  if (j.contains("table") && j.contains("elements")) {
    return ArtifactKind::kSemigroup;
  }
  throw Error(ErrorKind::kParseError,
              "artifact: cannot detect kind (expected semigroup, rees spec, or act)");
}

}  // namespace racts
