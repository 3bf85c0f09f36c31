#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "racts/catalog.hpp"
#include "racts/closedform.hpp"
#include "racts/congruence.hpp"
#include "racts/json_io.hpp"
#include "racts/verify.hpp"

namespace {

using racts::json;

const char* yn(bool b) { return b ? "true" : "false"; }

// Common output flags: reports go to --out or stdout; --expect compares the
// report against a golden file and exits 1 on the first difference.
struct OutputFlags {
  bool as_json = false;
  std::string out_path;
  std::string expect_path;
};

void add_output_flags(CLI::App* cmd, OutputFlags& flags) {
  cmd->add_flag("--json", flags.as_json, "emit the machine-readable report");
  cmd->add_option("--out", flags.out_path, "write the report to a file");
  cmd->add_option("--expect", flags.expect_path,
                  "compare the report against a golden file; differences "
                  "exit with status 1");
}

int finish(const std::string& report, const OutputFlags& flags) {
  if (flags.out_path.empty()) {
    std::cout << report;
  } else {
    std::ofstream out(flags.out_path);
    if (!out) {
      std::cerr << "error: parse-error: cannot write \"" << flags.out_path
                << "\"\n";
      return 2;
    }
    out << report;
  }
  if (flags.expect_path.empty()) return 0;
  std::ifstream in(flags.expect_path);
  if (!in) {
    std::cerr << "error: parse-error: cannot open \"" << flags.expect_path
              << "\"\n";
    return 2;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string expected = buffer.str();
  if (expected == report) return 0;
  std::istringstream got_lines(report), want_lines(expected);
  std::string got, want;
  int line = 0;
  while (true) {
    ++line;
    const bool has_got = static_cast<bool>(std::getline(got_lines, got));
    const bool has_want = static_cast<bool>(std::getline(want_lines, want));
    if (!has_got && !has_want) break;
    if (!has_got) got.clear();
    if (!has_want) want.clear();
    if (got != want) {
      std::cerr << "mismatch against \"" << flags.expect_path << "\" at line "
                << line << ":\n  expected: " << want << "\n  actual:   " << got
                << "\n";
      return 1;
    }
  }
  std::cerr << "mismatch against \"" << flags.expect_path << "\"\n";
  return 1;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string base_dir_of(const std::string& path) {
  const auto parent = std::filesystem::path(path).parent_path();
  return parent.empty() ? std::string(".") : parent.string();
}

// Splits on sep at parenthesis depth zero, so labels like "(0,g,1)" pass
// through unharmed; surrounding whitespace is trimmed.
std::vector<std::string> split_outside_parens(const std::string& text,
                                              char sep) {
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  for (std::string& part : parts) {
    const auto first = part.find_first_not_of(" \t");
    const auto last = part.find_last_not_of(" \t");
    part = first == std::string::npos ? std::string()
                                      : part.substr(first, last - first + 1);
  }
  return parts;
}

std::vector<std::pair<int, int>> parse_pairs(const racts::RightAct& act,
                                             const std::string& text) {
  std::vector<std::pair<int, int>> pairs;
  for (const std::string& chunk : split_outside_parens(text, ';')) {
    if (chunk.empty()) continue;
    const std::vector<std::string> labels = split_outside_parens(chunk, ',');
    if (labels.size() != 2) {
      throw racts::Error(racts::ErrorKind::kParseError,
                         "--pairs: expected \"a,b\" in \"" + chunk + "\"");
    }
    int indices[2];
    for (int k = 0; k < 2; ++k) {
      indices[k] = act.state_index(labels[k]);
      if (indices[k] < 0) {
        throw racts::Error(racts::ErrorKind::kParseError,
                           "--pairs: unknown state label \"" + labels[k] +
                               "\"");
      }
    }
    pairs.emplace_back(indices[0], indices[1]);
  }
  if (pairs.empty()) {
    throw racts::Error(racts::ErrorKind::kParseError,
                       "--pairs: no pairs given");
  }
  return pairs;
}

std::string class_labels(const racts::RightAct& act,
                         const std::vector<int>& members) {
  std::string out = "{";
  for (size_t k = 0; k < members.size(); ++k) {
    if (k) out += ", ";
    out += act.state_label(members[k]);
  }
  return out + "}";
}

void print_congruence(std::ostream& out, const racts::RightAct& act,
                      const racts::Congruence& c) {
  const auto classes = c.classes();
  out << c.num_classes << (c.num_classes == 1 ? " class" : " classes")
      << "\n";
  for (const std::vector<int>& members : classes) {
    out << "  " << class_labels(act, members) << "\n";
  }
}

// ---- validate ----

int cmd_validate(const std::string& file, const OutputFlags& flags) {
  const json j = racts::load_json_file(file);
  std::string kind_name;
  std::string detail;
  int size = 0;
  switch (racts::detect_artifact_kind(j)) {
    case racts::ArtifactKind::kSemigroup: {
      const racts::FiniteSemigroup s = racts::semigroup_from_json(j);
      kind_name = "semigroup";
      size = s.size();
      detail = "semigroup with " + std::to_string(s.size()) + " elements";
      break;
    }
    case racts::ArtifactKind::kReesSpec: {
      const racts::ReesMatrixSpec spec = racts::rees_spec_from_json(j);
      racts::validate_spec(spec);
      kind_name = "rees-spec";
      size = racts::rees_size(spec);
      detail = "rees spec over a group of order " +
               std::to_string(spec.group.size()) + ", " +
               std::to_string(spec.i_size) + "x" +
               std::to_string(spec.lambda_size) +
               (spec.with_zero ? ", with zero" : ", no zero") +
               "; semigroup has " + std::to_string(size) + " elements";
      break;
    }
    case racts::ArtifactKind::kAct: {
      const racts::RightAct act = racts::act_from_json(j, base_dir_of(file));
      kind_name = "act";
      size = act.size();
      detail = "act with " + std::to_string(act.size()) +
               " states over a semigroup with " +
               std::to_string(act.semigroup.size()) + " elements";
      break;
    }
  }
  if (flags.as_json) {
    json report;
    report["version"] = 1;
    report["ok"] = true;
    report["kind"] = kind_name;
    report["size"] = size;
    return finish(dump(report), flags);
  }
  return finish("ok: " + detail + "\n", flags);
}

// ---- rees ----

int cmd_rees(const std::string& file, const OutputFlags& flags) {
  const racts::ReesMatrixSpec spec =
      racts::rees_spec_from_json(racts::load_json_file(file));
  const racts::FiniteSemigroup s = racts::rees_matrix(spec);
  return finish(dump(racts::semigroup_to_json(s)), flags);
}

// ---- classify-semigroup ----

struct SemigroupClassification {
  std::string input_line;
  racts::CongruenceSummary engine;
  json closed_form;  // null when not applicable
  std::vector<std::string> compared;  // predicate names checked
  std::vector<std::string> disagreements;
  std::optional<bool> cf_si, cf_irreducible, cf_uniform;
};

void compare_predicate(SemigroupClassification& r, const char* name,
                       bool engine_value, std::optional<bool> closed_value) {
  if (!closed_value) return;
  r.compared.push_back(name);
  if (*closed_value != engine_value) {
    r.disagreements.push_back(std::string(name) + ": engine=" +
                              yn(engine_value) + ", closed form=" +
                              yn(*closed_value));
  }
}

int cmd_classify_semigroup(const std::string& file, const OutputFlags& flags) {
  const json j = racts::load_json_file(file);
  SemigroupClassification r;
  racts::FiniteSemigroup s;
  switch (racts::detect_artifact_kind(j)) {
    case racts::ArtifactKind::kReesSpec: {
      const racts::ReesMatrixSpec spec = racts::rees_spec_from_json(j);
      s = racts::rees_matrix(spec);
      r.input_line = "rees spec over a group of order " +
                     std::to_string(spec.group.size()) + ", " +
                     std::to_string(spec.i_size) + "x" +
                     std::to_string(spec.lambda_size) +
                     (spec.with_zero ? ", with zero" : ", no zero") +
                     " (|S| = " + std::to_string(s.size()) + ")";
      if (spec.with_zero) {
        const racts::TriplePredicates p =
            racts::predict_completely_0_simple(spec);
        r.cf_si = p.si;
        r.cf_irreducible = p.irreducible;
        r.cf_uniform = p.uniform;
        r.closed_form = racts::predicates_to_json(p, "completely-0-simple");
      } else {
        r.cf_uniform = racts::predict_completely_simple(spec);
        r.closed_form = json{{"version", 1},
                             {"uniform", *r.cf_uniform},
                             {"case", "completely-simple"}};
      }
      break;
    }
    case racts::ArtifactKind::kSemigroup: {
      s = racts::semigroup_from_json(j);
      r.input_line = "semigroup with " + std::to_string(s.size()) + " elements";
      if (racts::is_rect_band(s)) {
        const racts::RectBandCoords coords = racts::recognize_rect_band(s);
        r.input_line += " (rectangular band " + std::to_string(coords.i_size) +
                        "x" + std::to_string(coords.lambda_size) + ")";
        const racts::RectBandClassification c =
            racts::classify_act_rect_band(racts::regular_act(s));
        r.cf_si = c.si;
        r.cf_uniform = c.uniform;
        r.closed_form = racts::classification_to_json(racts::regular_act(s), c);
      } else {
        r.closed_form = nullptr;
      }
      break;
    }
    case racts::ArtifactKind::kAct:
      throw racts::Error(racts::ErrorKind::kPreconditionViolated,
                         "classify-semigroup expects a semigroup or rees "
                         "spec, not an act");
  }
  const racts::RightAct act = racts::regular_act(s);
  r.engine = racts::summarize(act);
  compare_predicate(r, "si", r.engine.si, r.cf_si);
  compare_predicate(r, "irreducible", r.engine.irreducible, r.cf_irreducible);
  compare_predicate(r, "uniform", r.engine.uniform, r.cf_uniform);

  std::string report;
  if (flags.as_json) {
    json out;
    out["version"] = 1;
    out["input"] = r.input_line;
    out["engine"] = racts::summary_to_json(act, r.engine);
    out["closed_form"] = r.closed_form;
    out["compared"] = r.compared;
    out["agreement"] = r.disagreements.empty();
    out["disagreements"] = r.disagreements;
    report = dump(out);
  } else {
    std::ostringstream out;
    out << "input: " << r.input_line << "\n";
    out << "engine: si=" << yn(r.engine.si)
        << " irreducible=" << yn(r.engine.irreducible)
        << " uniform=" << yn(r.engine.uniform) << "\n";
    if (r.closed_form.is_null()) {
      out << "closed form: not applicable\n";
      out << "agreement: n/a\n";
    } else {
      out << "closed form:";
      if (r.cf_si) out << " si=" << yn(*r.cf_si);
      if (r.cf_irreducible) out << " irreducible=" << yn(*r.cf_irreducible);
      if (r.cf_uniform) out << " uniform=" << yn(*r.cf_uniform);
      out << "\n";
      if (r.disagreements.empty()) {
        out << "agreement: yes\n";
      } else {
        out << "agreement: NO\n";
        for (const std::string& d : r.disagreements) out << "  " << d << "\n";
      }
    }
    report = out.str();
  }
  const int code = finish(report, flags);
  if (code != 0) return code;
  return r.disagreements.empty() ? 0 : 1;
}

// ---- classify-act ----

racts::RightAct act_from_artifact(const json& j, const std::string& file) {
  switch (racts::detect_artifact_kind(j)) {
    case racts::ArtifactKind::kAct:
      return racts::act_from_json(j, base_dir_of(file));
    case racts::ArtifactKind::kReesSpec:
      return racts::regular_act(
          racts::rees_matrix(racts::rees_spec_from_json(j)));
    case racts::ArtifactKind::kSemigroup:
      return racts::regular_act(racts::semigroup_from_json(j));
  }
  throw racts::Error(racts::ErrorKind::kParseError, "unrecognized artifact");
}

int cmd_classify_act(const std::string& file, const OutputFlags& flags) {
  const racts::RightAct act =
      act_from_artifact(racts::load_json_file(file), file);
  const racts::CongruenceSummary engine = racts::summarize(act);
  const std::vector<int> zeros = racts::zero_states(act);
  const bool separated = racts::is_separated(act);
  const auto kernel = racts::kernel_of(act);
  std::optional<size_t> subact_count;
  if (act.size() <= racts::kDefaultSubactBound) {
    subact_count = racts::analyze(act).subacts.size();
  }
  json closed_form = nullptr;
  std::optional<bool> cf_si, cf_uniform;
  std::string band_line;
  if (racts::is_rect_band(act.semigroup)) {
    const racts::RectBandCoords coords =
        racts::recognize_rect_band(act.semigroup);
    const racts::RectBandClassification c =
        racts::classify_act_rect_band(act);
    cf_si = c.si;
    cf_uniform = c.uniform;
    closed_form = racts::classification_to_json(act, c);
    band_line = "closed form (band " + std::to_string(coords.i_size) + "x" +
                std::to_string(coords.lambda_size) + "): si=" + yn(c.si) +
                " uniform=" + yn(c.uniform) +
                " (verdict=" + racts::rect_band_verdict_name(c.verdict) +
                ", case=" + racts::rect_band_case_name(c.case_tag) + ")";
  }
  std::vector<std::string> disagreements;
  if (cf_si && *cf_si != engine.si) {
    disagreements.push_back(std::string("si: engine=") + yn(engine.si) +
                            ", closed form=" + yn(*cf_si));
  }
  if (cf_uniform && *cf_uniform != engine.uniform) {
    disagreements.push_back(std::string("uniform: engine=") +
                            yn(engine.uniform) +
                            ", closed form=" + yn(*cf_uniform));
  }

  std::string report;
  if (flags.as_json) {
    json out;
    out["version"] = 1;
    out["states"] = act.size();
    out["semigroup_size"] = act.semigroup.size();
    json zero_labels = json::array();
    for (int z : zeros) zero_labels.push_back(act.state_label(z));
    out["zeros"] = std::move(zero_labels);
    out["separated"] = separated;
    if (kernel) {
      json kernel_labels = json::array();
      for (int x : *kernel) kernel_labels.push_back(act.state_label(x));
      out["kernel"] = std::move(kernel_labels);
    } else {
      out["kernel"] = nullptr;
    }
    if (subact_count) {
      out["subacts"] = *subact_count;
    } else {
      out["subacts"] = nullptr;
    }
    out["engine"] = racts::summary_to_json(act, engine);
    out["closed_form"] = closed_form;
    out["agreement"] = disagreements.empty();
    out["disagreements"] = disagreements;
    report = dump(out);
  } else {
    std::ostringstream out;
    out << "act: " << act.size() << " states over a semigroup with "
        << act.semigroup.size() << " elements\n";
    out << "zeros: ";
    if (zeros.empty()) {
      out << "none";
    } else {
      for (size_t k = 0; k < zeros.size(); ++k) {
        out << (k ? ", " : "") << act.state_label(zeros[k]);
      }
    }
    out << "\n";
    out << "separated: " << (separated ? "yes" : "no") << "\n";
    out << "kernel: " << (kernel ? class_labels(act, *kernel) : "none")
        << "\n";
    if (subact_count) {
      out << "subacts: " << *subact_count << "\n";
    } else {
      out << "subacts: skipped (more than "
          << racts::kDefaultSubactBound << " states)\n";
    }
    out << "engine: si=" << yn(engine.si)
        << " irreducible=" << yn(engine.irreducible)
        << " uniform=" << yn(engine.uniform) << "\n";
    if (engine.least) {
      out << "least congruence: ";
      const auto classes = engine.least->classes();
      for (size_t k = 0; k < classes.size(); ++k) {
        out << (k ? " " : "") << class_labels(act, classes[k]);
      }
      out << "\n";
    } else {
      out << "least congruence: none\n";
    }
    if (!band_line.empty()) {
      out << band_line << "\n";
      if (disagreements.empty()) {
        out << "agreement: yes\n";
      } else {
        out << "agreement: NO\n";
        for (const std::string& d : disagreements) out << "  " << d << "\n";
      }
    }
    report = out.str();
  }
  const int code = finish(report, flags);
  if (code != 0) return code;
  return disagreements.empty() ? 0 : 1;
}

// ---- congruence ----

int cmd_congruence(const std::string& file, const std::string& pairs_text,
                   bool closed_form, const OutputFlags& flags) {
  const json j = racts::load_json_file(file);
  std::optional<racts::ReesMatrixSpec> spec;
  if (racts::detect_artifact_kind(j) == racts::ArtifactKind::kReesSpec) {
    spec = racts::rees_spec_from_json(j);
  }
  const racts::RightAct act = act_from_artifact(j, file);
  const std::vector<std::pair<int, int>> pairs = parse_pairs(act, pairs_text);
  const racts::Congruence engine = racts::closure(act, pairs);

  std::optional<racts::Congruence> predicted;
  if (closed_form) {
    if (!spec) {
      throw racts::Error(racts::ErrorKind::kPreconditionViolated,
                         "--closed-form needs a rees spec input (the "
                         "sandwich matrix drives the construction)");
    }
    if (pairs.size() != 1) {
      throw racts::Error(racts::ErrorKind::kPreconditionViolated,
                         "--closed-form applies to a single generating pair");
    }
    predicted = racts::monocyclic_closed_form(*spec, act, pairs[0].first,
                                              pairs[0].second);
  }
  const bool match = !predicted || *predicted == engine;

  std::string report;
  if (flags.as_json) {
    json out;
    out["version"] = 1;
    json pair_labels = json::array();
    for (auto [x, y] : pairs) {
      pair_labels.push_back(
          json::array({act.state_label(x), act.state_label(y)}));
    }
    out["pairs"] = std::move(pair_labels);
    out["congruence"] = racts::congruence_to_json(act, engine)["classes"];
    if (predicted) {
      out["closed_form"] = racts::congruence_to_json(act, *predicted)["classes"];
      out["cross_check"] = match ? "ok" : "mismatch";
    } else {
      out["closed_form"] = nullptr;
      out["cross_check"] = nullptr;
    }
    report = dump(out);
  } else {
    std::ostringstream out;
    out << "act: " << act.size() << " states over a semigroup with "
        << act.semigroup.size() << " elements\n";
    out << "pairs:";
    for (auto [x, y] : pairs) {
      out << " (" << act.state_label(x) << " ~ " << act.state_label(y) << ")";
    }
    out << "\n";
    out << "congruence: ";
    print_congruence(out, act, engine);
    if (predicted) {
      out << "closed form: ";
      print_congruence(out, act, *predicted);
      out << "cross-check: " << (match ? "ok" : "MISMATCH") << "\n";
    }
    report = out.str();
  }
  const int code = finish(report, flags);
  if (code != 0) return code;
  return match ? 0 : 1;
}

// ---- atlas ----

int cmd_atlas(int band_i, int band_lambda, int max_states,
              const racts::EnumerationBounds& bounds,
              const OutputFlags& flags) {
  const racts::AtlasReport report =
      racts::build_atlas(band_i, band_lambda, max_states, bounds);
  std::string text;
  if (flags.as_json) {
    text = dump(racts::atlas_report_to_json(report));
  } else {
    std::ostringstream out;
    out << "band " << report.band_i << "x" << report.band_lambda
        << ", states <= " << report.max_states
        << ", dedup=" << (report.dedup ? "on" : "off") << "\n";
    out << "census: acts=" << report.census.acts << " si=" << report.census.si
        << " irreducible=" << report.census.irreducible
        << " uniform=" << report.census.uniform
        << " neither=" << report.census.neither << "\n";
    out << "rows:\n";
    for (const racts::AtlasRow& row : report.rows) {
      out << "  " << row.act_id << " zeros=" << row.zero_count
          << " si=" << yn(row.si) << " irreducible=" << yn(row.irreducible)
          << " uniform=" << yn(row.uniform)
          << " verdict=" << racts::rect_band_verdict_name(row.closed_verdict)
          << " case=" << racts::rect_band_case_name(row.case_tag) << "\n";
    }
    if (report.violations.empty()) {
      out << "violations: none\n";
    } else {
      out << "violations:\n";
      for (const racts::AtlasViolation& v : report.violations) {
        out << "  [" << v.check << "] " << v.act_id << ": " << v.detail
            << "\n";
      }
    }
    text = out.str();
  }
  const int code = finish(text, flags);
  if (code != 0) return code;
  return report.violations.empty() ? 0 : 1;
}

// ---- verify ----

int cmd_verify(const std::string& suite, const racts::SuiteOptions& options,
               const OutputFlags& flags) {
  if (!racts::is_suite_name(suite)) {
    std::string names;
    for (const std::string& name : racts::suite_names()) {
      if (!names.empty()) names += ", ";
      names += name;
    }
    throw racts::Error(racts::ErrorKind::kParseError,
                       "unknown suite \"" + suite + "\"; expected one of " +
                           names);
  }
  const racts::SuiteReport report = racts::run_suite(suite, options);
  std::string text;
  if (flags.as_json) {
    json out;
    out["version"] = 1;
    out["suite"] = report.suite;
    out["passed"] = report.passed;
    out["instances"] = report.instances;
    out["checks"] = report.checks;
    out["seed"] = report.seed;
    out["notes"] = report.notes;
    out["failures"] = report.failures;
    text = dump(out);
  } else {
    std::ostringstream out;
    out << "suite " << report.suite << ": "
        << (report.passed ? "PASS" : "FAIL") << "\n";
    out << "instances: " << report.instances << "\n";
    out << "checks: " << report.checks << "\n";
    out << "seed: " << report.seed << "\n";
    for (const std::string& note : report.notes) {
      out << "note: " << note << "\n";
    }
    for (const std::string& failure : report.failures) {
      out << "failure: " << failure << "\n";
    }
    text = out.str();
  }
  const int code = finish(text, flags);
  if (code != 0) return code;
  return report.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite semigroups, right acts, and their congruences"};
  app.require_subcommand(1);

  std::string input_file, pairs_text, suite, groups_text;
  bool closed_form = false;
  int max_i = 0, max_lambda = 0, max_states = 0;
  std::int64_t budget = -1;
  std::uint32_t seed = racts::kDefaultSeed;
  bool override_budget = false;
  OutputFlags flags;

  CLI::App* validate = app.add_subcommand(
      "validate", "parse and structurally validate an artifact file");
  validate->add_option("file", input_file)->required();
  add_output_flags(validate, flags);

  CLI::App* rees = app.add_subcommand(
      "rees", "expand a rees spec file into a semigroup file");
  rees->add_option("file", input_file)->required();
  add_output_flags(rees, flags);

  CLI::App* classify_semigroup = app.add_subcommand(
      "classify-semigroup",
      "engine verdicts for the regular act, with closed-form cross-check");
  classify_semigroup->add_option("file", input_file)->required();
  add_output_flags(classify_semigroup, flags);

  CLI::App* classify_act = app.add_subcommand(
      "classify-act", "analyze an act and classify its congruence structure");
  classify_act->add_option("file", input_file)->required();
  add_output_flags(classify_act, flags);

  CLI::App* congruence = app.add_subcommand(
      "congruence", "least right congruence containing the given pairs");
  congruence->add_option("file", input_file)->required();
  congruence->add_option("--pairs", pairs_text,
                         "semicolon-separated state pairs, e.g. \"a,b;c,d\"")
      ->required();
  congruence->add_flag("--closed-form", closed_form,
                       "also compute the sandwich-matrix construction and "
                       "cross-check it");
  add_output_flags(congruence, flags);

  CLI::App* atlas = app.add_subcommand(
      "atlas", "enumerate all acts of a rectangular band and classify them");
  atlas->add_option("--max-i", max_i, "band rows")->default_val(1);
  atlas->add_option("--max-lambda", max_lambda, "band columns")->default_val(2);
  atlas->add_option("--max-states", max_states, "largest act size")
      ->default_val(3);
  atlas->add_option("--budget", budget, "raw enumeration budget");
  atlas->add_flag("--override-budget", override_budget,
                  "enumerate even past the budget");
  add_output_flags(atlas, flags);

  CLI::App* verify = app.add_subcommand(
      "verify", "run a named differential verification suite");
  verify->add_option("--suite", suite, "suite name")->required();
  verify->add_option("--groups", groups_text,
                     "catalog group list, e.g. \"Z2..Z5,Q8\"");
  verify->add_option("--max-i", max_i, "largest row count");
  verify->add_option("--max-lambda", max_lambda, "largest column count");
  verify->add_option("--max-states", max_states, "largest act size");
  verify->add_option("--seed", seed, "sampling seed");
  verify->add_option("--budget", budget, "raw enumeration budget");
  verify->add_flag("--override-budget", override_budget,
                   "enumerate even past the budget");
  add_output_flags(verify, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(input_file, flags);
    if (rees->parsed()) return cmd_rees(input_file, flags);
    if (classify_semigroup->parsed()) {
      return cmd_classify_semigroup(input_file, flags);
    }
    if (classify_act->parsed()) return cmd_classify_act(input_file, flags);
    if (congruence->parsed()) {
      return cmd_congruence(input_file, pairs_text, closed_form, flags);
    }
    if (atlas->parsed()) {
      racts::EnumerationBounds bounds;
      if (budget >= 0) bounds.budget = static_cast<double>(budget);
      bounds.override_budget = override_budget;
      return cmd_atlas(max_i, max_lambda, max_states, bounds, flags);
    }
    if (verify->parsed()) {
      racts::SuiteOptions options;
      if (!groups_text.empty()) {
        options.groups = racts::expand_group_list(groups_text);
      }
      options.max_i = max_i;
      options.max_lambda = max_lambda;
      options.max_states = max_states;
      options.seed = seed;
      if (budget >= 0) options.budget = static_cast<double>(budget);
      options.override_budget = override_budget;
      return cmd_verify(suite, options, flags);
    }
  } catch (const racts::Error& e) {
    std::cerr << "error: " << racts::error_kind_name(e.kind()) << ": "
              << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
