// tol: a workbench for finite ternary order relations.
//
// Subcommands: check, lines, classify, enumerate, implication, witness, gen.
// Result payloads are printed to stdout as key-sorted JSON and are
// byte-stable across runs and worker counts; timing goes to stderr.
// Exit codes: 0 success, 1 domain error (axiom violation, unreachable
// pair, oversized space), 2 usage or parse error.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tol/axioms.hpp"
#include "tol/classifier.hpp"
#include "tol/digraph.hpp"
#include "tol/enumerate.hpp"
#include "tol/io.hpp"
#include "tol/lines.hpp"

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::map<std::string, std::vector<tol::AxiomId>>& presets() {
  using enum tol::AxiomId;
  static const std::map<std::string, std::vector<tol::AxiomId>> map = {
      {"betweenness", {A, B, C, D, One, Two}},
      {"pre-betweenness", {A, B, C, D, Two}},
      {"cycle-order", {B, C, D, E, Two}},
      {"bcdf2", {B, C, D, F, Two}},
      {"bcdf9", {B, C, D, F, Nine}},
  };
  return map;
}

std::string valid_axiom_names() {
  std::string out;
  for (auto name : tol::axiom_names()) {
    if (!out.empty()) out += ", ";
    out += std::string(name);
  }
  for (const auto& [name, axs] : presets()) out += ", " + name;
  return out;
}

// Comma-separated axiom names; preset names expand in place.
std::vector<tol::AxiomId> parse_axiom_list(const std::string& csv) {
  std::vector<tol::AxiomId> out;
  std::string token;
  std::istringstream in(csv);
  while (std::getline(in, token, ',')) {
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    if (token.empty()) continue;
    if (auto it = presets().find(token); it != presets().end()) {
      out.insert(out.end(), it->second.begin(), it->second.end());
      continue;
    }
    if (auto ax = tol::parse_axiom(token)) {
      out.push_back(*ax);
      continue;
    }
    throw UsageError("unknown axiom name '" + token + "' (valid: " +
                     valid_axiom_names() + ")");
  }
  if (out.empty()) throw UsageError("empty axiom list");
  return out;
}

json witness_points(const std::optional<tol::Witness>& w) {
  if (!w) return nullptr;
  return json(w->points);
}

json relation_json(const tol::TernaryRelation& rel) {
  return tol::io::relation_to_json(rel);
}

void emit(const json& payload) { std::cout << payload.dump(2) << "\n"; }

int cmd_check(const std::string& file, const std::string& preset,
              const std::string& axiom_csv) {
  std::vector<tol::AxiomId> axs;
  if (!preset.empty()) {
    auto it = presets().find(preset);
    if (it == presets().end())
      throw UsageError("unknown preset '" + preset + "' (valid: betweenness, "
                       "pre-betweenness, cycle-order, bcdf2, bcdf9)");
    axs = it->second;
  } else if (!axiom_csv.empty()) {
    axs = parse_axiom_list(axiom_csv);
  } else {
    throw UsageError("check needs --preset or --axioms");
  }

  const auto rel = tol::io::read_relation_file(file);
  const auto reports = tol::holds_all(rel, axs);
  json entries = json::array();
  bool all = true;
  for (const auto& r : reports) {
    entries.push_back({{"axiom", std::string(tol::axiom_name(r.axiom))},
                       {"holds", r.holds},
                       {"witness", witness_points(r.witness)}});
    all = all && r.holds;
  }
  emit({{"all_hold", all}, {"axioms", entries}});
  return all ? 0 : 1;
}

int cmd_lines(const std::string& file) {
  const auto rel = tol::io::read_relation_file(file);
  json pairs = json::array();
  for (tol::Point a = 0; a < rel.n(); ++a)
    for (tol::Point b = 0; b < rel.n(); ++b) {
      if (a == b) continue;
      const auto ln = tol::line(rel, a, b);
      pairs.push_back({{"a", a}, {"b", b}, {"line", ln.points}});
    }
  json distinct = json::array();
  for (const auto& pts : tol::all_lines(rel)) distinct.push_back(pts);
  emit({{"distinct_lines", distinct}, {"pairs", pairs}});
  return 0;
}

int cmd_classify(const std::string& file) {
  const auto rel = tol::io::read_relation_file(file);
  tol::Classification cls;
  try {
    cls = tol::classify(rel);
  } catch (const tol::AxiomViolationError& e) {
    emit({{"error", e.what()},
          {"axiom", std::string(tol::axiom_name(e.witness.axiom))},
          {"witness", e.witness.points}});
    return 1;
  }
  const bool verified = tol::verify_classification(rel, cls);

  json payload = {{"kind", nullptr}, {"p", nullptr}, {"I", nullptr},
                  {"mapping", nullptr}, {"verified", verified}};
  auto mapping_json = [&](const std::vector<int>& mapping) {
    json m = json::object();
    for (size_t v = 0; v < mapping.size(); ++v)
      m[std::to_string(v)] = mapping[v];
    return m;
  };
  if (const auto* lin = std::get_if<tol::LinearOrder>(&cls)) {
    payload["kind"] = "linear";
    std::vector<int> mapping(lin->order.size());
    for (size_t pos = 0; pos < lin->order.size(); ++pos)
      mapping[static_cast<size_t>(lin->order[pos])] = static_cast<int>(pos);
    payload["mapping"] = mapping_json(mapping);
  } else if (const auto* fc = std::get_if<tol::FourCycle>(&cls)) {
    payload["kind"] = "four_cycle";
    std::vector<int> mapping(4);
    for (int k = 0; k < 4; ++k)
      mapping[static_cast<size_t>(fc->labeling[static_cast<size_t>(k)])] = k;
    payload["mapping"] = mapping_json(mapping);
  } else {
    const auto& dc = std::get<tol::DuplicatedCycle>(cls);
    payload["kind"] = "duplicated_cycle";
    payload["p"] = dc.p;
    payload["I"] = dc.duplicated;
    payload["mapping"] = mapping_json(dc.mapping);
  }
  emit(payload);
  return 0;
}

int cmd_enumerate(int n, const std::string& require_csv, const std::string& forbid_csv,
                  bool raw, bool include_repeats, const std::string& out_dir,
                  bool as_json) {
  tol::SearchSpec spec;
  spec.n = n;
  for (auto ax : parse_axiom_list(require_csv)) spec.require.insert(ax);
  if (!forbid_csv.empty())
    for (auto ax : parse_axiom_list(forbid_csv)) spec.forbid.insert(ax);
  spec.distinct_triples_only = !include_repeats;

  const tol::ModelSet result =
      raw ? tol::enumerate_raw(spec) : tol::enumerate_models(spec);

  json models = json::array();
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    int idx = 0;
    for (const auto& rel : result.models) {
      std::ostringstream name;
      name << "model_" << std::setw(3) << std::setfill('0') << idx++
           << (as_json ? ".json" : ".rel");
      std::ofstream out(std::filesystem::path(out_dir) / name.str());
      if (as_json)
        out << relation_json(rel).dump(2) << "\n";
      else
        out << tol::io::relation_to_text(rel);
      models.push_back(name.str());
    }
  } else {
    for (const auto& rel : result.models) models.push_back(relation_json(rel));
  }
  emit({{"count", result.models.size()}, {"models", models}, {"n", n}});
  return 0;
}

int cmd_implication(int n, const std::string& antecedent_csv,
                    const std::string& consequent_name) {
  std::set<tol::AxiomId> ante;
  for (auto ax : parse_axiom_list(antecedent_csv)) ante.insert(ax);
  const auto consequent = tol::parse_axiom(consequent_name);
  if (!consequent)
    throw UsageError("unknown axiom name '" + consequent_name + "' (valid: " +
                     valid_axiom_names() + ")");
  const auto counterexample = tol::check_implication(n, ante, *consequent);

  json ante_names = json::array();
  for (auto ax : ante) ante_names.push_back(std::string(tol::axiom_name(ax)));
  emit({{"antecedents", ante_names},
        {"consequent", std::string(tol::axiom_name(*consequent))},
        {"counterexample", counterexample ? relation_json(*counterexample) : json(nullptr)},
        {"holds", !counterexample.has_value()},
        {"n", n}});
  return 0;
}

int cmd_witness(const std::string& axiom_csv, int max_n) {
  std::set<tol::AxiomId> axs;
  for (auto ax : parse_axiom_list(axiom_csv)) axs.insert(ax);
  const auto report = tol::independence_witnesses(axs, max_n);

  json set_names = json::array();
  for (auto ax : axs) set_names.push_back(std::string(tol::axiom_name(ax)));
  json witnesses = json::object();
  json searched = json::object();
  for (const auto& [ax, rel] : report.witnesses) {
    const std::string name(tol::axiom_name(ax));
    witnesses[name] = rel ? relation_json(*rel) : json(nullptr);
    searched[name] = report.searched_up_to.at(ax);
  }
  emit({{"axiom_set", set_names},
        {"max_n", max_n},
        {"searched_up_to", searched},
        {"witnesses", witnesses}});
  return 0;
}

int cmd_gen(const std::string& type, const std::vector<std::string>& args,
            bool as_relation, bool as_json) {
  const auto arg_int = [&](size_t i, std::string_view what) {
    if (i >= args.size())
      throw UsageError("gen " + type + " needs " + std::string(what));
    return std::stoi(args[i]);
  };

  tol::Digraph g(1);
  if (type == "cycle") {
    g = tol::cycle_digraph(arg_int(0, "a cycle length"));
  } else if (type == "dpp") {
    g = tol::doubled_cycle_digraph(arg_int(0, "a cycle length"));
  } else if (type == "dstar") {
    const int p = arg_int(0, "a cycle length");
    std::vector<int> dup;
    if (args.size() > 1 && !args[1].empty()) {
      std::istringstream in(args[1]);
      std::string token;
      while (std::getline(in, token, ',')) dup.push_back(std::stoi(token));
    }
    g = tol::doubled_cycle_subdigraph(p, dup);
  } else if (type == "path") {
    g = tol::path_digraph(arg_int(0, "a vertex count"));
  } else if (type == "c4") {
    g = tol::c4_digraph();
  } else {
    throw UsageError("unknown gen type '" + type +
                     "' (valid: cycle, dpp, dstar, path, c4)");
  }

  if (as_relation) {
    const auto rel = tol::betweenness_from_quasimetric(tol::quasimetric(g));
    if (as_json)
      std::cout << relation_json(rel).dump(2) << "\n";
    else
      std::cout << tol::io::relation_to_text(rel);
  } else {
    std::cout << tol::io::digraph_to_text(g);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for finite ternary order relations"};
  app.require_subcommand(1);
  int seed = 0;
  app.add_option("--seed", seed, "accepted and ignored (no randomized components)");

  std::string file, preset, axiom_csv;
  auto* check = app.add_subcommand("check", "evaluate an axiom set on a relation");
  check->add_option("file", file)->required();
  check->add_option("--preset", preset,
                    "betweenness, pre-betweenness, cycle-order, bcdf2 or bcdf9");
  check->add_option("--axioms", axiom_csv, "comma-separated axiom names");

  auto* lines_cmd = app.add_subcommand("lines", "line family of a relation");
  lines_cmd->add_option("file", file)->required();

  auto* classify_cmd = app.add_subcommand("classify", "structural classification");
  classify_cmd->add_option("file", file)->required();

  int n = 0, max_n = 6;
  std::string require_csv, forbid_csv, out_dir, consequent;
  bool raw = false, include_repeats = false, as_json = false, as_relation = false;
  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "models of an axiom set up to isomorphism");
  enumerate_cmd->add_option("--n", n)->required();
  enumerate_cmd->add_option("--require", require_csv)->required();
  enumerate_cmd->add_option("--forbid", forbid_csv);
  enumerate_cmd->add_flag("--raw", raw, "use the brute-force oracle");
  enumerate_cmd->add_flag("--include-repeats", include_repeats,
                          "search the full triple domain (raw only, n <= 2)");
  enumerate_cmd->add_option("--out", out_dir, "write one relation file per model");
  enumerate_cmd->add_flag("--json", as_json, "write relation files as JSON");

  auto* implication_cmd =
      app.add_subcommand("implication", "exhaustive implication check");
  implication_cmd->add_option("--n", n)->required();
  implication_cmd->add_option("--antecedents", require_csv)->required();
  implication_cmd->add_option("--consequent", consequent)->required();

  auto* witness_cmd =
      app.add_subcommand("witness", "independence witnesses for an axiom set");
  witness_cmd->add_option("--axioms", require_csv)->required();
  witness_cmd->add_option("--max-n", max_n);

  std::string gen_type;
  std::vector<std::string> gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "generate digraphs and their relations");
  gen_cmd->add_option("type", gen_type, "cycle, dpp, dstar, path or c4")->required();
  gen_cmd->add_option("args", gen_args, "type parameters");
  gen_cmd->add_flag("--as-relation", as_relation,
                    "emit the induced betweenness relation instead of the digraph");
  gen_cmd->add_flag("--json", as_json, "relation output as JSON");

  // --seed may also appear after the subcommand name.
  for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  const auto started = std::chrono::steady_clock::now();
  int code = 2;
  std::string command = "?";
  try {
    if (check->parsed()) {
      command = "check";
      code = cmd_check(file, preset, axiom_csv);
    } else if (lines_cmd->parsed()) {
      command = "lines";
      code = cmd_lines(file);
    } else if (classify_cmd->parsed()) {
      command = "classify";
      code = cmd_classify(file);
    } else if (enumerate_cmd->parsed()) {
      command = "enumerate";
      code = cmd_enumerate(n, require_csv, forbid_csv, raw, include_repeats, out_dir,
                           as_json);
    } else if (implication_cmd->parsed()) {
      command = "implication";
      code = cmd_implication(n, require_csv, consequent);
    } else if (witness_cmd->parsed()) {
      command = "witness";
      code = cmd_witness(require_csv, max_n);
    } else if (gen_cmd->parsed()) {
      command = "gen";
      code = cmd_gen(gen_type, gen_args, as_relation, as_json);
    }
  } catch (const UsageError& e) {
    std::cerr << "tol " << command << ": " << e.what() << "\n";
    return 2;
  } catch (const tol::ParseError& e) {
    std::cerr << "tol " << command << ": " << e.what() << "\n";
    return 2;
  } catch (const tol::Error& e) {
    std::cerr << "tol " << command << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "tol " << command << ": " << e.what() << "\n";
    return 2;
  }

  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  std::cerr << "tol " << command << ": " << elapsed.count() << " ms\n";
  return code;
}
