// xgroup command-line tool. Exit codes:
//   0 success / IsX / classified, 1 NotX or corpus mismatch, 2 constraint
//   violation (construct), 3 cap exceeded, 4 malformed input, 5 internal error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "xgroup/classifier.hpp"
#include "xgroup/constructors.hpp"
#include "xgroup/corpus.hpp"
#include "xgroup/document.hpp"
#include "xgroup/errors.hpp"
#include "xgroup/tower.hpp"
#include "xgroup/xcheck.hpp"

using namespace xgroup;

namespace {

enum Exit { kOk = 0, kNotX = 1, kConstraint = 2, kCap = 3, kMalformed = 4, kInternal = 5 };

struct Globals {
  std::size_t brute_cap = kDefaultBruteCap;
  std::size_t enum_cap = kDefaultEnumerationCap;
  unsigned workers = 1;
  std::uint64_t seed = 0;  // accepted for interface stability; every search is deterministic
  std::string format = "doc";
};

void emit(const Globals& g, const Doc& d) {
  if (g.format == "pretty")
    std::cout << render_pretty(d);
  else
    std::cout << dump(d);
}

std::string read_input(const std::string& path) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ParseError, "cannot read '" + path + "'");
    ss << in.rdbuf();
  }
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::ParseError, "cannot write '" + path + "'");
  out << text;
}

int exit_for(const Error& e, bool constructing) {
  switch (e.kind()) {
    case ErrorKind::ConstraintViolation: return constructing ? kConstraint : kMalformed;
    case ErrorKind::CapExceeded:
    case ErrorKind::Unclassified: return kCap;
    case ErrorKind::ParseError:
    case ErrorKind::InvalidPermutation:
    case ErrorKind::InvalidParameter:
    case ErrorKind::NotNormal: return kMalformed;
    case ErrorKind::SearchFailed:
    case ErrorKind::InternalInvariantViolation: return kInternal;
  }
  return kInternal;
}

// ------------------------------------------------------------ construct

struct ConstructArgs {
  std::string family, out, params_json;
  std::optional<std::uint64_t> m, n, u, p, q, d, s, k, order, quaternion_order;
  std::optional<std::string> kind, exponent, complement;
  std::vector<std::uint64_t> factors;
  bool alternating = false;
};

nlohmann::json construct_params(const ConstructArgs& a) {
  nlohmann::json j = a.params_json.empty() ? nlohmann::json::object() : nlohmann::json::parse(a.params_json);
  auto put = [&](const char* key, const auto& v) {
    if (v) j[key] = *v;
  };
  put("m", a.m);
  put("n", a.n);
  put("u", a.u);
  put("p", a.p);
  put("q", a.q);
  put("d", a.d);
  put("s", a.s);
  put("k", a.k);
  put("order", a.order);
  put("quaternion_order", a.quaternion_order);
  put("kind", a.kind);
  put("exponent", a.exponent);
  put("complement", a.complement);
  if (!a.factors.empty()) j["factors"] = a.factors;
  if (a.family == "sym_alt" && !j.contains("alternating")) j["alternating"] = a.alternating;
  return j;
}

int cmd_construct(const Globals& g, const ConstructArgs& a) {
  const auto rec = construct(a.family, construct_params(a));
  const std::string out = a.out.empty() ? a.family + ".json" : a.out;
  const std::string stem = out.size() > 5 && out.ends_with(".json") ? out.substr(0, out.size() - 5) : out;
  const std::string side = stem + ".provenance.json";
  write_file(out, dump(group_to_doc(rec.group)));
  write_file(side, dump(provenance(rec)));
  Doc d;
  d["family"] = rec.family;
  d["parameters"] = rec.parameters;
  d["intended_case"] = rec.intended_case;
  d["order"] = rec.group.order();
  d["group_file"] = out;
  d["provenance_file"] = side;
  emit(g, d);
  return kOk;
}

// ------------------------------------------------------------ check / classify

int cmd_check(const Globals& g, const std::string& file, const std::string& method, const std::string& witness_out) {
  const Group G = group_from_text(read_input(file), kMaxGroupOrder);
  std::vector<XVerdict> vs;
  if (method == "brute" || method == "both") vs.push_back(is_x_bruteforce(G, g.brute_cap));
  if (method == "recursive" || method == "both") vs.push_back(is_x_recursive(G, g.brute_cap));
  Doc d;
  d["command"] = "check";
  d["order"] = G.order();
  d["method"] = method;
  d["verdict"] = to_string(vs.front().result);
  bool agree = true;
  for (const auto& v : vs) agree = agree && v.result == vs.front().result;
  d["methods_agree"] = agree;
  Doc results = Doc::array();
  for (const auto& v : vs) results.push_back(verdict_to_doc(G, v));
  d["results"] = std::move(results);
  emit(g, d);
  if (!agree) {
    std::cerr << "error: checkers disagree\n";
    return kInternal;
  }
  if (!witness_out.empty() && vs.front().witness) write_file(witness_out, dump(witness_to_doc(G, *vs.front().witness)));
  return vs.front().result == XResult::IsX ? kOk : kNotX;
}

int cmd_classify(const Globals& g, const std::string& file, bool explain_text) {
  const Group G = group_from_text(read_input(file), kMaxGroupOrder);
  const auto tc = classify(G, {g.brute_cap, true});
  Doc d;
  d["command"] = "classify";
  d["order"] = G.order();
  const Doc body = theorem_case_to_doc(G, tc);
  for (auto it = body.begin(); it != body.end(); ++it) d[it.key()] = it.value();
  emit(g, d);
  if (explain_text) std::cerr << explain(tc);
  return tc.label == "NotX" ? kNotX : kOk;
}

// ------------------------------------------------------------ corpus / tower

int cmd_corpus(const Globals& g, const std::string& suite, const std::string& suite_file, const std::string& out) {
  std::vector<CorpusEntry> entries;
  std::string name = suite;
  if (!suite_file.empty()) {
    entries = suite_from_doc(nlohmann::json::parse(read_input(suite_file)));
    if (name.empty()) name = suite_file;
  } else {
    entries = builtin_suite(suite.empty() ? "standard" : suite);
    if (name.empty()) name = "standard";
  }
  CorpusOptions opt;
  opt.brute_cap = g.brute_cap;
  opt.enum_cap = g.enum_cap;
  opt.workers = g.workers;
  const auto s = run_corpus(name, entries, opt);
  const Doc d = summary_to_doc(s);
  if (!out.empty()) write_file(out, dump(d));
  emit(g, d);
  return s.mismatches ? kNotX : kOk;
}

int cmd_tower(const Globals& g, const std::string& kind, const TowerSpec& base, bool control) {
  TowerSpec spec = base;
  if (kind == "prufer") {
    spec.kind = TowerKind::Prufer;
  } else if (kind == "prufer2_ext") {
    spec.kind = TowerKind::Prufer2Ext;
    spec.p = 2;
  } else if (kind == "prufer_metacyclic") {
    spec.kind = TowerKind::PruferMetacyclic;
  } else {
    fail(ErrorKind::InvalidParameter, "unknown tower kind '" + kind + "'");
  }
  const auto rep = verify_tower(spec, g.brute_cap);
  Doc d = tower_report_to_doc(rep);
  if (control) {
    Doc c = Doc::array();
    for (auto [order, v] : dihedral_quotient_control(spec.depth)) {
      Doc x;
      x["order"] = order;
      x["x_verdict"] = to_string(v);
      c.push_back(std::move(x));
    }
    d["dihedral_quotient_control"] = std::move(c);
  }
  emit(g, d);
  return rep.ok() ? kOk : kNotX;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite groups whose non-cyclic subgroups are self-centralizing"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  if (const char* env = std::getenv("XGROUP_CAP")) {
    try {
      g.brute_cap = g.enum_cap = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: XGROUP_CAP is not a number\n";
      return kMalformed;
    }
  }
  app.add_option("--brute-cap", g.brute_cap, "Largest order for the pair scan");
  app.add_option("--enum-cap", g.enum_cap, "Largest order for subgroup enumeration");
  app.add_option("--workers", g.workers, "Corpus worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for embedding searches (searches are deterministic)");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"doc", "pretty"}));

  ConstructArgs ca;
  auto* construct_cmd = app.add_subcommand("construct", "Build a group family member");
  construct_cmd->add_option("--family", ca.family)->required()->check(CLI::IsMember(family_names()));
  construct_cmd->add_option("--out", ca.out, "Group document path (default <family>.json)");
  construct_cmd->add_option("--params", ca.params_json, "Parameters as a JSON object");
  for (auto [name, slot] : {std::pair{"--m", &ca.m}, {"--n", &ca.n}, {"--u", &ca.u}, {"--p", &ca.p}, {"--q", &ca.q},
                            {"--d", &ca.d}, {"--s", &ca.s}, {"--k", &ca.k}, {"--order", &ca.order},
                            {"--quaternion-order", &ca.quaternion_order}})
    construct_cmd->add_option(name, *slot);
  construct_cmd->add_option("--kind", ca.kind);
  construct_cmd->add_option("--exponent", ca.exponent);
  construct_cmd->add_option("--complement", ca.complement);
  construct_cmd->add_option("--factors", ca.factors)->delimiter(',');
  construct_cmd->add_flag("--alternating", ca.alternating);

  std::string file, method = "both", witness_out;
  auto* check_cmd = app.add_subcommand("check", "Decide membership");
  check_cmd->add_option("file", file, "Group document ('-' for stdin)")->required();
  check_cmd->add_option("--method", method)->check(CLI::IsMember({"brute", "recursive", "both"}));
  check_cmd->add_option("--emit-witness", witness_out, "Also write the witness document here");

  bool explain_text = false;
  auto* classify_cmd = app.add_subcommand("classify", "Assign a case label");
  classify_cmd->add_option("file", file, "Group document ('-' for stdin)")->required();
  classify_cmd->add_flag("--explain", explain_text, "Print the evidence chain to stderr");

  std::string suite, suite_file, corpus_out;
  auto* corpus_cmd = app.add_subcommand("corpus", "Cross-validate a suite");
  corpus_cmd->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
  corpus_cmd->add_option("--suite-file", suite_file, "JSON list of entries");
  corpus_cmd->add_option("--out", corpus_out, "Also write the summary here");

  std::string tower_kind;
  TowerSpec ts;
  bool control = false;
  auto* tower_cmd = app.add_subcommand("tower", "Build and verify a truncation tower");
  tower_cmd->add_option("--kind", tower_kind)->required()->check(
      CLI::IsMember({"prufer", "prufer2_ext", "prufer_metacyclic"}));
  tower_cmd->add_option("--p", ts.p);
  tower_cmd->add_option("--d", ts.d);
  tower_cmd->add_option("--y-order", ts.y_order);
  tower_cmd->add_option("--depth", ts.depth)->required();
  tower_cmd->add_flag("--negative-control", control, "Append the Dih(2*6^k) quotient control");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kMalformed;
  }

  const bool constructing = construct_cmd->parsed();
  try {
    if (constructing) return cmd_construct(g, ca);
    if (check_cmd->parsed()) return cmd_check(g, file, method, witness_out);
    if (classify_cmd->parsed()) return cmd_classify(g, file, explain_text);
    if (corpus_cmd->parsed()) return cmd_corpus(g, suite, suite_file, corpus_out);
    if (tower_cmd->parsed()) return cmd_tower(g, tower_kind, ts, control);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e, constructing);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kMalformed;
  }
  return kInternal;
}
