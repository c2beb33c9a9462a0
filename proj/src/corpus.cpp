#include "xgroup/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "xgroup/classifier.hpp"
#include "xgroup/constructors.hpp"
#include "xgroup/engine.hpp"
#include "xgroup/errors.hpp"

namespace xgroup {

namespace {

using json = nlohmann::json;

CorpusEntry entry(std::string name, std::string family, json params) {
  return {std::move(name), std::move(family), std::move(params), ""};
}

CorpusEntry cyclic(std::vector<std::uint64_t> factors) {
  std::string name = "basic_abelian(";
  for (std::size_t i = 0; i < factors.size(); ++i) name += (i ? "," : "") + std::to_string(factors[i]);
  return entry(name + ")", "basic_abelian", {{"factors", factors}});
}

CorpusEntry two(const std::string& kind, int order) {
  return entry(kind + "(" + std::to_string(order) + ")", "two_group", {{"kind", kind}, {"order", order}});
}

CorpusEntry ext(int p, const std::string& e) {
  return entry("extraspecial(" + std::to_string(p) + "," + e + ")", "extraspecial", {{"p", p}, {"exponent", e}});
}

CorpusEntry mc(int m, int n, int u) {
  return entry("metacyclic(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(u) + ")",
               "metacyclic", {{"m", m}, {"n", n}, {"u", u}});
}

CorpusEntry qm(int m, int q) {
  return entry("quaternion_metacyclic(" + std::to_string(m) + "," + std::to_string(q) + ")", "quaternion_metacyclic",
               {{"m", m}, {"quaternion_order", q}});
}

CorpusEntry sa(int n, bool alt) {
  return entry(std::string(alt ? "Alt(" : "Sym(") + std::to_string(n) + ")", "sym_alt",
               {{"n", n}, {"alternating", alt}});
}

CorpusEntry mat(const std::string& kind, int q) {
  return entry(kind + "(" + std::to_string(q) + ")", "matrix_group", {{"kind", kind}, {"q", q}});
}

CorpusEntry aff(int p, const std::string& c) {
  return entry("affine(" + std::to_string(p) + "," + c + ")", "affine", {{"p", p}, {"complement", c}});
}

CorpusEntry exf(int p, int d, int s) {
  return entry("extraspecial_frobenius(" + std::to_string(p) + "," + std::to_string(d) + "," + std::to_string(s) + ")",
               "extraspecial_frobenius", {{"p", p}, {"d", d}, {"s", s}});
}

CorpusEntry heis(int p, int k) {
  return entry("heisenberg_extension(" + std::to_string(p) + "," + std::to_string(k) + ")", "heisenberg_extension",
               {{"p", p}, {"k", k}});
}

CorpusEntry dot2(int p) { return entry("sl2p_dot2(" + std::to_string(p) + ")", "sl2p_dot2", {{"p", p}}); }

std::vector<CorpusEntry> standard_suite() {
  return {
      entry("basic_abelian()", "basic_abelian", {{"factors", json::array()}}), cyclic({2}), cyclic({12}), cyclic({30}), cyclic({96}), cyclic({2, 3}),
      cyclic({2, 2}), cyclic({3, 3}), cyclic({5, 5}), cyclic({7, 7}),
      ext(3, "p"), ext(3, "p_squared"), ext(5, "p"), ext(5, "p_squared"), ext(7, "p"),
      two("dihedral", 8), two("dihedral", 16), two("dihedral", 32), two("semidihedral", 16),
      two("semidihedral", 32), two("quaternion", 8), two("quaternion", 16), two("quaternion", 32),
      sa(3, false), mc(7, 3, 2), mc(5, 4, 2), mc(9, 2, 8), mc(13, 4, 5), mc(11, 5, 3), mc(25, 4, 7),
      qm(3, 8), qm(5, 8), qm(3, 16),
      mc(5, 4, 4), mc(7, 4, 6), mc(9, 4, 8), mc(7, 9, 2),
      exf(7, 3, 1), exf(13, 3, 1),
      sa(4, false), sa(4, true), mat("PSL2", 3),
      aff(3, "cyclic(8)"), aff(3, "cyclic(4)"), aff(5, "cyclic(8)"), aff(5, "cyclic(12)"), aff(5, "cyclic(3)"),
      aff(7, "cyclic(16)"),
      aff(3, "quaternion(8)"), aff(5, "quaternion(8)"), aff(7, "quaternion(8)"), aff(7, "quaternion(16)"),
      aff(11, "case_2_1_2(3,8)"), aff(13, "case_2_1_2(3,8)"),
      aff(5, "case_2_1_3(3,4)"), aff(7, "case_2_1_3(3,4)"), aff(11, "case_2_1_3(3,4)"),
      aff(5, "sl2_3"), aff(7, "sl2_3"), aff(7, "sl2_3_dot2"), aff(11, "sl2_5"),
      mat("SL2", 3), dot2(3), heis(5, 3), heis(11, 3),
      mat("SL2", 5), dot2(5), mat("SL2", 17),
      sa(5, true), mat("SL2", 4), mat("PSL2", 5), mat("PSL2", 7), mat("PSL2", 9), sa(6, true),
      entry("Mat(10)", "m10", json::object()), mat("PSL2", 17),
      // non-members kept in the standard run so both verdicts are exercised
      cyclic({2, 4}), cyclic({3, 3, 3}), mc(6, 2, 5), sa(5, false), mat("GL2", 3), mat("PGL2", 5),
      mat("PSL2", 11),
  };
}

std::vector<CorpusEntry> negative_suite() {
  return {
      sa(5, false), mat("PGL2", 9), mc(6, 2, 5), cyclic({3, 3, 3}), mat("SL2", 7), mat("PSL2", 11), mc(15, 4, 2),
      sa(6, false), mat("PSL2", 13), mat("GL2", 3), cyclic({2, 4}), cyclic({2, 2, 2}), mat("PGL2", 7),
  };
}

struct Resolved {
  std::string name, family, intended;
  std::optional<Group> group;
};

Resolved resolve(const CorpusEntry& e) {
  Resolved r{e.name, e.family, "", std::nullopt};
  if (!e.family.empty()) {
    auto rec = construct(e.family, e.parameters);
    r.intended = rec.intended_case;
    r.group.emplace(std::move(rec.group));
  } else {
    std::ifstream in(e.path);
    if (!in) fail(ErrorKind::ParseError, "cannot read group file '" + e.path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    r.family = "file";
    r.group.emplace(group_from_text(ss.str()));
  }
  return r;
}

template <class F>
void parallel_for(std::size_t n, unsigned workers, F f) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  auto run = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

bool positive(const std::string& label) { return !label.empty() && label != "NotX" && label.rfind("error:", 0) != 0; }

}  // namespace

std::vector<std::string> suite_names() { return {"empty", "negative", "standard"}; }

std::vector<CorpusEntry> builtin_suite(const std::string& name) {
  if (name == "standard") return standard_suite();
  if (name == "negative") return negative_suite();
  if (name == "empty") return {};
  fail(ErrorKind::InvalidParameter, "unknown suite '" + name + "'");
}

std::vector<CorpusEntry> suite_from_doc(const nlohmann::json& doc) {
  if (!doc.is_array()) fail(ErrorKind::ParseError, "suite document must be an array");
  std::vector<CorpusEntry> out;
  for (const auto& e : doc) {
    if (!e.is_object() || !e.contains("name")) fail(ErrorKind::ParseError, "suite entry needs a name");
    CorpusEntry c;
    c.name = e["name"].get<std::string>();
    if (e.contains("family")) {
      c.family = e["family"].get<std::string>();
      c.parameters = e.value("parameters", json::object());
    } else if (e.contains("path")) {
      c.path = e["path"].get<std::string>();
    } else {
      fail(ErrorKind::ParseError, "suite entry '" + c.name + "' needs a family or a path");
    }
    out.push_back(std::move(c));
  }
  return out;
}

EntryResult evaluate_entry(const std::string& name, const std::string& family, const std::string& intended,
                           const Group& G, const CorpusOptions& opt) {
  EntryResult r;
  r.name = name;
  r.family = family;
  r.order = G.order();
  r.intended_case = intended;
  const bool within = G.order() <= opt.brute_cap;
  auto problem = [&](std::string s) { r.problems.push_back(std::move(s)); };

  bool evidence_ok = true;
  try {
    const auto tc = classify(G, {opt.brute_cap, false});
    r.label = tc.label;
    for (const auto& e : tc.evidence) evidence_ok = evidence_ok && e.verified;
    if (tc.witness) r.witness_verified = verify_witness(G, *tc.witness);
  } catch (const Error& e) {
    r.label = std::string("error:") + std::string(to_string(e.kind()));
    problem(e.what());
  }
  if (!intended.empty() && r.label != intended) problem("label " + r.label + " differs from intended case " + intended);
  if (positive(r.label) && !evidence_ok) problem("unverified evidence on a positive label");

  if (within) {
    const auto b = is_x_bruteforce(G, opt.brute_cap);
    const auto rec = is_x_recursive(G, opt.brute_cap);
    r.brute = b.result;
    r.recursive = rec.result;
    r.confirmation = "brute";
    if (b.result != rec.result) problem("brute and recursive checkers disagree");
    if (positive(r.label) != (b.result == XResult::IsX)) problem("classifier and brute checker disagree");
    for (const auto* v : {&b, &rec})
      if (v->witness && !verify_witness(G, *v->witness)) problem("witness failed verification");
    if (b.witness && !r.witness_verified) r.witness_verified = verify_witness(G, *b.witness);
    if (G.order() <= opt.exhaustive_limit) {
      r.exhaustive_agrees = exhaustive_violation(G, opt.enum_cap).has_value() == (b.result == XResult::NotX);
      if (!*r.exhaustive_agrees) problem("pair criterion and all-subgroup criterion disagree");
    }
    if (b.result == XResult::IsX && G.order() <= opt.closure_limit) {
      const auto audit = subgroup_closure_audit(G, opt.enum_cap, opt.brute_cap);
      r.closure_violations = audit.violations;
      if (audit.violations) problem("a subgroup class of an X-group is not X");
    }
    if (const auto fs = frobenius_structure(G)) {
      const Group K = subgroup_as_group(G, fs->kernel);
      const Group L = subgroup_as_group(G, fs->complement);
      const bool premise = is_x_bruteforce(K, opt.brute_cap).result == XResult::IsX &&
                           is_x_bruteforce(L, opt.brute_cap).result == XResult::IsX;
      if (!premise) {
        r.frobenius = "premise_fails";
      } else if (b.result == XResult::IsX) {
        r.frobenius = "holds";
      } else {
        r.frobenius = "violated";
        problem("Frobenius group with X kernel and complement is not X");
      }
    }
  } else {
    r.confirmation = "structural-only";
  }

  const auto gf = generalized_fitting(G);
  r.fstar_self_centralizing = centralizer(G, gf.fstar).subset_of(gf.fstar);
  if (!r.fstar_self_centralizing) problem("C_G(F*) is not contained in F*");

  if (!r.problems.empty())
    r.status = "mismatch";
  else
    r.status = within ? "match" : "warn";
  return r;
}

CorpusSummary run_corpus(const std::string& suite, const std::vector<CorpusEntry>& entries, const CorpusOptions& opt) {
  std::vector<Resolved> resolved(entries.size());
  parallel_for(entries.size(), opt.workers, [&](std::size_t i) { resolved[i] = resolve(entries[i]); });

  CorpusSummary s;
  s.suite = suite;
  s.entries.resize(entries.size());
  parallel_for(entries.size(), opt.workers, [&](std::size_t i) {
    const auto& r = resolved[i];
    try {
      s.entries[i] = evaluate_entry(r.name, r.family, r.intended, *r.group, opt);
    } catch (const Error& e) {
      EntryResult bad;
      bad.name = r.name;
      bad.family = r.family;
      bad.order = r.group->order();
      bad.intended_case = r.intended;
      bad.status = "mismatch";
      bad.problems.push_back(e.what());
      s.entries[i] = std::move(bad);
    }
  });
  std::stable_sort(s.entries.begin(), s.entries.end(),
                   [](const EntryResult& a, const EntryResult& b) { return a.name < b.name; });
  for (const auto& e : s.entries) {
    if (e.status == "match") ++s.matches;
    else if (e.status == "warn") ++s.warnings;
    else ++s.mismatches;
  }
  return s;
}

Doc summary_to_doc(const CorpusSummary& s) {
  Doc d;
  d["suite"] = s.suite;
  d["entries_total"] = s.entries.size();
  d["matches"] = s.matches;
  d["mismatches"] = s.mismatches;
  d["warnings"] = s.warnings;
  Doc list = Doc::array();
  for (const auto& e : s.entries) {
    Doc x;
    x["name"] = e.name;
    x["family"] = e.family;
    x["order"] = e.order;
    x["intended_case"] = e.intended_case;
    x["label"] = e.label;
    x["confirmation"] = e.confirmation;
    x["brute"] = e.brute ? Doc(to_string(*e.brute)) : Doc(nullptr);
    x["recursive"] = e.recursive ? Doc(to_string(*e.recursive)) : Doc(nullptr);
    x["witness_verified"] = e.witness_verified ? Doc(*e.witness_verified) : Doc(nullptr);
    x["exhaustive_agrees"] = e.exhaustive_agrees ? Doc(*e.exhaustive_agrees) : Doc(nullptr);
    x["closure_violations"] = e.closure_violations ? Doc(*e.closure_violations) : Doc(nullptr);
    x["frobenius"] = e.frobenius;
    x["fstar_self_centralizing"] = e.fstar_self_centralizing;
    x["status"] = e.status;
    x["problems"] = e.problems;
    list.push_back(std::move(x));
  }
  d["entries"] = std::move(list);
  return d;
}

}  // namespace xgroup
