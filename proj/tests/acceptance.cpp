// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "xgroup/classifier.hpp"
#include "xgroup/constructors.hpp"
#include "xgroup/corpus.hpp"
#include "xgroup/document.hpp"
#include "xgroup/engine.hpp"
#include "xgroup/errors.hpp"
#include "xgroup/fingerprint.hpp"
#include "xgroup/tower.hpp"
#include "xgroup/xcheck.hpp"

using namespace xgroup;

namespace {

// Every group in the positive table is brute-confirmed, including the ones
// above the default cap.
constexpr std::size_t kConfirmCap = kMaxGroupOrder;

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;
  void fail(std::string s) {
    ok = false;
    notes.push_back(std::move(s));
  }
  void expect(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
};

struct Named {
  std::string name;
  std::function<ConstructionRecord()> build;
  std::string label;
};

const CorpusSummary& standard_corpus() {
  static const CorpusSummary s = [] {
    CorpusOptions o;
    o.workers = 8;
    return run_corpus("standard", builtin_suite("standard"), o);
  }();
  return s;
}

Outcome positive_table() {
  const auto cpl = [](const char* c) { return parse_complement(c); };
  const std::vector<Named> rows{
      {"C12", [] { return basic_abelian({12}); }, "1.1"},
      {"5^2", [] { return basic_abelian({5, 5}); }, "1.2"},
      {"extraspecial(3,p)", [] { return extraspecial(3, ExponentKind::P); }, "1.3"},
      {"extraspecial(3,p^2)", [] { return extraspecial(3, ExponentKind::PSquared); }, "1.3"},
      {"D16", [] { return two_group(TwoGroupKind::Dihedral, 16); }, "1.4"},
      {"SD16", [] { return two_group(TwoGroupKind::Semidihedral, 16); }, "1.4"},
      {"Q16", [] { return two_group(TwoGroupKind::Quaternion, 16); }, "1.4"},
      {"metacyclic(7,3,2)", [] { return metacyclic(7, 3, 2); }, "2.1.1"},
      {"quaternion_metacyclic(5,8)", [] { return quaternion_metacyclic(5, 8); }, "2.1.2"},
      {"metacyclic(5,4,4)", [] { return metacyclic(5, 4, 4); }, "2.1.3"},
      {"extraspecial_frobenius(7,3,1)", [] { return extraspecial_frobenius(7, 3, 1); }, "2.2"},
      {"Sym(4)", [] { return sym_alt(4, false); }, "3.1.1"},
      {"Alt(4)", [] { return sym_alt(4, true); }, "3.1.1"},
      {"affine(3,cyclic(8))", [&] { return affine_frobenius(3, cpl("cyclic(8)")); }, "3.1.2.1"},
      {"affine(3,quaternion(8))", [&] { return affine_frobenius(3, cpl("quaternion(8)")); }, "3.1.2.2"},
      {"affine(13,case_2_1_2(3,8))", [&] { return affine_frobenius(13, cpl("case_2_1_2(3,8)")); }, "3.1.2.3"},
      {"affine(7,case_2_1_3(3,4))", [&] { return affine_frobenius(7, cpl("case_2_1_3(3,4)")); }, "3.1.2.4"},
      {"affine(5,sl2_3)", [&] { return affine_frobenius(5, cpl("sl2_3")); }, "3.1.2.5"},
      {"affine(7,sl2_3_dot2)", [&] { return affine_frobenius(7, cpl("sl2_3_dot2")); }, "3.1.2.6"},
      {"affine(11,sl2_5)", [&] { return affine_frobenius(11, cpl("sl2_5")); }, "3.1.2.7"},
      {"SL2(3)", [] { return matrix_group(MatrixKind::SL2, 3); }, "3.2.1"},
      {"sl2p_dot2(3)", [] { return sl2p_dot2(3); }, "3.2.1"},
      {"heisenberg_extension(5,3)", [] { return heisenberg_extension(5, 3); }, "3.2.2"},
      {"SL2(5)", [] { return matrix_group(MatrixKind::SL2, 5); }, "4.1"},
      {"sl2p_dot2(5)", [] { return sl2p_dot2(5); }, "4.1"},
      {"SL2(4)", [] { return matrix_group(MatrixKind::SL2, 4); }, "4.2"},
      {"PSL2(5)", [] { return matrix_group(MatrixKind::PSL2, 5); }, "4.2"},
      {"Alt(5)", [] { return sym_alt(5, true); }, "4.2"},
      {"PSL2(7)", [] { return matrix_group(MatrixKind::PSL2, 7); }, "4.2"},
      {"PSL2(9)", [] { return matrix_group(MatrixKind::PSL2, 9); }, "4.2"},
      {"Mat(10)", [] { return m10(); }, "4.2"},
      {"PSL2(17)", [] { return matrix_group(MatrixKind::PSL2, 17); }, "4.2"},
  };
  Outcome out;
  std::size_t above_default = 0;
  for (const auto& row : rows) {
    try {
      const auto rec = row.build();
      const auto tc = classify(rec.group, {kConfirmCap, true});
      out.expect(tc.label == row.label, row.name + ": label " + tc.label + ", expected " + row.label);
      for (const auto& e : tc.evidence) out.expect(e.verified, row.name + ": unverified fact " + e.fact);
      const auto b = is_x_bruteforce(rec.group, kConfirmCap);
      out.expect(b.result == XResult::IsX, row.name + ": brute NotX");
      if (rec.group.order() > kDefaultBruteCap) ++above_default;
    } catch (const Error& e) {
      out.fail(row.name + ": " + e.what());
    }
  }
  out.notes.push_back(std::to_string(rows.size()) + " groups brute-confirmed, " + std::to_string(above_default) +
                      " of them above the default cap");
  return out;
}


Outcome negative_table() {
  struct Row {
    std::string name;
    std::function<ConstructionRecord()> build;
    std::function<ConstructionRecord()> witness_shape;  // fingerprint of <a, b, x>, if prescribed
  };
  const std::vector<Row> rows{
      {"Sym(5)", [] { return sym_alt(5, false); }, [] { return metacyclic(6, 2, 5); }},
      {"PGL2(9)", [] { return matrix_group(MatrixKind::PGL2, 9); }, [] { return metacyclic(10, 2, 9); }},
      {"Dih(12)", [] { return metacyclic(6, 2, 5); }, nullptr},
      {"3^3", [] { return basic_abelian({3, 3, 3}); }, nullptr},
      {"SL2(7)", [] { return matrix_group(MatrixKind::SL2, 7); }, nullptr},
      {"PSL2(11)", [] { return matrix_group(MatrixKind::PSL2, 11); }, nullptr},
      {"metacyclic(15,4,2)", [] { return metacyclic(15, 4, 2); }, nullptr},
      {"Sym(6)", [] { return sym_alt(6, false); }, nullptr},
  };
  Outcome out;
  for (const auto& row : rows) {
    try {
      const Group G = row.build().group;
      const auto tc = classify(G);
      out.expect(tc.label == "NotX", row.name + ": label " + tc.label);
      const auto b = is_x_bruteforce(G);
      out.expect(b.result == XResult::NotX, row.name + ": brute IsX");
      if (!tc.witness || !b.witness) {
        out.fail(row.name + ": missing witness");
        continue;
      }
      out.expect(verify_witness(G, *tc.witness), row.name + ": classifier witness fails");
      out.expect(verify_witness(G, *b.witness), row.name + ": brute witness fails");
      if (row.witness_shape) {
        const auto& w = *b.witness;
        const Group W = subgroup_as_group(G, closure(G, {w.a, w.b, w.x}));
        out.expect(fingerprint(W) == fingerprint(row.witness_shape().group),
                   row.name + ": witness subgroup has the wrong fingerprint");
      }
    } catch (const Error& e) {
      out.fail(row.name + ": " + e.what());
    }
  }
  return out;
}

Outcome oracle_agreement() {
  Outcome out;
  std::size_t compared = 0;
  for (const auto& e : standard_corpus().entries) {
    if (!e.brute || !e.recursive) continue;
    ++compared;
    out.expect(*e.brute == *e.recursive, e.name + ": brute and recursive disagree");
  }
  out.expect(compared >= 60, "only " + std::to_string(compared) + " groups within the brute cap");
  out.notes.push_back(std::to_string(compared) + " groups compared");
  return out;
}

Outcome pair_reduction() {
  Outcome out;
  std::size_t compared = 0;
  for (const auto& e : standard_corpus().entries) {
    if (e.order > 100) continue;
    ++compared;
    out.expect(e.exhaustive_agrees == true, e.name + ": pair and all-subgroup criteria disagree");
  }
  out.expect(compared > 0, "no groups of order <= 100");
  out.notes.push_back(std::to_string(compared) + " groups of order <= 100");
  return out;
}

Outcome subgroup_closed() {
  Outcome out;
  std::size_t audited = 0;
  for (const auto& e : standard_corpus().entries) {
    if (e.brute != XResult::IsX || e.order > 720) continue;
    ++audited;
    if (!e.closure_violations) out.fail(e.name + ": not audited");
    else out.expect(*e.closure_violations == 0, e.name + ": " + std::to_string(*e.closure_violations) + " violations");
  }
  out.notes.push_back(std::to_string(audited) + " X-groups audited");
  return out;
}

Outcome frobenius_composition() {
  Outcome out;
  std::size_t holds = 0, premise_fails = 0;
  for (const auto& e : standard_corpus().entries) {
    if (e.frobenius == "holds") ++holds;
    else if (e.frobenius == "premise_fails") ++premise_fails;
    else if (e.frobenius != "n/a") out.fail(e.name + ": " + e.frobenius);
  }
  out.expect(holds > 0, "no Frobenius groups met the premise");
  out.notes.push_back(std::to_string(holds) + " Frobenius groups, " + std::to_string(premise_fails) +
                      " with a non-X kernel or complement");
  return out;
}

Outcome fstar_property() {
  Outcome out;
  for (const auto& e : standard_corpus().entries)
    out.expect(e.fstar_self_centralizing, e.name + ": C_G(F*) not inside F*");
  out.notes.push_back(std::to_string(standard_corpus().entries.size()) + " groups");
  return out;
}


Outcome towers() {
  struct Row {
    TowerSpec spec;
    std::string label;
  };
  const std::vector<Row> rows{{{TowerKind::Prufer, 3, 1, 2, 4}, "1.1"},
                              {{TowerKind::Prufer2Ext, 2, 1, 2, 4}, "1.4"},
                              {{TowerKind::Prufer2Ext, 2, 1, 4, 4}, "1.4"},
                              {{TowerKind::PruferMetacyclic, 5, 4, 2, 3}, "2.1.1"},
                              {{TowerKind::PruferMetacyclic, 7, 3, 2, 3}, "2.1.1"}};
  Outcome out;
  for (const auto& row : rows) {
    const std::string name = to_string(row.spec);
    try {
      const auto rep = verify_tower(row.spec);
      out.expect(rep.levels.size() == row.spec.depth, name + ": wrong depth");
      out.expect(rep.functorial, name + ": embeddings not functorial");
      for (const auto& l : rep.levels) {
        const std::string at = name + " level " + std::to_string(l.level);
        out.expect(l.verdict == XResult::IsX, at + ": NotX");
        out.expect(l.theorem_case == row.label, at + ": case " + l.theorem_case);
        out.expect(l.embedding_ok, at + ": embedding");
        out.expect(l.stabilization_ok, at + ": stabilization");
      }
      out.expect(rep.ok(), name + ": report not ok");
    } catch (const Error& e) {
      out.fail(name + ": " + e.what());
    }
  }
  const auto control = dihedral_quotient_control(3);
  bool flagged = false;
  for (const auto& [order, verdict] : control) flagged = flagged || (order == 12 && verdict == XResult::NotX);
  out.expect(flagged, "negative control did not flag Dih(12)");
  return out;
}

std::string run_cli(const std::string& args, int& code) {
  const std::string out = "acceptance_cli_out.txt";
  const int status = std::system((std::string(XGROUP_CLI) + " " + args + " >" + out).c_str());
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  Outcome out;
  int c1 = 0, c2 = 0;
  const auto a = run_cli("--workers 8 corpus --suite standard", c1);
  const auto b = run_cli("--workers 8 corpus --suite standard", c2);
  out.expect(c1 == 0 && c2 == 0, "corpus exit codes " + std::to_string(c1) + ", " + std::to_string(c2));
  out.expect(!a.empty() && a == b, "summaries differ");
  try {
    const auto doc = nlohmann::json::parse(a);
    out.expect(doc["entries_total"].get<std::size_t>() >= 60, "fewer than 60 entries");
    out.expect(doc["mismatches"] == 0, "corpus has mismatches");
    out.notes.push_back(std::to_string(a.size()) + " bytes, " + doc["entries_total"].dump() + " entries, " +
                        doc["mismatches"].dump() + " mismatches");
  } catch (const std::exception& e) {
    out.fail(std::string("summary is not a document: ") + e.what());
  }
  return out;
}

Outcome census() {
  Outcome out;
  auto count = [](const Group& G) {
    std::pair<std::size_t, std::size_t> c{0, 0};
    for (const auto& cls : subgroups_up_to_conjugacy(G)) {
      c.first += cls.class_size;
      ++c.second;
    }
    return c;
  };
  out.expect(count(sym_alt(3, false).group) == std::pair<std::size_t, std::size_t>{6, 4}, "Sym(3)");
  out.expect(count(sym_alt(4, false).group) == std::pair<std::size_t, std::size_t>{30, 11}, "Sym(4)");
  const Group Q = two_group(TwoGroupKind::Quaternion, 8).group;
  const auto q = subgroups_up_to_conjugacy(Q);
  out.expect(q.size() == 6, "Q8 classes");
  for (const auto& c : q) out.expect(c.class_size == 1 && is_normal(Q, c.representative), "Q8 subgroup not normal");
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"positive classification table", positive_table},
      {"negative table", negative_table},
      {"brute and recursive checkers agree", oracle_agreement},
      {"pair criterion matches all-subgroup criterion", pair_reduction},
      {"X-groups are subgroup-closed", subgroup_closed},
      {"Frobenius composition", frobenius_composition},
      {"F* is self-centralizing", fstar_property},
      {"towers", towers},
      {"corpus determinism", determinism},
      {"subgroup census", census},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.ok) ++failed;
    std::printf("%s %2zu %s (%.1fs)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), s);
    for (const auto& n : o.notes) std::printf("        %s\n", n.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed ? 1 : 0;
}
