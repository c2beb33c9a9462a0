#include "xgroup/document.hpp"

#include <sstream>

#include "xgroup/errors.hpp"

namespace xgroup {

namespace {

[[noreturn]] void parse_error(const std::string& what) { fail(ErrorKind::ParseError, "malformed group document: " + what); }

std::vector<std::uint64_t> uint_row(const nlohmann::json& row, const std::string& where) {
  if (!row.is_array()) parse_error(where + " is not an array");
  std::vector<std::uint64_t> out;
  out.reserve(row.size());
  for (const auto& v : row) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
      parse_error(where + " contains a non-integer or negative entry");
    out.push_back(v.get<std::uint64_t>());
  }
  return out;
}

}  // namespace

Doc group_to_doc(const Group& G) {
  Doc d;
  if (G.from_table_input()) {
    Doc rows = Doc::array();
    for (Elem a = 0; a < G.order(); ++a) {
      Doc row = Doc::array();
      for (Elem b = 0; b < G.order(); ++b) row.push_back(G.mul(a, b));
      rows.push_back(std::move(row));
    }
    d["table"] = std::move(rows);
    return d;
  }
  d["degree"] = G.degree();
  Doc gens = Doc::array();
  for (const auto& p : G.generator_permutations()) {
    Doc row = Doc::array();
    for (auto x : p.images()) row.push_back(x);
    gens.push_back(std::move(row));
  }
  d["generators"] = std::move(gens);
  return d;
}

Group group_from_doc(const nlohmann::json& doc, std::size_t cap) {
  if (!doc.is_object()) parse_error("top level is not an object");
  if (doc.contains("table")) {
    const auto& t = doc["table"];
    if (!t.is_array() || t.empty()) parse_error("table must be a non-empty array");
    std::vector<std::vector<Elem>> table;
    for (std::size_t i = 0; i < t.size(); ++i) {
      auto row = uint_row(t[i], "table row " + std::to_string(i));
      if (row.size() != t.size()) parse_error("table is not square");
      std::vector<Elem> r;
      for (auto v : row) {
        if (v >= t.size()) parse_error("table entry out of range");
        r.push_back(static_cast<Elem>(v));
      }
      table.push_back(std::move(r));
    }
    if (table.size() > cap) fail(ErrorKind::CapExceeded, "table order exceeds the cap");
    return Group::from_table(table);
  }
  if (!doc.contains("degree") || !doc.contains("generators"))
    parse_error("expected keys 'degree' and 'generators' (or 'table')");
  if (!doc["degree"].is_number_unsigned() && !doc["degree"].is_number_integer()) parse_error("degree is not an integer");
  const long long degree = doc["degree"].get<long long>();
  if (degree < 1 || degree > 65535) parse_error("degree out of range");
  const auto& g = doc["generators"];
  if (!g.is_array()) parse_error("generators is not an array");
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto row = uint_row(g[i], "generator " + std::to_string(i));
    if (row.size() != static_cast<std::size_t>(degree))
      fail(ErrorKind::InvalidPermutation, "generator " + std::to_string(i) + " has length " +
                                              std::to_string(row.size()) + ", expected " + std::to_string(degree));
    std::vector<std::int64_t> pts(row.begin(), row.end());
    gens.push_back(Permutation::from_images(pts));  // validates bijectivity
  }
  return Group::from_generators(static_cast<std::size_t>(degree), gens, cap);
}

Group group_from_text(const std::string& text, std::size_t cap) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_error(e.what());
  }
  return group_from_doc(doc, cap);
}

std::string dump(const Doc& doc) { return doc.dump(2) + "\n"; }

Doc provenance(const ConstructionRecord& rec) {
  Doc d;
  d["family"] = rec.family;
  d["parameters"] = rec.parameters;
  d["intended_case"] = rec.intended_case;
  d["order"] = rec.group.order();
  d["degree"] = rec.group.degree();
  d["checks"] = rec.checks;
  d["details"] = rec.details;
  return d;
}

Word word_of(const Group& G, Elem g) { return G.word(g); }

Elem evaluate(const Group& G, const Word& w) {
  Elem x = Group::identity;
  for (auto i : w) {
    if (i >= G.generators().size()) fail(ErrorKind::ParseError, "word refers to a missing generator");
    x = G.mul(x, G.generators()[i]);
  }
  return x;
}

Doc witness_to_doc(const Group& G, const Witness& w) {
  Doc d;
  d["a"] = word_of(G, w.a);
  d["b"] = word_of(G, w.b);
  d["x"] = word_of(G, w.x);
  return d;
}

Witness witness_from_doc(const Group& G, const nlohmann::json& doc) {
  auto get = [&](const char* k) {
    if (!doc.contains(k)) fail(ErrorKind::ParseError, std::string("witness lacks '") + k + "'");
    return evaluate(G, doc[k].get<Word>());
  };
  return Witness{get("a"), get("b"), get("x")};
}

Doc verdict_to_doc(const Group& G, const XVerdict& v) {
  Doc d;
  d["method"] = to_string(v.method);
  d["verdict"] = to_string(v.result);
  d["witness"] = v.witness ? witness_to_doc(G, *v.witness) : Doc();
  d["witness_verified"] = v.witness ? Doc(verify_witness(G, *v.witness)) : Doc();
  Doc s;
  s["pairs_scanned"] = v.stats.pairs_scanned;
  s["closures"] = v.stats.closures;
  s["centralizer_groups"] = v.stats.centralizer_groups;
  s["memo_hits"] = v.stats.memo_hits;
  d["stats"] = std::move(s);
  return d;
}

Doc theorem_case_to_doc(const Group& G, const TheoremCase& tc) {
  Doc d;
  d["label"] = tc.label;
  d["parameters"] = tc.parameters;
  Doc ev = Doc::array();
  for (const auto& e : tc.evidence) {
    Doc f;
    f["fact"] = e.fact;
    f["verified"] = e.verified;
    ev.push_back(std::move(f));
  }
  d["evidence"] = std::move(ev);
  d["confirmation"] = tc.confirmation;
  d["witness"] = tc.witness ? witness_to_doc(G, *tc.witness) : Doc();
  return d;
}

Doc tower_report_to_doc(const TowerReport& rep) {
  Doc d;
  d["kind"] = to_string(rep.spec);
  d["depth"] = rep.spec.depth;
  Doc levels = Doc::array();
  for (const auto& l : rep.levels) {
    Doc x;
    x["level"] = l.level;
    x["order"] = l.order;
    x["x_verdict"] = to_string(l.verdict);
    x["theorem_case"] = l.theorem_case;
    x["embedding_ok"] = l.embedding_ok;
    x["stabilization_ok"] = l.stabilization_ok;
    x["stabilization_checked_through"] = l.stabilization_checked_through;
    levels.push_back(std::move(x));
  }
  d["levels"] = std::move(levels);
  d["labels_constant"] = rep.labels_constant;
  d["functorial"] = rep.functorial;
  d["ok"] = rep.ok();
  return d;
}

namespace {

void pretty(std::ostringstream& out, const Doc& d, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (d.is_object()) {
    for (auto it = d.begin(); it != d.end(); ++it) {
      const auto& v = it.value();
      if (v.is_structured() && !v.empty()) {
        out << pad << it.key() << ":\n";
        pretty(out, v, indent + 2);
      } else {
        out << pad << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (d.is_array()) {
    for (const auto& v : d) {
      if (v.is_object()) {
        out << pad << "-\n";
        pretty(out, v, indent + 2);
      } else {
        out << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else {
    out << pad << (d.is_string() ? d.get<std::string>() : d.dump()) << "\n";
  }
}

}  // namespace

std::string render_pretty(const Doc& doc) {
  std::ostringstream out;
  pretty(out, doc, 0);
  return out.str();
}

}  // namespace xgroup
