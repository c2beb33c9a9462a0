#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "xgroup/classifier.hpp"
#include "xgroup/constructors.hpp"
#include "xgroup/group.hpp"
#include "xgroup/tower.hpp"
#include "xgroup/xcheck.hpp"

namespace xgroup {

using Doc = nlohmann::ordered_json;

/// {"degree": n, "generators": [[...], ...]} or, for table input, {"table": [[...]]}.
Doc group_to_doc(const Group& G);

/// Throws ParseError on malformed documents and InvalidPermutation on
/// non-bijective generators.
Group group_from_doc(const nlohmann::json& doc, std::size_t cap = kMaxGroupOrder);
Group group_from_text(const std::string& text, std::size_t cap = kMaxGroupOrder);

/// Two-space indented JSON with a trailing newline.
std::string dump(const Doc& doc);

/// Family, parameters, intended case and the postconditions checked.
Doc provenance(const ConstructionRecord& rec);

/// A word is a list of 0-based indices into the input generators.
using Word = std::vector<std::size_t>;
Word word_of(const Group& G, Elem g);
Elem evaluate(const Group& G, const Word& w);

Doc witness_to_doc(const Group& G, const Witness& w);
/// Inverse of witness_to_doc on the same input generators.
Witness witness_from_doc(const Group& G, const nlohmann::json& doc);

Doc verdict_to_doc(const Group& G, const XVerdict& v);
Doc theorem_case_to_doc(const Group& G, const TheoremCase& tc);
Doc tower_report_to_doc(const TowerReport& rep);

/// Indented "key: value" rendering for humans.
std::string render_pretty(const Doc& doc);

}  // namespace xgroup
