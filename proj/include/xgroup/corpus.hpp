#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "xgroup/document.hpp"
#include "xgroup/xcheck.hpp"

namespace xgroup {

/// A construction (family + parameters) or a group document on disk.
struct CorpusEntry {
  std::string name;
  std::string family;
  nlohmann::json parameters = nlohmann::json::object();
  std::string path;  // used when family is empty
};

struct CorpusOptions {
  std::size_t brute_cap = kDefaultBruteCap;
  std::size_t enum_cap = kDefaultEnumerationCap;
  unsigned workers = 1;
  /// Orders up to which the exhaustive-subgroup and closure audits run.
  std::size_t exhaustive_limit = 100;
  std::size_t closure_limit = 720;
};

struct EntryResult {
  std::string name;
  std::string family;
  std::size_t order = 0;
  std::string intended_case;  // empty for file entries
  std::string label;
  std::string confirmation;
  std::optional<XResult> brute;
  std::optional<XResult> recursive;
  std::optional<bool> witness_verified;
  std::optional<bool> exhaustive_agrees;  // pair criterion vs all subgroups
  std::optional<std::size_t> closure_violations;
  /// "n/a", "holds", "premise_fails" or "violated"
  std::string frobenius = "n/a";
  bool fstar_self_centralizing = false;
  std::string status;  // match, mismatch, warn
  std::vector<std::string> problems;
};

struct CorpusSummary {
  std::string suite;
  std::vector<EntryResult> entries;  // sorted by name
  std::size_t matches = 0, mismatches = 0, warnings = 0;
};

std::vector<std::string> suite_names();
/// "standard", "negative" or "empty".
std::vector<CorpusEntry> builtin_suite(const std::string& name);
/// [{"name":..., "family":..., "parameters":{...}} | {"name":..., "path":...}]
std::vector<CorpusEntry> suite_from_doc(const nlohmann::json& doc);

/// Every entry is resolved before any check runs; resolution errors propagate.
CorpusSummary run_corpus(const std::string& suite, const std::vector<CorpusEntry>& entries,
                         const CorpusOptions& options = {});

/// Per-entry evaluation (what run_corpus does for each resolved group).
EntryResult evaluate_entry(const std::string& name, const std::string& family, const std::string& intended_case,
                           const Group& G, const CorpusOptions& options);

/// No timings; field order fixed.
Doc summary_to_doc(const CorpusSummary& s);

}  // namespace xgroup
