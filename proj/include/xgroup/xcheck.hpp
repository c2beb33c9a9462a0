#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xgroup/engine.hpp"
#include "xgroup/group.hpp"

namespace xgroup {

inline constexpr std::size_t kDefaultBruteCap = 2500;

/// <a, b> is non-cyclic, x commutes with a and b, and x is not in <a, b>.
struct Witness {
  Elem a = 0, b = 0, x = 0;
  bool operator==(const Witness&) const = default;
};

enum class XResult { IsX, NotX };
enum class XMethod { Brute, Recursive, Structural };

std::string_view to_string(XResult r);
std::string_view to_string(XMethod m);

struct XStats {
  std::uint64_t pairs_scanned = 0;
  std::uint64_t closures = 0;
  std::uint64_t centralizer_groups = 0;  // recursive checker: groups visited
  std::uint64_t memo_hits = 0;
  double elapsed_ms = 0;  // informational only, never serialized in reports
};

struct XVerdict {
  XResult result = XResult::IsX;
  std::optional<Witness> witness;
  XMethod method = XMethod::Brute;
  XStats stats;
};

/// Pair scan: a over conjugacy-class representatives, b over all elements.
XVerdict is_x_bruteforce(const Group& G, std::size_t cap = kDefaultBruteCap);

/// Centralizer recursion over elements of prime order.
XVerdict is_x_recursive(const Group& G, std::size_t cap = kDefaultBruteCap);

/// Recomputes everything from scratch with a plain closure.
bool verify_witness(const Group& G, const Witness& w);

/// Checks C_G(H) <= H for every non-cyclic subgroup class representative.
/// Returns the first offending representative, if any.
std::optional<Subgroup> exhaustive_violation(const Group& G,
                                             std::size_t enum_cap = kDefaultEnumerationCap);

struct FrobeniusStructure {
  Subgroup kernel;
  Subgroup complement;
};
std::optional<FrobeniusStructure> frobenius_structure(const Group& G);

struct AuditEntry {
  std::size_t order = 0;
  std::size_t class_size = 0;
  bool is_x = false;
};
struct AuditReport {
  bool group_is_x = false;
  std::vector<AuditEntry> classes;
  std::size_t violations = 0;  // non-X classes inside an X-group
};
AuditReport subgroup_closure_audit(const Group& G, std::size_t enum_cap = kDefaultEnumerationCap,
                                   std::size_t brute_cap = kDefaultBruteCap);

}  // namespace xgroup
