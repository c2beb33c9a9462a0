#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "xgroup/group.hpp"

namespace xgroup {

/// Isomorphism-invariant evidence about a group. Equal fingerprints are
/// reported as a "fingerprint match", never as a proven isomorphism.
struct Fingerprint {
  std::size_t order = 0;
  std::size_t center_order = 0;
  std::size_t derived_order = 0;
  std::vector<std::uint64_t> abelianization_invariants;  // invariant factors, d1 | d2 | ...
  std::map<unsigned, std::size_t> element_order_multiset;
  std::map<std::size_t, std::size_t> conjugacy_class_size_multiset;
  bool is_perfect = false;
  bool is_simple_quotient_by_center = false;

  bool operator==(const Fingerprint&) const = default;
  /// Stable single-line rendering, also used as a memo key.
  std::string to_string() const;
};

Fingerprint fingerprint(const Group& G);

/// Invariant factors of an abelian group from its element-order census.
std::vector<std::uint64_t> abelian_invariants_from_orders(
    const std::map<std::uint64_t, std::size_t>& order_counts);

}  // namespace xgroup
