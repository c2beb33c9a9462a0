#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xgroup/group.hpp"
#include "xgroup/xcheck.hpp"

namespace xgroup {

enum class TowerKind { Prufer, Prufer2Ext, PruferMetacyclic };

struct TowerSpec {
  TowerKind kind = TowerKind::Prufer;
  std::uint64_t p = 2;
  std::uint64_t d = 1;        // prufer_metacyclic only
  std::uint64_t y_order = 2;  // prufer2_ext only: 2 or 4
  unsigned depth = 1;
};

/// "prufer(3)", "prufer2_ext(4)", "prufer_metacyclic(5,4)".
std::string to_string(const TowerSpec& spec);

/// t^((p-1) p^(k-1) / d) mod p^k, t the smallest primitive root mod p^2.
std::uint64_t padic_unit(std::uint64_t p, unsigned k, std::uint64_t d);

/// One level: a metacyclic group generated by a (the cyclic part) and y.
struct TowerLevel {
  Group group;
  std::uint64_t m = 1, n = 1, r = 1, s = 0;  // <a, y | a^m, y^n = a^s, a^y = a^r>
  /// Image in the next level of every element; empty at the top.
  std::vector<Elem> embedding;
};

/// Levels 1..depth. Throws CapExceeded if the top level is above `cap`.
std::vector<TowerLevel> build_tower(const TowerSpec& spec, std::size_t cap = kDefaultBruteCap);

struct TowerLevelReport {
  unsigned level = 0;
  std::size_t order = 0;
  XResult verdict = XResult::IsX;
  std::string theorem_case;
  bool embedding_ok = true;  // injective, multiplicative, a -> a'^p, y -> y'
  bool stabilization_ok = true;
  unsigned stabilization_checked_through = 0;  // highest level compared against
};

struct TowerReport {
  TowerSpec spec;
  std::vector<TowerLevelReport> levels;
  bool labels_constant = true;  // over levels >= 2
  bool functorial = true;
  bool ok() const;
};

TowerReport verify_tower(const TowerSpec& spec, const std::vector<TowerLevel>& tower,
                         std::size_t brute_cap = kDefaultBruteCap);
TowerReport verify_tower(const TowerSpec& spec, std::size_t brute_cap = kDefaultBruteCap);

/// Quotient-style control Dih(2*6^k), k = 1..depth: per-level verdicts.
/// Dih(12) already fails.
std::vector<std::pair<std::size_t, XResult>> dihedral_quotient_control(unsigned depth);

}  // namespace xgroup
