#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "xgroup/group.hpp"

namespace xgroup {

/// A group given by a multiplication rule on codes 0..order-1, code 0 being
/// the identity. Only used to produce permutation generators.
struct AbstractGroup {
  std::size_t order = 1;
  std::function<std::uint32_t(std::uint32_t, std::uint32_t)> mul;
};

inline constexpr std::size_t kMaxRegularDegree = 4096;

/// Closure of `gens` acting on the right regular representation.
Group regular_group(const AbstractGroup& A, const std::vector<std::uint32_t>& gens);

/// Closure of `gens` acting on right cosets of the subgroup `sub` (given by
/// its member codes). The action must be faithful on <gens>; `expected_order`
/// is checked.
Group coset_group(const AbstractGroup& A, const std::vector<std::uint32_t>& gens,
                  const std::vector<std::uint32_t>& sub, std::size_t expected_order);

/// <a, y | a^m, y^n = a^s, y^-1 a y = a^r>, code i + m*j for a^i y^j.
/// Requires r^n = 1 and s*(r-1) = 0 modulo m.
AbstractGroup metacyclic_normal_form(std::uint64_t m, std::uint64_t n, std::uint64_t r,
                                     std::uint64_t s);

/// Triples (a, b, c) mod p, code a + p*b + p^2*c. The plain law has cocycle
/// a*b'; the symmetric law uses (a*b' - a'*b)/2 (p odd) so that SL_2(p) acts
/// on (a, b) by automorphisms fixing c.
AbstractGroup heisenberg_normal_form(std::uint32_t p, bool symmetric);

/// N x| C_k with (n, t)(n', t') = (n * phi^t(n'), t + t'), code n + |N|*t.
/// `phi` must be an automorphism of N whose order divides k.
AbstractGroup semidirect_cyclic(const AbstractGroup& N, std::uint32_t k,
                                const std::function<std::uint32_t(std::uint32_t)>& phi);

}  // namespace xgroup
