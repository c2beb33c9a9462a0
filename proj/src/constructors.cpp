#include "xgroup/constructors.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "xgroup/engine.hpp"
#include "xgroup/errors.hpp"
#include "xgroup/fingerprint.hpp"
#include "xgroup/normal_form.hpp"
#include "xgroup/numtheory.hpp"
#include "construct_util.hpp"

namespace xgroup {

namespace {

using json = nlohmann::ordered_json;
using detail::check;
using detail::order_census;
using detail::realize_metacyclic;

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

bool is_unit_mod(std::uint64_t x, std::uint64_t m) { return nt::gcd(x % m, m) == 1; }

// Case label of C_m x| C_n (generator acting by u) by the arithmetic rules.
std::string metacyclic_case(std::uint64_t m, std::uint64_t n, std::uint64_t u) {
  const std::uint64_t order = m * n;
  if (m == 1 || n == 1) return "1.1";
  u %= m;
  if (u == 1 % m) {
    if (nt::gcd(m, n) == 1) return "1.1";
    if (m == n && nt::is_prime(m)) return "1.2";
    return "NotX";
  }
  if (auto p = nt::prime_power_base(order); p != 0) {
    if (p != 2) return order == p * p * p ? "1.3" : "NotX";
    if (n != 2) return "NotX";
    if (u == m - 1 && m >= 4) return "1.4";
    if (m >= 8 && u == m / 2 - 1) return "1.4";
    return "NotX";
  }
  bool frobenius = true;
  for (std::uint64_t k = 1; k < n; ++k)
    if (!is_unit_mod(nt::pow_mod(u, k, m) + m - 1, m)) frobenius = false;
  if (frobenius) return "2.1.1";
  const std::uint64_t e = nt::mult_order(u, m);
  const std::uint64_t q = nt::prime_divisors(order).front();
  bool ok = e > 1 && e < n && nt::is_power_of(n, q) && nt::gcd(m, n) == 1;
  for (std::uint64_t k = 1; ok && k < e; ++k)
    if (!is_unit_mod(nt::pow_mod(u, k, m) + m - 1, m)) ok = false;
  return ok ? "2.1.3" : "NotX";
}

}  // namespace

// a^i y^j realized on cosets of <y> when that action is faithful, otherwise
// on the regular representation. Generators are a, y in that order.
Group detail::realize_metacyclic(std::uint64_t m, std::uint64_t n, std::uint64_t r, std::uint64_t s) {
  auto A = metacyclic_normal_form(m, n, r, s);
  std::vector<std::uint32_t> gens{m > 1 ? 1u : 0u, static_cast<std::uint32_t>(m % (m * n))};
  bool faithful = m > 1 && s % m == 0 && (n == 1 || nt::mult_order(r % m, m) == n);
  if (faithful) {
    std::vector<std::uint32_t> sub;
    for (std::uint64_t j = 0; j < n; ++j) sub.push_back(static_cast<std::uint32_t>(m * j));
    return coset_group(A, gens, sub, m * n);
  }
  return regular_group(A, gens);
}

// ------------------------------------------------------------ small families

ConstructionRecord basic_abelian(const std::vector<std::uint64_t>& factors) {
  std::uint64_t order = 1;
  for (auto f : factors) {
    if (f < 2) fail(ErrorKind::InvalidParameter, "basic_abelian: factors must be >= 2");
    order *= f;
    if (order > kMaxGroupOrder) fail(ErrorKind::CapExceeded, "basic_abelian: order exceeds cap");
  }
  std::size_t degree = 0;
  for (auto f : factors) degree += f;
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (auto f : factors) {
    std::vector<Point> img(std::max<std::size_t>(degree, 1));
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < f; ++i) img[offset + i] = static_cast<Point>(offset + (i + 1) % f);
    gens.emplace_back(std::move(img));
    offset += f;
  }
  // invariant factors from the prime-power decomposition
  std::map<std::uint64_t, std::vector<std::uint64_t>> powers;
  for (auto f : factors)
    for (auto [p, e] : nt::factorize(f)) powers[p].push_back(ipow(p, e));
  std::size_t rank = 0;
  for (auto& [p, v] : powers) {
    std::sort(v.rbegin(), v.rend());
    rank = std::max(rank, v.size());
  }
  std::vector<std::uint64_t> inv(rank, 1);
  for (auto& [p, v] : powers)
    for (std::size_t i = 0; i < v.size(); ++i) inv[i] *= v[i];
  std::string label = "NotX";
  if (rank <= 1) label = "1.1";
  else if (rank == 2 && inv[0] == inv[1] && nt::is_prime(inv[0])) label = "1.2";

  ConstructionRecord rec{"basic_abelian", json{{"factors", factors}}, label,
                         Group::from_generators(std::max<std::size_t>(degree, 1), gens), {}};
  check(rec, rec.group.order() == order, "order is the product of the factors");
  check(rec, is_abelian(rec.group, Subgroup::whole(rec.group)), "abelian");
  return rec;
}

ConstructionRecord two_group(TwoGroupKind kind, std::uint64_t order) {
  const char* name = kind == TwoGroupKind::Dihedral       ? "dihedral"
                     : kind == TwoGroupKind::Semidihedral ? "semidihedral"
                                                          : "quaternion";
  if (!nt::is_power_of(order, 2) || order < 4)
    fail(ErrorKind::InvalidParameter, "two_group: order must be a power of 2");
  if (kind == TwoGroupKind::Quaternion && order < 8)
    fail(ErrorKind::InvalidParameter, "two_group: quaternion needs order >= 8");
  if (kind == TwoGroupKind::Semidihedral && order < 16)
    fail(ErrorKind::InvalidParameter, "two_group: semidihedral needs order >= 16");
  if (order > kMaxRegularDegree) fail(ErrorKind::CapExceeded, "two_group: order exceeds cap");
  const std::uint64_t m = order / 2;
  std::uint64_t r = m - 1, s = 0;
  if (kind == TwoGroupKind::Semidihedral) r = m / 2 - 1;
  if (kind == TwoGroupKind::Quaternion) s = m / 2;
  ConstructionRecord rec{"two_group", json{{"kind", name}, {"order", order}},
                         order == 4 ? "1.2" : "1.4", realize_metacyclic(m, 2, r, s), {}};
  auto census = order_census(rec.group);
  check(rec, rec.group.order() == order, "order");
  std::size_t involutions = census.count(2) ? census[2] : 0;
  std::size_t expected = kind == TwoGroupKind::Dihedral       ? m + 1
                         : kind == TwoGroupKind::Semidihedral ? m / 2 + 1
                                                              : 1;
  check(rec, involutions == expected, "involution count " + std::to_string(expected));
  check(rec, census.rbegin()->first == m, "cyclic maximal subgroup of order " + std::to_string(m));
  return rec;
}

ConstructionRecord extraspecial(std::uint32_t p, ExponentKind kind) {
  if (!nt::is_prime(p) || p == 2)
    fail(ErrorKind::InvalidParameter, "extraspecial: p must be an odd prime (use two_group for p = 2)");
  const std::uint64_t P = p;
  if (P * P * P > kMaxGroupOrder) fail(ErrorKind::CapExceeded, "extraspecial: p^3 exceeds cap");
  const bool sq = kind == ExponentKind::PSquared;
  Group G = [&] {
    if (sq) return realize_metacyclic(P * P, P, 1 + P, 0);
    auto H = heisenberg_normal_form(p, false);
    std::vector<std::uint32_t> sub;
    for (std::uint32_t b = 0; b < p; ++b) sub.push_back(b * p);
    return coset_group(H, {1u, p}, sub, P * P * P);
  }();
  ConstructionRecord rec{"extraspecial", json{{"p", p}, {"exponent", sq ? "p_squared" : "p"}}, "1.3",
                         std::move(G), {}};
  check(rec, rec.group.order() == P * P * P, "order p^3");
  check(rec, center(rec.group).size() == P, "center of order p");
  check(rec, derived_subgroup(rec.group).size() == P, "derived subgroup of order p");
  auto census = order_census(rec.group);
  check(rec, census.rbegin()->first == (sq ? P * P : P), sq ? "exponent p^2" : "exponent p");
  return rec;
}

ConstructionRecord sym_alt(unsigned n, bool alternating) {
  if (n < 2 || n > 7) fail(ErrorKind::InvalidParameter, "sym_alt: degree must be in 2..7");
  std::vector<Permutation> gens;
  auto cycle = [&](unsigned from) {
    std::vector<Point> c;
    for (unsigned i = from; i < n; ++i) c.push_back(static_cast<Point>(i));
    return c;
  };
  if (!alternating) {
    gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
    gens.push_back(Permutation::from_cycles(n, {cycle(0)}));
  } else if (n >= 3) {
    gens.push_back(Permutation::from_cycles(n, {{0, 1, 2}}));
    if (n > 3) gens.push_back(Permutation::from_cycles(n, {cycle(n % 2 == 1 ? 0 : 1)}));
  }
  std::uint64_t order = 1;
  for (unsigned i = 2; i <= n; ++i) order *= i;
  if (alternating) order /= 2;
  std::string label = "NotX";
  if (order <= 3) label = "1.1";
  else if (n == 3) label = "2.1.1";
  else if (n == 4) label = "3.1.1";
  else if (alternating && (n == 5 || n == 6)) label = "4.2";
  ConstructionRecord rec{"sym_alt", json{{"n", n}, {"alternating", alternating}}, label,
                         Group::from_generators(n, gens), {}};
  check(rec, rec.group.order() == order, alternating ? "order n!/2" : "order n!");
  return rec;
}

ConstructionRecord metacyclic(std::uint64_t m, std::uint64_t n, std::uint64_t u) {
  if (m < 1 || n < 1) fail(ErrorKind::InvalidParameter, "metacyclic: m, n must be positive");
  if (!is_unit_mod(u, m)) fail(ErrorKind::InvalidParameter, "metacyclic: gcd(u, m) must be 1");
  if (nt::pow_mod(u % m, n, m) != 1 % m)
    fail(ErrorKind::InvalidParameter, "metacyclic: u^n must be 1 mod m");
  if (m * n > kMaxGroupOrder) fail(ErrorKind::CapExceeded, "metacyclic: order exceeds cap");
  ConstructionRecord rec{"metacyclic", json{{"m", m}, {"n", n}, {"u", u}}, metacyclic_case(m, n, u),
                         realize_metacyclic(m, n, u % m, 0), {}};
  check(rec, rec.group.order() == m * n, "order m*n");
  return rec;
}

ConstructionRecord quaternion_metacyclic(std::uint64_t m, std::uint64_t qorder) {
  if (m < 3 || m % 2 == 0) fail(ErrorKind::InvalidParameter, "quaternion_metacyclic: m must be odd >= 3");
  if (qorder < 8 || !nt::is_power_of(qorder, 2))
    fail(ErrorKind::InvalidParameter, "quaternion_metacyclic: quaternion order must be 2^n >= 8");
  const std::uint64_t half = qorder / 2, M = m * half;
  if (2 * M > kMaxRegularDegree) fail(ErrorKind::CapExceeded, "quaternion_metacyclic: order exceeds cap");
  // <a> = C x D_0 cyclic of order m * 2^(n-1); y inverts a and y^2 is the involution
  ConstructionRecord rec{"quaternion_metacyclic", json{{"m", m}, {"quaternion_order", qorder}}, "2.1.2",
                         realize_metacyclic(M, 2, M - 1, M / 2), {}};
  const Group& G = rec.group;
  Elem a = G.generators()[0];
  auto C = closure(G, {G.pow(a, static_cast<long long>(half))});
  auto D0 = closure(G, {G.pow(a, static_cast<long long>(m))});
  check(rec, G.order() == 2 * M, "order m * 2^n");
  check(rec, centralizer(G, C) == join(G, C, D0), "C_G(C) = C x D_0");
  auto dih = realize_metacyclic(m, 2, m - 1, 0);
  check(rec, fingerprint(quotient(G, D0)) == fingerprint(dih), "G/D_0 dihedral (fingerprint match)");
  return rec;
}

}  // namespace xgroup
