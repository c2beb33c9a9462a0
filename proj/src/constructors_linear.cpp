#include <algorithm>
#include <set>

#include "construct_util.hpp"
#include "xgroup/constructors.hpp"
#include "xgroup/engine.hpp"
#include "xgroup/errors.hpp"
#include "xgroup/fingerprint.hpp"
#include "xgroup/normal_form.hpp"
#include "xgroup/numtheory.hpp"

namespace xgroup {

namespace {

using json = nlohmann::ordered_json;
using detail::check;
using detail::order_census;
using detail::require;
using V = GaloisField::Value;

GaloisField field_for(std::uint32_t q) {
  auto p = static_cast<std::uint32_t>(nt::prime_power_base(q));
  if (p == 0) fail(ErrorKind::InvalidParameter, "q must be a prime power");
  std::uint32_t k = 0;
  for (std::uint32_t x = q; x > 1; x /= p) ++k;
  return GaloisField(p, k);
}

std::vector<Mat2> sl2_generators(const GaloisField& F) {
  std::vector<Mat2> gens;
  V basis = 1;
  for (std::uint32_t i = 0; i < F.degree(); ++i, basis *= F.characteristic())
    gens.push_back({1, basis, 0, 1});
  gens.push_back({0, F.neg(1), 1, 0});
  return gens;
}

json matrix_json(const Mat2& m) { return json::array({{m[0], m[1]}, {m[2], m[3]}}); }

json matrices_json(const std::vector<Mat2>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(matrix_json(m));
  return out;
}

std::set<unsigned> order_set(const Group& G) {
  return {G.element_orders().begin(), G.element_orders().end()};
}

// smallest gamma in GF(p^2) with gamma^(p+1) = target
V norm_preimage(const GaloisField& F2, V target) {
  const auto p = F2.characteristic();
  for (V g = 1; g < F2.size(); ++g)
    if (F2.pow(g, p + 1) == target) return g;
  fail(ErrorKind::SearchFailed, "no norm preimage");
}

// element of order k in GF(p), k | p - 1
V prime_field_element(std::uint32_t p, std::uint64_t k) {
  auto g = nt::smallest_primitive_root(p);
  return static_cast<V>(nt::pow_mod(g, (p - 1) / k, p));
}

// matrix of multiplication by a norm-one element of order k, k | p + 1
Mat2 nonsplit_torus_element(const GaloisField& F2, std::uint64_t k) {
  const auto p = F2.characteristic();
  V beta = F2.pow(F2.primitive_element(), (p - 1) * ((p + 1) / k));
  return multiplication_matrix(F2, beta);
}

// z -> z^p * gamma with N(gamma) = target: inverts the nonsplit torus and
// squares to the scalar `target`
Mat2 semilinear_inverter(const GaloisField& F2, const GaloisField& Fp, V target) {
  return mat_mul(Fp, frobenius_matrix(F2), multiplication_matrix(F2, norm_preimage(F2, target)));
}

bool fixed_point_free(const GaloisField& F, const std::vector<Mat2>& elements) {
  for (const auto& m : elements) {
    if (m == mat_identity()) continue;
    if (mat_det(F, mat_add(F, m, {F.neg(1), 0, 0, F.neg(1)})) == 0) return false;
  }
  return true;
}

// no nontrivial element of L commutes with a nontrivial element of N
bool acts_fixed_point_freely(const Group& G, const Subgroup& N, const Subgroup& L) {
  for (auto l : L.members()) {
    if (l == Group::identity) continue;
    for (auto n : N.members())
      if (n != Group::identity && G.commute(l, n)) return false;
  }
  return true;
}

}  // namespace

// ------------------------------------------------------------ matrix groups

ConstructionRecord matrix_group(MatrixKind kind, std::uint32_t q) {
  static const char* names[] = {"GL2", "SL2", "PSL2", "PGL2"};
  const char* name = names[static_cast<int>(kind)];
  auto F = field_for(q);
  const std::uint64_t Q = q;
  const std::uint64_t sl = Q * (Q * Q - 1);
  const std::uint64_t g2 = nt::gcd(2, Q - 1);
  std::uint64_t order = kind == MatrixKind::SL2 ? sl
                        : kind == MatrixKind::PSL2 ? sl / g2
                        : kind == MatrixKind::GL2  ? sl * (Q - 1)
                                                   : sl;
  if (order > kMaxGroupOrder)
    fail(ErrorKind::CapExceeded, std::string(name) + "(" + std::to_string(q) + ") has order " +
                                     std::to_string(order) + " above the cap");
  auto gens = sl2_generators(F);
  if (kind == MatrixKind::GL2 || kind == MatrixKind::PGL2) gens.push_back({F.primitive_element(), 0, 0, 1});
  Group G = [&] {
    if (kind == MatrixKind::SL2 || kind == MatrixKind::GL2) {
      auto act = linear_action(F, gens);
      return Group::from_generators(act.points.size(), act.generators);
    }
    std::vector<Permutation> perms;
    for (const auto& g : gens) perms.push_back(projective_permutation(F, g));
    return Group::from_generators(Q + 1, perms);
  }();
  const bool fermat = nt::is_fermat_prime(q), mersenne = nt::is_mersenne_prime(q);
  std::string label = "NotX";
  if (q == 2) label = "2.1.1";
  else if (kind == MatrixKind::SL2) label = q == 3 ? "3.2.1" : q == 4 ? "4.2" : fermat ? "4.1" : "NotX";
  else if (kind == MatrixKind::PSL2) label = q == 3 ? "3.1.1" : (q == 4 || q == 9 || fermat || mersenne) ? "4.2" : "NotX";
  else if (kind == MatrixKind::PGL2) label = q == 3 ? "3.1.1" : q == 4 ? "4.2" : "NotX";
  ConstructionRecord rec{"matrix_group", json{{"kind", name}, {"q", q}}, label, std::move(G), {}};
  check(rec, rec.group.order() == order, "order formula");
  if (kind == MatrixKind::SL2)
    check(rec, center(rec.group).size() == g2, "center of order gcd(2, q-1)");
  rec.details["matrices"] = matrices_json(gens);
  return rec;
}

ConstructionRecord sl2p_dot2(std::uint32_t p) {
  if (!(p == 3 || nt::is_fermat_prime(p)))
    fail(ErrorKind::InvalidParameter, "sl2p_dot2: p must be 3 or a Fermat prime");
  const std::uint64_t P = p;
  const std::uint64_t order = 2 * P * (P * P - 1);
  if (order > kMaxGroupOrder) fail(ErrorKind::CapExceeded, "sl2p_dot2: order exceeds cap");
  GaloisField F(p, 2);
  V nu = 0;
  for (V x = 2; x < p && nu == 0; ++x)
    if (nt::pow_mod(x, (p - 1) / 2, p) == p - 1) nu = x;
  ensure(nu != 0, "no non-square mod p");
  auto mu = F.sqrt(F.inv(nu));
  ensure(mu >= 0, "no square root of nu^-1 in GF(p^2)");
  const V m = static_cast<V>(mu);
  Mat2 outer{F.mul(m, nu), 0, 0, m};
  std::vector<Mat2> gens{{1, 1, 0, 1}, {0, F.neg(1), 1, 0}, outer};
  auto act = linear_action(F, gens);
  ConstructionRecord rec{"sl2p_dot2", json{{"p", p}}, p == 3 ? "3.2.1" : "4.1",
                         Group::from_generators(act.points.size(), act.generators), {}};
  const Group& G = rec.group;
  check(rec, G.order() == order, "order 2|SL_2(p)|");
  auto census = order_census(G);
  check(rec, census.count(2) && census.at(2) == 1, "no involution outside SL_2(p)");
  unsigned max2 = 1;
  for (auto [o, c] : census)
    if (nt::is_power_of(o, 2)) max2 = std::max(max2, o);
  check(rec, max2 < nt::p_part(order, 2), "Sylow 2-subgroup quaternion (unique involution, not cyclic)");
  rec.details["matrices"] = matrices_json(gens);
  return rec;
}

ConstructionRecord m10() {
  GaloisField F(3, 2);
  std::vector<Permutation> psl;
  for (const auto& g : sl2_generators(F)) psl.push_back(projective_permutation(F, g));
  const Mat2 delta{F.primitive_element(), 0, 0, 1};
  const Permutation extra[] = {projective_permutation(F, delta),
                               projective_permutation(F, mat_identity(), 1),
                               projective_permutation(F, delta, 1)};
  const std::set<unsigned> target{1, 2, 3, 4, 5, 8};
  std::vector<std::set<unsigned>> sets;
  int chosen = -1;
  for (int i = 0; i < 3; ++i) {
    auto gens = psl;
    gens.push_back(extra[i]);
    auto H = Group::from_generators(10, gens);
    ensure(H.order() == 720, "m10: overgroup of PSL_2(9) has wrong order");
    sets.push_back(order_set(H));
    if (sets.back() == target) {
      if (chosen >= 0) fail(ErrorKind::InternalInvariantViolation, "m10: identification is ambiguous");
      chosen = i;
    }
  }
  if (chosen < 0) fail(ErrorKind::InternalInvariantViolation, "m10: no candidate matches");
  auto gens = psl;
  gens.push_back(extra[chosen]);
  ConstructionRecord rec{"m10", json::object(), "4.2", Group::from_generators(10, gens), {}};
  check(rec, sets[0] != sets[1] && sets[1] != sets[2] && sets[0] != sets[2],
        "index-2 overgroups of PSL_2(9) have distinct element-order sets");
  check(rec, rec.group.order() == 720, "order 720");
  check(rec, derived_subgroup(rec.group).size() == 360, "derived subgroup of order 360");
  return rec;
}

// ------------------------------------------------------------ affine groups

std::vector<Mat2> complement_generators(std::uint32_t p, const Complement& c) {
  if (!nt::is_prime(p) || p == 2) fail(ErrorKind::InvalidParameter, "affine: p must be an odd prime");
  GaloisField Fp(p);
  const std::uint64_t P = p;
  const V minus1 = Fp.neg(1);
  auto quaternion_units = [&] {
    // i^2 = j^2 = -1, ij = -ji
    V a = 0, b = 0;
    bool found = false;
    for (V x = 0; x < p && !found; ++x) {
      auto y = Fp.sqrt(Fp.sub(minus1, Fp.mul(x, x)));
      if (y >= 0) {
        a = x;
        b = static_cast<V>(y);
        found = true;
      }
    }
    ensure(found, "no solution of a^2 + b^2 = -1");
    Mat2 i{0, minus1, 1, 0}, j{a, b, b, Fp.neg(a)};
    return std::pair{i, j};
  };
  switch (c.kind) {
    case ComplementKind::Cyclic: {
      require(c.m >= 2 && (P * P - 1) % c.m == 0 && (P - 1) % c.m != 0, "m | p^2 - 1 and m ∤ p - 1");
      GaloisField F2(p, 2);
      V w = F2.primitive_element();
      V T = F2.add(w, F2.frobenius(w)), N = F2.mul(w, F2.frobenius(w));
      Mat2 companion{0, 1, Fp.neg(N), T};
      return {mat_pow(Fp, companion, (P * P - 1) / c.m)};
    }
    case ComplementKind::Quaternion: {
      require(c.two_power >= 8 && nt::is_power_of(c.two_power, 2), "quaternion order 2^n with n >= 3");
      require((P * P - 1) % c.two_power == 0, "2^n | p^2 - 1");
      const std::uint64_t half = c.two_power / 2;
      if ((P - 1) % half == 0) {
        V t = prime_field_element(p, half);
        return {{t, 0, 0, Fp.inv(t)}, {0, 1, minus1, 0}};
      }
      GaloisField F2(p, 2);
      return {nonsplit_torus_element(F2, half), semilinear_inverter(F2, Fp, minus1)};
    }
    case ComplementKind::Case212: {
      require(c.m >= 3 && c.m % 2 == 1, "|C| odd");
      require(c.two_power >= 8 && nt::is_power_of(c.two_power, 2), "D quaternion of order 2^n, n >= 3");
      const bool eps_plus = p % 4 == 1;
      const std::uint64_t pe = eps_plus ? P - 1 : P + 1;
      const std::string eps = eps_plus ? "p - 1 (p ≡ 1 (mod 4))" : "p + 1 (p ≡ -1 (mod 4))";
      require(pe % c.m == 0, "|C| divides p - ε where p ≡ ε (mod 4), here " + eps);
      const std::uint64_t M = c.m * (c.two_power / 2);
      require(pe % M == 0, "|C|·|D_0| divides p - ε, here " + eps);
      if (eps_plus) {
        V t = prime_field_element(p, M);
        return {{t, 0, 0, Fp.inv(t)}, {0, 1, minus1, 0}};
      }
      GaloisField F2(p, 2);
      return {nonsplit_torus_element(F2, M), semilinear_inverter(F2, Fp, minus1)};
    }
    case ComplementKind::Case213: {
      require(c.m >= 3 && c.m % 2 == 1, "|C| odd");
      require(c.two_power >= 4 && nt::is_power_of(c.two_power, 2), "D cyclic of order 2^n, n >= 2");
      require((P - 1) % c.m == 0 || (P + 1) % c.m == 0, "|C| odd dividing p - 1 or p + 1");
      const std::uint64_t z = c.two_power / 2;
      require((P - 1) % z == 0, "|C_D(C)| divides p - 1");
      V lambda = prime_field_element(p, z);
      if ((P - 1) % c.m == 0) {
        V t = prime_field_element(p, c.m);
        return {{t, 0, 0, Fp.inv(t)}, {0, 1, lambda, 0}};
      }
      GaloisField F2(p, 2);
      return {nonsplit_torus_element(F2, c.m), semilinear_inverter(F2, Fp, lambda)};
    }
    case ComplementKind::SL2_3:
    case ComplementKind::SL2_3_dot2: {
      require(p >= 5, "p ≥ 5");
      if (c.kind == ComplementKind::SL2_3_dot2) require(p % 8 == 1 || p % 8 == 7, "p ≡ ±1 (mod 8)");
      auto [i, j] = quaternion_units();
      Mat2 k = mat_mul(Fp, i, j);
      const V half = Fp.inv(2);
      Mat2 sum = mat_add(Fp, mat_add(Fp, mat_identity(), i), mat_add(Fp, j, k));
      Mat2 omega = mat_scale(Fp, Fp.neg(half), sum);
      ensure(mat_order(Fp, omega) == 3, "omega has order 3");
      std::vector<Mat2> gens{i, j, omega};
      if (c.kind == ComplementKind::SL2_3_dot2) {
        auto r = Fp.sqrt(2);
        ensure(r >= 0, "2 is a square");
        gens.push_back(mat_scale(Fp, Fp.inv(static_cast<V>(r)), mat_add(Fp, mat_identity(), i)));
      }
      return gens;
    }
    case ComplementKind::SL2_5: {
      require(p != 5, "p ≠ 5");
      require((P * P - 1) % 60 == 0, "60 | p^2 - 1");
      auto [i, j] = quaternion_units();
      Mat2 k = mat_mul(Fp, i, j);
      const V half = Fp.inv(2);
      Mat2 s = mat_scale(Fp, half, mat_add(Fp, mat_add(Fp, mat_identity(), i), mat_add(Fp, j, k)));
      // candidates (phi + phi^-1 i + j) / 2 over both roots of x^2 - x - 1
      for (V phi = 0; phi < p; ++phi) {
        if (Fp.sub(Fp.mul(phi, phi), Fp.add(phi, 1)) != 0) continue;
        for (V sign : {V{1}, minus1}) {
          Mat2 t = mat_add(Fp, mat_add(Fp, mat_scale(Fp, phi, mat_identity()),
                                       mat_scale(Fp, Fp.inv(phi), i)),
                           mat_scale(Fp, sign, j));
          t = mat_scale(Fp, half, t);
          auto elems = matrix_closure(Fp, {s, t}, 120);
          if (elems.size() != 120) continue;
          std::vector<Mat2> gens{s, t};
          auto act = linear_action(Fp, gens);
          auto H = Group::from_generators(act.points.size(), act.generators);
          if (derived_subgroup(H).size() == 120) return gens;
        }
      }
      fail(ErrorKind::SearchFailed, "affine: no SL_2(5) found in GL_2(" + std::to_string(p) + ")");
    }
  }
  fail(ErrorKind::InvalidParameter, "affine: unknown complement");
}

ConstructionRecord affine_frobenius(std::uint32_t p, const Complement& c) {
  auto mats = complement_generators(p, c);
  GaloisField Fp(p);
  const std::uint64_t P = p;
  auto elems = matrix_closure(Fp, mats, kMaxGroupOrder);
  const std::uint64_t order = P * P * elems.size();
  if (elems.empty() || order > kMaxGroupOrder) fail(ErrorKind::CapExceeded, "affine: order exceeds cap");
  const std::size_t deg = P * P;
  auto vec_perm = [&](auto f) {
    std::vector<Point> img(deg);
    for (V y = 0; y < p; ++y)
      for (V x = 0; x < p; ++x) {
        Vec2 w = f(Vec2{x, y});
        img[x + p * y] = static_cast<Point>(w[0] + p * w[1]);
      }
    return Permutation(std::move(img));
  };
  std::vector<Permutation> gens{vec_perm([&](Vec2 v) { return Vec2{Fp.add(v[0], 1), v[1]}; }),
                                vec_perm([&](Vec2 v) { return Vec2{v[0], Fp.add(v[1], 1)}; })};
  for (const auto& m : mats) gens.push_back(vec_perm([&](Vec2 v) { return apply(Fp, v, m); }));
  static const char* labels[] = {"3.1.2.1", "3.1.2.2", "3.1.2.3", "3.1.2.4",
                                 "3.1.2.5", "3.1.2.6", "3.1.2.7"};
  ConstructionRecord rec{"affine", json{{"p", p}, {"complement", to_string(c)}},
                         labels[static_cast<int>(c.kind)], Group::from_generators(deg, gens), {}};
  check(rec, rec.group.order() == order, "order p^2 |G_0|");
  const std::size_t g0 = elems.size();
  const std::size_t expected_g0 = c.kind == ComplementKind::Cyclic        ? c.m
                                  : c.kind == ComplementKind::Quaternion  ? c.two_power
                                  : c.kind == ComplementKind::Case212     ? c.m * c.two_power
                                  : c.kind == ComplementKind::Case213     ? c.m * c.two_power
                                  : c.kind == ComplementKind::SL2_3       ? 24
                                  : c.kind == ComplementKind::SL2_3_dot2  ? 48
                                                                          : 120;
  check(rec, g0 == expected_g0, "|G_0| = " + std::to_string(expected_g0));
  check(rec, fixed_point_free(Fp, elems), "G_0 acts fixed-point-freely on GF(p)^2");
  rec.details["matrices"] = matrices_json(mats);
  return rec;
}

// ------------------------------------------------------------ extensions of p^(1+2)

ConstructionRecord extraspecial_frobenius(std::uint32_t p, std::uint32_t d, std::uint32_t s) {
  if (!nt::is_prime(p) || p == 2) fail(ErrorKind::InvalidParameter, "extraspecial_frobenius: p must be an odd prime");
  require(d > 1 && d % 2 == 1 && (p - 1) % d == 0, "d odd, d > 1, d | p - 1");
  const std::uint64_t P = p;
  const std::uint64_t order = P * P * P * d;
  if (order > kMaxGroupOrder) fail(ErrorKind::CapExceeded, "extraspecial_frobenius: order exceeds cap");
  const std::uint64_t zeta = prime_field_element(p, d);
  for (std::uint64_t k = 1; k < d; ++k) {
    bool ok = nt::pow_mod(zeta, k * s, P) != 1 && nt::pow_mod(zeta, k * (s + 1), P) != 1;
    require(ok, "ζ^(ks) ≠ 1 and ζ^(k(s+1)) ≠ 1 for 1 ≤ k < d");
  }
  const std::uint64_t zs = nt::pow_mod(zeta, s, P), zs1 = (zs * zeta) % P;
  auto N = heisenberg_normal_form(p, false);
  auto phi = [P, zeta, zs, zs1](std::uint32_t x) {
    std::uint64_t a = x % P, b = (x / P) % P, c = x / (P * P);
    return static_cast<std::uint32_t>((a * zeta) % P + P * ((b * zs) % P) + P * P * ((c * zs1) % P));
  };
  auto A = semidirect_cyclic(N, d, phi);
  std::vector<std::uint32_t> sub;
  for (std::uint32_t t = 0; t < d; ++t)
    for (std::uint32_t b = 0; b < p; ++b) sub.push_back(static_cast<std::uint32_t>(b * P + P * P * P * t));
  const auto kgen = static_cast<std::uint32_t>(P * P * P);
  ConstructionRecord rec{"extraspecial_frobenius", json{{"p", p}, {"d", d}, {"s", s}}, "2.2",
                         coset_group(A, {1u, p, kgen}, sub, order), {}};
  const Group& G = rec.group;
  auto gens = G.generators();
  auto K = closure(G, {gens[0], gens[1]});
  auto L = closure(G, {gens[2]});
  check(rec, G.order() == order, "order p^3 d");
  check(rec, K.size() == P * P * P && is_normal(G, K), "normal kernel of order p^3");
  check(rec, acts_fixed_point_freely(G, K, L), "complement acts fixed-point-freely (Frobenius)");
  rec.details["zeta"] = zeta;
  return rec;
}

ConstructionRecord heisenberg_extension(std::uint32_t p, std::uint32_t k) {
  if (!nt::is_prime(p) || p == 2) fail(ErrorKind::InvalidParameter, "heisenberg_extension: p must be an odd prime");
  require(k > 1 && k % 2 == 1 && (p + 1) % k == 0, "k odd, k > 1, k | p + 1");
  const std::uint64_t P = p;
  const std::uint64_t order = P * P * P * k;
  if (order > kMaxGroupOrder) fail(ErrorKind::CapExceeded, "heisenberg_extension: order exceeds cap");
  GaloisField F2(p, 2), Fp(p);
  V beta = F2.pow(F2.primitive_element(), (P - 1) * ((P + 1) / k));
  V T = F2.add(beta, F2.frobenius(beta));
  ensure(T < p, "trace lies in GF(p)");
  const Mat2 M{0, Fp.neg(1), 1, T};
  bool irreducible = true;
  for (V x = 0; x < p; ++x)
    if (Fp.add(Fp.sub(Fp.mul(x, x), Fp.mul(T, x)), 1) == 0) irreducible = false;
  auto N = heisenberg_normal_form(p, true);
  auto phi = [P, M](std::uint32_t x) {
    std::uint64_t a = x % P, b = (x / P) % P, c = x / (P * P);
    std::uint64_t na = (a * M[0] + b * M[2]) % P, nb = (a * M[1] + b * M[3]) % P;
    return static_cast<std::uint32_t>(na + P * nb + P * P * c);
  };
  auto A = semidirect_cyclic(N, k, phi);
  std::vector<std::uint32_t> sub;
  for (std::uint32_t t = 0; t < k; ++t) sub.push_back(static_cast<std::uint32_t>(P * P * P * t));
  const auto kgen = static_cast<std::uint32_t>(P * P * P);
  ConstructionRecord rec{"heisenberg_extension", json{{"p", p}, {"k", k}}, "3.2.2",
                         coset_group(A, {1u, p, kgen}, sub, order), {}};
  const Group& G = rec.group;
  check(rec, G.order() == order, "order p^3 k");
  check(rec, mat_order(Fp, M) == k, "acting matrix has order k");
  check(rec, irreducible, "action on N/Z(N) irreducible");
  auto gens = G.generators();
  Elem z = G.commutator(gens[0], gens[1]);
  check(rec, z != Group::identity && G.commute(z, gens[2]), "K centralizes Z(N)");
  std::vector<Mat2> powers;
  for (std::uint64_t j = 1; j < k; ++j) powers.push_back(mat_pow(Fp, M, j));
  check(rec, fixed_point_free(Fp, powers), "G/Z(N) Frobenius (K fixed-point-free on N/Z(N))");
  rec.details["matrix"] = matrix_json(M);
  return rec;
}

}  // namespace xgroup
