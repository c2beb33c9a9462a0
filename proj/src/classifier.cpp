#include "xgroup/classifier.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <sstream>

#include "xgroup/constructors.hpp"
#include "xgroup/engine.hpp"
#include "xgroup/errors.hpp"
#include "xgroup/fingerprint.hpp"
#include "xgroup/normal_form.hpp"
#include "xgroup/numtheory.hpp"

namespace xgroup {

namespace {

using json = nlohmann::ordered_json;

// Fingerprints of named groups, built once from the constructors.
const Fingerprint& reference(const std::string& key, const std::function<Group()>& build) {
  static std::mutex mu;
  static std::map<std::string, Fingerprint> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, fingerprint(build())).first;
  return it->second;
}

const Fingerprint& ref_matrix(MatrixKind kind, std::uint32_t q) {
  const char* name = kind == MatrixKind::SL2 ? "SL2" : "PSL2";
  return reference(std::string(name) + "(" + std::to_string(q) + ")",
                   [&] { return matrix_group(kind, q).group; });
}

const Fingerprint& ref_sym_alt(unsigned n, bool alt) {
  return reference((alt ? "Alt(" : "Sym(") + std::to_string(n) + ")",
                   [&] { return sym_alt(n, alt).group; });
}

const Fingerprint& ref_two_group(TwoGroupKind kind, std::uint64_t order) {
  return reference("two_group/" + std::to_string(static_cast<int>(kind)) + "/" + std::to_string(order),
                   [&] { return two_group(kind, order).group; });
}

const Fingerprint& ref_dihedral(std::uint64_t m) {
  return reference("Dih(" + std::to_string(2 * m) + ")", [&] { return metacyclic(m, 2, m - 1).group; });
}

std::string str(std::uint64_t x) { return std::to_string(x); }

bool subgroup_is_cyclic(const Group& G, const Subgroup& H) { return is_cyclic(G, H); }

bool unique_involution(const Group& G) {
  std::size_t inv = 0;
  for (auto o : G.element_orders()) inv += (o == 2);
  return inv == 1;
}

// Sylow 2-subgroup is generalized quaternion: unique involution, not cyclic.
bool quaternion_sylow2(const Group& G) {
  if (!unique_involution(G)) return false;
  unsigned max2 = 1;
  for (auto o : G.element_orders())
    if (nt::is_power_of(o, 2)) max2 = std::max(max2, o);
  return max2 < nt::p_part(G.order(), 2);
}

unsigned exponent_of(const Group& G, const Subgroup& H) {
  unsigned e = 1;
  for (auto x : H.members()) e = static_cast<unsigned>(nt::lcm(e, G.element_order(x)));
  return e;
}

// O_{pi}: join of the p-cores over the primes accepted by `keep`.
Subgroup hall_core(const Group& G, const std::function<bool(std::uint64_t)>& keep) {
  Subgroup H = Subgroup::trivial(G);
  for (auto p : nt::prime_divisors(G.order()))
    if (keep(p)) H = join(G, H, p_core(G, p));
  return H;
}

struct Ctx {
  const Group& G;
  Fingerprint fp;
  TheoremCase tc;
  std::optional<std::optional<FrobeniusStructure>> frob;

  explicit Ctx(const Group& g) : G(g), fp(fingerprint(g)) {}

  void fact(const std::string& f, bool ok = true) { tc.evidence.push_back({f, ok}); }
  bool accept(const std::string& label) {
    tc.label = label;
    return true;
  }
  const std::optional<FrobeniusStructure>& frobenius() {
    if (!frob) frob = frobenius_structure(G);
    return *frob;
  }
};

bool decide(Ctx& c);

// ------------------------------------------------------------ nilpotent

bool nilpotent_case(Ctx& c) {
  const Group& G = c.G;
  const std::uint64_t n = G.order();
  const auto whole = Subgroup::whole(G);
  if (is_cyclic(G, whole)) {
    c.tc.parameters["order"] = n;
    c.fact("cyclic of order " + str(n));
    return c.accept("1.1");
  }
  c.fact("nilpotent, not cyclic");
  const std::uint64_t p = nt::prime_power_base(n);
  if (p == 0) {
    c.fact("order " + str(n) + " is not a prime power, so a non-cyclic direct factor centralizes another", false);
    return false;
  }
  if (c.fp.center_order == n) {
    if (n == p * p) {
      c.tc.parameters["p"] = p;
      c.fact("elementary abelian of order " + str(p) + "^2");
      return c.accept("1.2");
    }
    c.fact("abelian of order " + str(n) + ", not cyclic and not of order p^2", false);
    return false;
  }
  if (p != 2) {
    if (n == p * p * p && c.fp.center_order == p && c.fp.derived_order == p) {
      const bool exp_p = c.fp.element_order_multiset.rbegin()->first == p;
      c.tc.parameters["p"] = p;
      c.tc.parameters["exponent"] = exp_p ? "p" : "p_squared";
      c.fact("extraspecial of order " + str(p) + "^3, exponent " + (exp_p ? str(p) : str(p * p)));
      return c.accept("1.3");
    }
    c.fact("odd p-group that is not extraspecial of order p^3", false);
    return false;
  }
  struct Kind {
    TwoGroupKind kind;
    const char* name;
    std::uint64_t min;
  };
  for (auto k : {Kind{TwoGroupKind::Dihedral, "dihedral", 8}, Kind{TwoGroupKind::Semidihedral, "semidihedral", 16},
                 Kind{TwoGroupKind::Quaternion, "quaternion", 8}}) {
    if (n < k.min || n > kMaxRegularDegree) continue;
    if (ref_two_group(k.kind, n) == c.fp) {
      c.tc.parameters["kind"] = k.name;
      c.tc.parameters["order"] = n;
      c.fact(std::string("2-group, ") + k.name + " fingerprint match (order " + str(n) + ")");
      return c.accept("1.4");
    }
  }
  c.fact("2-group that is not dihedral, semidihedral or quaternion", false);
  return false;
}

// ------------------------------------------------------------ supersoluble

bool supersoluble_case(Ctx& c) {
  const Group& G = c.G;
  const std::uint64_t n = G.order();
  const auto primes = nt::prime_divisors(n);
  const std::uint64_t p = primes.back(), q = primes.front();
  c.fact("supersoluble, not nilpotent");
  const auto P = sylow(G, p);
  if (!is_normal(G, P)) {
    c.fact("Sylow " + str(p) + "-subgroup for the largest prime is not normal", false);
    return false;
  }
  c.fact("Sylow " + str(p) + "-subgroup P (largest prime) is normal, |P| = " + str(P.size()));
  if (subgroup_is_cyclic(G, P)) {
    c.fact("P is cyclic");
    // (2.1.1)
    if (const auto& fs = c.frobenius(); fs && subgroup_is_cyclic(G, fs->kernel) &&
                                        subgroup_is_cyclic(G, fs->complement)) {
      c.tc.parameters["C"] = fs->kernel.size();
      c.tc.parameters["D"] = fs->complement.size();
      c.fact("Frobenius with cyclic kernel C of order " + str(fs->kernel.size()) +
             " and cyclic complement D of order " + str(fs->complement.size()));
      return c.accept("2.1.1");
    }
    // (2.1.2)
    if (q == 2) {
      const auto D = sylow(G, 2);
      const auto C = hall_core(G, [](std::uint64_t r) { return r != 2; });
      const Group Dg = subgroup_as_group(G, D);
      if (C.size() * D.size() == n && subgroup_is_cyclic(G, C) && D.size() >= 8 && quaternion_sylow2(Dg)) {
        const auto CGC = centralizer(G, C);
        const auto D0 = intersection(G, D, CGC);
        if (D0.size() * 2 == D.size() && subgroup_is_cyclic(G, D0) && CGC == join(G, C, D0) && C.size() >= 3 &&
            fingerprint(quotient(G, D0)) == ref_dihedral(C.size())) {
          c.tc.parameters["C"] = C.size();
          c.tc.parameters["D"] = D.size();
          c.fact("C normal cyclic of odd order " + str(C.size()) + ", D quaternion of order " + str(D.size()));
          c.fact("C_G(C) = C x D_0 with D_0 cyclic of index 2 in D");
          c.fact("G/D_0 dihedral of order " + str(2 * C.size()) + " (fingerprint match)");
          return c.accept("2.1.2");
        }
      }
    }
    // (2.1.3)
    const auto D = sylow(G, q);
    const auto C = hall_core(G, [q](std::uint64_t r) { return r != q; });
    const auto Z = center(G);
    if (subgroup_is_cyclic(G, D) && C.size() * D.size() == n && subgroup_is_cyclic(G, C) && Z.size() > 1 &&
        Z.size() < D.size() && Z.subset_of(D) && G.order() / Z.size() <= kDenseTableThreshold) {
      const Group GZ = quotient(G, Z);
      if (frobenius_structure(GZ)) {
        c.tc.parameters["q"] = q;
        c.tc.parameters["C"] = C.size();
        c.tc.parameters["D"] = D.size();
        c.tc.parameters["Z"] = Z.size();
        c.fact("D cyclic " + str(q) + "-group of order " + str(D.size()) + ", C cyclic " + str(q) +
               "'-group of order " + str(C.size()));
        c.fact("1 < Z(G) < D with |Z(G)| = " + str(Z.size()));
        c.fact("G/Z(G) is a Frobenius group");
        return c.accept("2.1.3");
      }
    }
    c.fact("no split C x| D of type (2.1.1), (2.1.2) or (2.1.3)", false);
    return false;
  }
  // (2.2)
  const auto ZP = intersection(G, P, centralizer(G, P));
  const auto DP = derived_subgroup(G, P);
  if (p > 2 && P.size() == p * p * p && ZP.size() == p && DP.size() == p) {
    c.fact("P extraspecial of order " + str(p) + "^3");
    const auto& fs = c.frobenius();
    if (fs && fs->kernel == P && subgroup_is_cyclic(G, fs->complement)) {
      const std::uint64_t d = fs->complement.size();
      if (d % 2 == 1 && (p - 1) % d == 0) {
        c.tc.parameters["p"] = p;
        c.tc.parameters["d"] = d;
        c.fact("Frobenius with kernel P and cyclic complement of odd order " + str(d) + " dividing p - 1");
        return c.accept("2.2");
      }
    }
    c.fact("not Frobenius with a cyclic odd complement dividing p - 1", false);
    return false;
  }
  c.fact("P neither cyclic nor extraspecial of order p^3", false);
  return false;
}

// ------------------------------------------------------------ F* nilpotent

bool minimal_normal(const Group& G, const Subgroup& N) {
  for (auto x : N.members()) {
    if (x == Group::identity) continue;
    const Elem seed[] = {x};
    if (!(normal_closure(G, seed) == N)) return false;
  }
  return true;
}

bool elementary_case(Ctx& c, const Subgroup& N, std::uint64_t p) {
  const Group& G = c.G;
  if (!minimal_normal(G, N)) {
    c.fact("F* is not a minimal normal subgroup", false);
    return false;
  }
  c.fact("F* elementary abelian of order " + str(p) + "^2 and minimal normal");
  if (p == 2) {
    for (bool alt : {false, true})
      if (c.fp == ref_sym_alt(4, alt)) {
        c.tc.parameters["group"] = alt ? "Alt(4)" : "Sym(4)";
        c.fact(std::string("G/F* of order ") + str(G.order() / 4) + ", fingerprint match " +
               (alt ? "Alt(4)" : "Sym(4)"));
        return c.accept("3.1.1");
      }
    c.fact("p = 2 but G is neither Sym(4) nor Alt(4)", false);
    return false;
  }
  const auto& fs = c.frobenius();
  if (!fs || !(fs->kernel == N)) {
    c.fact("G is not a Frobenius group with kernel F*", false);
    return false;
  }
  const Group G0 = subgroup_as_group(G, fs->complement);
  Ctx sub(G0);
  const bool ok = decide(sub);
  const std::uint64_t g0 = G0.order();
  c.fact("Frobenius with kernel F* and complement G_0 of order " + str(g0));
  if (!ok) {
    c.fact("G_0 matches no case", false);
    return false;
  }
  c.fact("G_0 classified as case " + sub.tc.label);
  c.tc.parameters["p"] = p;
  c.tc.parameters["G0_case"] = sub.tc.label;
  c.tc.parameters["G0_order"] = g0;
  const auto& sp = sub.tc.parameters;
  const std::string& L = sub.tc.label;
  if (L == "1.1") {
    if ((p * p - 1) % g0 == 0 && (p - 1) % g0 != 0) {
      c.fact("|G_0| = " + str(g0) + " divides p^2 - 1 but not p - 1");
      return c.accept("3.1.2.1");
    }
  } else if (L == "1.4" && sp["kind"] == "quaternion") {
    c.fact("G_0 quaternion");
    return c.accept("3.1.2.2");
  } else if (L == "2.1.2") {
    const std::int64_t eps = p % 4 == 1 ? 1 : -1;
    const std::uint64_t pe = eps == 1 ? p - 1 : p + 1;
    const std::uint64_t cc = sp["C"].get<std::uint64_t>();
    if (pe % cc == 0) {
      c.tc.parameters["epsilon"] = eps;
      c.fact("|C| = " + str(cc) + " divides p - ε with p ≡ ε (mod 4), ε = " + std::to_string(eps));
      return c.accept("3.1.2.3");
    }
  } else if (L == "2.1.3") {
    const std::uint64_t cc = sp["C"].get<std::uint64_t>(), dd = sp["D"].get<std::uint64_t>();
    const std::uint64_t zz = sp["Z"].get<std::uint64_t>();
    if (sp["q"] == 2 && zz * 2 == dd && cc % 2 == 1 && ((p - 1) % cc == 0 || (p + 1) % cc == 0)) {
      c.fact("D a 2-group with C_D(C) of index 2, |C| = " + str(cc) + " odd dividing p - 1 or p + 1");
      return c.accept("3.1.2.4");
    }
  } else if (L == "3.2.1" && g0 == 24) {
    c.fact("G_0 fingerprint match SL2(3)");
    return c.accept("3.1.2.5");
  } else if (L == "3.2.1" && g0 == 48) {
    if (p % 8 == 1 || p % 8 == 7) {
      c.fact("G_0 fingerprint match SL2(3).2 and p ≡ ±1 (mod 8)");
      return c.accept("3.1.2.6");
    }
  } else if (L == "4.1" && g0 == 120) {
    if ((p * p - 1) % 60 == 0) {
      c.fact("G_0 fingerprint match SL2(5) and 60 divides p^2 - 1");
      return c.accept("3.1.2.7");
    }
  }
  c.fact("G_0 and p violate the arithmetic conditions of (3.1.2)", false);
  return false;
}

bool extraspecial_case(Ctx& c, const Subgroup& N, std::uint64_t p) {
  const Group& G = c.G;
  const std::uint64_t n = G.order();
  c.fact("F* extraspecial of order " + str(p) + "^3");
  if (p == 2) {
    if (n == 24 && c.fp == ref_matrix(MatrixKind::SL2, 3)) {
      c.tc.parameters["group"] = "SL2(3)";
      c.fact("fingerprint match SL2(3)");
      return c.accept("3.2.1");
    }
    if (n == 48 && c.fp == reference("SL2(3).2", [] { return sl2p_dot2(3).group; })) {
      c.tc.parameters["group"] = "SL2(3).2";
      c.fact("fingerprint match SL2(3).2, quaternion Sylow 2-subgroups of order 16");
      return c.accept("3.2.1");
    }
    c.fact("F* = Q8 but G is neither SL2(3) nor SL2(3).2", false);
    return false;
  }
  if (exponent_of(G, N) != p) {
    c.fact("F* has exponent p^2", false);
    return false;
  }
  const std::uint64_t k = n / N.size();
  if (k % 2 == 0 || (p + 1) % k != 0) {
    c.fact("|G : F*| = " + str(k) + " is not an odd divisor of p + 1", false);
    return false;
  }
  Elem g = 0;
  for (Elem x = 0; x < n && g == 0; ++x)
    if (G.element_order(x) == k) g = x;
  if (g == 0) {
    c.fact("no cyclic complement of order " + str(k), false);
    return false;
  }
  const auto ZN = intersection(G, N, centralizer(G, N));
  for (auto z : ZN.members())
    if (!G.commute(z, g)) {
      c.fact("complement does not centralize Z(N)", false);
      return false;
    }
  // G/Z(N) Frobenius: no nontrivial power of g fixes a coset of Z(N) in N
  for (std::uint64_t j = 1; j < k; ++j) {
    const Elem h = G.pow(g, static_cast<long long>(j));
    for (auto x : N.members())
      if (!ZN.contains(x) && ZN.contains(G.commutator(x, h))) {
        c.fact("G/Z(N) is not a Frobenius group", false);
        return false;
      }
  }
  c.tc.parameters["p"] = p;
  c.tc.parameters["k"] = k;
  c.fact("N of exponent p, K cyclic of odd order " + str(k) + " dividing p + 1 centralizing Z(N)");
  c.fact("G/Z(N) is a Frobenius group");
  return c.accept("3.2.2");
}

// ------------------------------------------------------------ F* not nilpotent

bool quasisimple_case(Ctx& c, const GeneralizedFitting& gf) {
  const Group& G = c.G;
  const std::uint64_t n = G.order();
  if (gf.components.size() != 1) {
    c.fact(str(gf.components.size()) + " components", false);
    return false;
  }
  const auto& E = gf.components.front();
  if (is_simple(G)) {
    c.fact("G simple of order " + str(n));
    if (n == 60 && c.fp == ref_matrix(MatrixKind::PSL2, 5)) {
      c.tc.parameters["q"] = 5;
      c.fact("fingerprint match PSL2(5) (= SL2(4) = Alt(5)); 5 is a Fermat prime");
      return c.accept("4.2");
    }
    if (n == 360 && c.fp == ref_matrix(MatrixKind::PSL2, 9)) {
      c.tc.parameters["q"] = 9;
      c.fact("fingerprint match PSL2(9) (= Alt(6))");
      return c.accept("4.2");
    }
    for (std::uint64_t p = 7; p * (p * p - 1) / 2 <= n; ++p) {
      if (!nt::is_prime(p) || p * (p * p - 1) / 2 != n) continue;
      const bool fermat = nt::is_fermat_prime(p), mersenne = nt::is_mersenne_prime(p);
      if (!(fermat || mersenne)) continue;
      if (c.fp == ref_matrix(MatrixKind::PSL2, static_cast<std::uint32_t>(p))) {
        c.tc.parameters["q"] = p;
        c.fact("fingerprint match PSL2(" + str(p) + "); " + str(p) + (fermat ? " is a Fermat prime" : " is a Mersenne prime"));
        return c.accept("4.2");
      }
    }
    c.fact("simple group that is not PSL2(9) or PSL2(p) with p Fermat or Mersenne", false);
    return false;
  }
  if (n == 720 && gf.fstar.size() == 360 && c.fp == reference("M10", [] { return m10().group; })) {
    c.tc.parameters["group"] = "Mat(10)";
    c.fact("F* of order 360, |G : F*| = 2, fingerprint match Mat(10)");
    return c.accept("4.2");
  }
  if (gf.fstar == E) {
    const std::uint64_t e = E.size();
    for (std::uint64_t p = 3; p * (p * p - 1) <= e; ++p) {
      if (p * (p * p - 1) != e || !nt::is_fermat_prime(p)) continue;
      const Group Eg = subgroup_as_group(G, E);
      if (!(fingerprint(Eg) == ref_matrix(MatrixKind::SL2, static_cast<std::uint32_t>(p)))) continue;
      const std::uint64_t index = n / e;
      c.fact("F* quasisimple, fingerprint match SL2(" + str(p) + "); " + str(p) + " is a Fermat prime");
      if (index > 2) {
        c.fact("|G : F*| = " + str(index) + " > 2", false);
        return false;
      }
      if (!quaternion_sylow2(G)) {
        c.fact("Sylow 2-subgroups are not quaternion", false);
        return false;
      }
      c.tc.parameters["p"] = p;
      c.tc.parameters["index"] = index;
      c.fact("|G : F*| = " + str(index) + ", quaternion Sylow 2-subgroups");
      return c.accept("4.1");
    }
  }
  c.fact("F* quasisimple but not SL2(p) for a Fermat prime p", false);
  return false;
}

bool decide(Ctx& c) {
  const Group& G = c.G;
  const auto flags = structure_tests(G);
  if (G.order() == 1 || flags.is_nilpotent) return nilpotent_case(c);
  if (flags.is_supersoluble) return supersoluble_case(c);
  const auto gf = generalized_fitting(G);
  if (gf.components.empty()) {
    const auto& N = gf.fstar;
    const std::uint64_t f = N.size();
    const std::uint64_t p = nt::prime_power_base(f);
    c.fact("not supersoluble; F* nilpotent of order " + str(f));
    if (p != 0 && f == p * p && is_abelian(G, N) && !is_cyclic(G, N)) return elementary_case(c, N, p);
    if (p != 0 && f == p * p * p) {
      const auto ZN = intersection(G, N, centralizer(G, N));
      if (ZN.size() == p && derived_subgroup(G, N).size() == p) return extraspecial_case(c, N, p);
    }
    c.fact("F* is neither elementary abelian of order p^2 nor extraspecial of order p^3", false);
    return false;
  }
  c.fact("F* not nilpotent");
  return quasisimple_case(c, gf);
}

}  // namespace

TheoremCase classify(const Group& G, const ClassifyOptions& options) {
  if (G.order() > kMaxGroupOrder) fail(ErrorKind::CapExceeded, "classify: order exceeds cap");
  Ctx c(G);
  const bool matched = decide(c);
  TheoremCase tc = std::move(c.tc);
  const bool within = G.order() <= options.brute_cap;
  if (!matched) {
    if (!within)
      fail(ErrorKind::Unclassified, "no case matches and order " + std::to_string(G.order()) +
                                        " exceeds the brute-force cap; refusing to label");
    auto v = is_x_bruteforce(G, options.brute_cap);
    if (v.result == XResult::IsX)
      fail(ErrorKind::Unclassified, "no case matches but the brute-force checker finds an X-group");
    tc.label = "NotX";
    tc.parameters = json::object();
    tc.witness = v.witness;
    tc.evidence.push_back({"brute-force witness verified", verify_witness(G, *v.witness)});
    tc.confirmation = "brute";
    return tc;
  }
  if (within && options.confirm) {
    auto v = is_x_bruteforce(G, options.brute_cap);
    if (v.result != XResult::IsX)
      fail(ErrorKind::InternalInvariantViolation,
           "classifier chose case " + tc.label + " but the brute-force checker finds a witness");
    tc.confirmation = "brute";
  } else {
    tc.confirmation = within ? "unconfirmed" : "structural-only";
  }
  return tc;
}

std::string explain(const TheoremCase& tc) {
  std::ostringstream out;
  for (const auto& e : tc.evidence) out << (e.verified ? "[ok] " : "[--] ") << e.fact << "\n";
  out << "=> " << (tc.label == "NotX" ? std::string("not an X-group") : "case " + tc.label);
  if (!tc.parameters.empty()) out << " " << tc.parameters.dump();
  out << " (" << tc.confirmation << ")\n";
  return out.str();
}

std::string_view to_string(CrossStatus s) {
  switch (s) {
    case CrossStatus::Match: return "match";
    case CrossStatus::Mismatch: return "mismatch";
    case CrossStatus::Warn: return "warn";
  }
  return "";
}

CrossCheck cross_check(const Group& G, std::size_t brute_cap) {
  CrossCheck out;
  const bool within = G.order() <= brute_cap;
  try {
    ClassifyOptions opt;
    opt.brute_cap = brute_cap;
    opt.confirm = false;
    out.label = classify(G, opt).label;
  } catch (const Error& e) {
    out.label = std::string("error:") + std::string(to_string(e.kind()));
    out.note = e.what();
  }
  if (!within) {
    out.status = out.label.rfind("error:", 0) == 0 ? CrossStatus::Mismatch : CrossStatus::Warn;
    if (out.note.empty()) out.note = "above brute cap; structural evidence only";
    return out;
  }
  out.brute = is_x_bruteforce(G, brute_cap).result;
  const bool positive = out.label != "NotX" && out.label.rfind("error:", 0) != 0;
  const bool agree = out.label.rfind("error:", 0) != 0 && positive == (*out.brute == XResult::IsX);
  out.status = agree ? CrossStatus::Match : CrossStatus::Mismatch;
  return out;
}

}  // namespace xgroup
