#include "xgroup/engine.hpp"

#include <algorithm>
#include <map>

#include "xgroup/errors.hpp"
#include "xgroup/numtheory.hpp"

namespace xgroup {

Subgroup closure(const Group& G, std::span<const Elem> seed) {
  SubgroupBuilder b(G);
  for (auto e : seed) b.add(e);
  return b.build();
}

Subgroup closure(const Group& G, std::initializer_list<Elem> seed) {
  return closure(G, std::span<const Elem>(seed.begin(), seed.size()));
}

Subgroup normal_closure(const Group& G, std::span<const Elem> seed) {
  SubgroupBuilder b(G);
  for (auto e : seed) b.add(e);
  b.normalize_under(G.generators());
  return b.build();
}

Subgroup normal_closure_in(const Group& G, const Subgroup& H, std::span<const Elem> seed) {
  SubgroupBuilder b(G);
  for (auto e : seed) b.add(e);
  b.normalize_under(H.generators());
  return b.build();
}

Subgroup centralizer(const Group& G, std::span<const Elem> xs) {
  std::vector<Elem> out;
  for (Elem g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (auto x : xs)
      if (!G.commute(g, x)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(g);
  }
  return Subgroup::from_members(G, std::move(out));
}

Subgroup centralizer(const Group& G, Elem x) {
  return centralizer(G, std::span<const Elem>(&x, 1));
}

Subgroup centralizer(const Group& G, const Subgroup& H) {
  return centralizer(G, std::span<const Elem>(H.generators()));
}

Subgroup center(const Group& G) { return centralizer(G, G.generators()); }

Subgroup normalizer(const Group& G, const Subgroup& H) {
  std::vector<Elem> out;
  for (Elem g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (auto h : H.generators())
      if (!H.contains(G.conj(h, g))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(g);
  }
  return Subgroup::from_members(G, std::move(out));
}

Subgroup conjugate(const Group& G, const Subgroup& H, Elem g) {
  std::vector<Elem> gens;
  for (auto h : H.generators()) gens.push_back(G.conj(h, g));
  return closure(G, gens);
}

Subgroup intersection(const Group& G, const Subgroup& A, const Subgroup& B) {
  std::vector<Elem> out;
  const auto& small = A.size() <= B.size() ? A : B;
  const auto& big = A.size() <= B.size() ? B : A;
  for (auto e : small.members())
    if (big.contains(e)) out.push_back(e);
  return Subgroup::from_members(G, std::move(out));
}

Subgroup join(const Group& G, const Subgroup& A, const Subgroup& B) {
  SubgroupBuilder b(G, A);
  for (auto g : B.generators()) b.add(g);
  return b.build();
}

std::vector<std::vector<Elem>> conjugacy_classes(const Group& G) {
  const std::size_t n = G.order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Elem>> classes;
  for (Elem x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<Elem> orbit{x};
    seen[x] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (auto g : G.generators()) {
        auto y = G.conj(orbit[i], g);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  std::stable_sort(classes.begin(), classes.end(), [&](const auto& a, const auto& b) {
    auto oa = G.element_order(a[0]), ob = G.element_order(b[0]);
    if (oa != ob) return oa < ob;
    if (a.size() != b.size()) return a.size() < b.size();
    return a[0] < b[0];
  });
  return classes;
}

std::vector<std::uint32_t> class_ids(const Group& G,
                                     const std::vector<std::vector<Elem>>& classes) {
  std::vector<std::uint32_t> id(G.order(), 0);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (auto e : classes[c]) id[e] = static_cast<std::uint32_t>(c);
  return id;
}

bool is_cyclic(const Group& G, const Subgroup& H) {
  for (auto e : H.members())
    if (G.element_order(e) == H.size()) return true;
  return false;
}

bool is_abelian(const Group& G, const Subgroup& H) {
  const auto& gs = H.generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      if (!G.commute(gs[i], gs[j])) return false;
  return true;
}

bool is_normal(const Group& G, const Subgroup& H) {
  for (auto h : H.generators())
    for (auto g : G.generators())
      if (!H.contains(G.conj(h, g))) return false;
  return true;
}

Subgroup derived_subgroup(const Group& G, const Subgroup& H) {
  const auto& gs = H.generators();
  std::vector<Elem> comms;
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      auto c = G.commutator(gs[i], gs[j]);
      if (c != Group::identity) comms.push_back(c);
    }
  return normal_closure_in(G, H, comms);
}

Subgroup derived_subgroup(const Group& G) {
  return derived_subgroup(G, Subgroup::whole(G));
}

Subgroup perfect_residual(const Group& G, const Subgroup& H) {
  Subgroup cur = H;
  while (true) {
    auto d = derived_subgroup(G, cur);
    if (d.size() == cur.size()) return cur;
    cur = std::move(d);
  }
}

SubgroupFlags subgroup_predicates(const Group& G, const Subgroup& H) {
  SubgroupFlags f;
  f.is_cyclic = is_cyclic(G, H);
  f.is_abelian = is_abelian(G, H);
  f.is_normal = is_normal(G, H);
  f.is_perfect = derived_subgroup(G, H).size() == H.size();
  return f;
}

Group quotient(const Group& G, const Subgroup& N, QuotientMap* map) {
  if (!is_normal(G, N)) fail(ErrorKind::NotNormal, "quotient by a non-normal subgroup");
  const std::size_t n = G.order();
  const std::size_t k = n / N.size();
  if (k > kDenseTableThreshold)
    fail(ErrorKind::CapExceeded, "quotient order exceeds dense-table threshold");
  constexpr std::uint32_t kUnset = 0xffffffffu;
  QuotientMap m;
  m.coset_of.assign(n, kUnset);
  for (Elem x = 0; x < n; ++x) {
    if (m.coset_of[x] != kUnset) continue;
    auto id = static_cast<std::uint32_t>(m.representative.size());
    m.representative.push_back(x);
    for (auto h : N.members()) m.coset_of[G.mul(x, h)] = id;
  }
  std::vector<std::vector<Elem>> table(k, std::vector<Elem>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      table[i][j] = m.coset_of[G.mul(m.representative[i], m.representative[j])];
  if (map) *map = std::move(m);
  return Group::from_table(table);
}

Subgroup sylow(const Group& G, std::uint64_t p) {
  const std::uint64_t target = nt::p_part(G.order(), p);
  SubgroupBuilder P(G);
  std::size_t size = 1;
  std::vector<Elem> gens;
  auto is_p_elem = [&](Elem e) { return nt::is_power_of(G.element_order(e), p); };
  while (size < target) {
    auto cur = P.build();
    bool grown = false;
    for (Elem g = 1; g < G.order() && !grown; ++g) {
      if (cur.contains(g) || !is_p_elem(g)) continue;
      bool normalizes = true;
      for (auto h : cur.generators())
        if (!cur.contains(G.conj(h, g))) {
          normalizes = false;
          break;
        }
      if (!normalizes) continue;
      P.add(g);
      size = P.size();
      grown = true;
    }
    ensure(grown, "normalizer ascent stalled below the Sylow order");
  }
  auto S = P.build();
  ensure(S.size() == target, "Sylow subgroup has the wrong order");
  return S;
}

Subgroup p_core(const Group& G, std::uint64_t p) {
  Subgroup K = sylow(G, p);
  while (true) {
    Subgroup next = K;
    for (auto g : G.generators()) next = intersection(G, next, conjugate(G, K, g));
    if (next.size() == K.size()) return K;
    K = std::move(next);
  }
}

Subgroup fitting(const Group& G) {
  SubgroupBuilder b(G);
  for (auto p : nt::prime_divisors(G.order())) {
    auto O = p_core(G, p);
    for (auto g : O.generators()) b.add(g);
  }
  return b.build();
}

bool is_nilpotent(const Group& G) {
  // nilpotent iff every Sylow subgroup is normal iff the p-elements of each
  // prime form a set of size exactly the p-part
  for (auto [p, e] : nt::factorize(G.order())) {
    std::size_t count = 0;
    for (auto o : G.element_orders())
      if (nt::is_power_of(o, p)) ++count;
    if (count != nt::p_part(G.order(), p)) return false;
  }
  return true;
}

bool is_soluble(const Group& G) {
  return perfect_residual(G, Subgroup::whole(G)).size() == 1;
}

bool is_supersoluble(const Group& G) {
  if (G.order() == 1) return true;
  if (!is_soluble(G)) return false;
  auto normals = normal_subgroups(G);
  // any maximal chain of normal subgroups is a chief series
  Subgroup cur = Subgroup::trivial(G);
  while (cur.size() < G.order()) {
    const Subgroup* next = nullptr;
    for (const auto& N : normals)
      if (N.size() > cur.size() && cur.subset_of(N)) {
        next = &N;
        break;
      }
    ensure(next != nullptr, "normal lattice has no cover");
    if (!nt::is_prime(next->size() / cur.size())) return false;
    cur = *next;
  }
  return true;
}

bool is_simple(const Group& G) {
  if (G.order() == 1) return false;
  auto classes = conjugacy_classes(G);
  for (const auto& c : classes) {
    if (c[0] == Group::identity) continue;
    Elem x = c[0];
    if (normal_closure(G, std::span<const Elem>(&x, 1)).size() != G.order()) return false;
  }
  return true;
}

namespace {

// G/Z simple, decided without building the quotient.
bool central_quotient_simple(const Group& G, const Subgroup& Z) {
  if (Z.size() == G.order()) return false;
  for (const auto& c : conjugacy_classes(G)) {
    if (Z.contains(c[0])) continue;
    std::vector<Elem> seed(Z.generators());
    seed.push_back(c[0]);
    if (normal_closure(G, seed).size() != G.order()) return false;
  }
  return true;
}

}  // namespace

bool is_quasisimple(const Group& G) {
  if (G.order() == 1) return false;
  if (derived_subgroup(G).size() != G.order()) return false;
  return central_quotient_simple(G, center(G));
}

StructureFlags structure_tests(const Group& G) {
  StructureFlags f;
  f.is_nilpotent = is_nilpotent(G);
  f.is_supersoluble = f.is_nilpotent || is_supersoluble(G);
  f.is_simple = is_simple(G);
  f.is_quasisimple = is_quasisimple(G);
  return f;
}

Group subgroup_as_group(const Group& G, const Subgroup& H, std::vector<Elem>* embedding) {
  std::vector<Permutation> gens;
  for (auto g : H.generators()) gens.push_back(G.permutation(g));
  auto S = Group::from_generators(G.degree(), gens, G.order());
  ensure(S.order() == H.size(), "subgroup rebuild changed the order");
  if (embedding) {
    embedding->resize(S.order());
    for (Elem e = 0; e < S.order(); ++e) {
      auto idx = G.find(S.images(e));
      ensure(idx >= 0, "subgroup element missing from parent");
      (*embedding)[e] = static_cast<Elem>(idx);
    }
  }
  return S;
}

namespace {

void find_components(const Group& G, const Subgroup& X, std::vector<Subgroup>& found) {
  if (X.size() == 1) return;
  auto R = perfect_residual(G, X);
  if (R.size() == 1) return;
  if (R.size() != X.size()) {
    find_components(G, R, found);
    return;
  }
  std::vector<Elem> emb;
  auto XG = subgroup_as_group(G, X, &emb);
  if (is_quasisimple(XG)) {
    for (const auto& F : found)
      if (F == X) return;
    found.push_back(X);
    return;
  }
  for (const auto& M : normal_subgroups(XG)) {
    if (M.size() == 1 || M.size() == XG.order()) continue;
    std::vector<Elem> members;
    for (auto e : M.members()) members.push_back(emb[e]);
    find_components(G, Subgroup::from_members(G, std::move(members)), found);
  }
}

}  // namespace

GeneralizedFitting generalized_fitting(const Group& G) {
  GeneralizedFitting out;
  out.fitting = fitting(G);
  find_components(G, Subgroup::whole(G), out.components);
  std::sort(out.components.begin(), out.components.end(),
            [](const Subgroup& a, const Subgroup& b) { return a.members() < b.members(); });
  SubgroupBuilder b(G, out.fitting);
  for (const auto& K : out.components)
    for (auto g : K.generators()) b.add(g);
  out.fstar = b.build();
  auto C = centralizer(G, out.fstar);
  if (!C.subset_of(out.fstar))
    fail(ErrorKind::InternalInvariantViolation, "F* does not contain its centralizer");
  return out;
}

}  // namespace xgroup
