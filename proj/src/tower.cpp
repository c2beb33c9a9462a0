#include "xgroup/tower.hpp"

#include "construct_util.hpp"
#include "xgroup/classifier.hpp"
#include "xgroup/errors.hpp"
#include "xgroup/numtheory.hpp"

namespace xgroup {

std::string to_string(const TowerSpec& s) {
  switch (s.kind) {
    case TowerKind::Prufer: return "prufer(" + std::to_string(s.p) + ")";
    case TowerKind::Prufer2Ext: return "prufer2_ext(" + std::to_string(s.y_order) + ")";
    case TowerKind::PruferMetacyclic:
      return "prufer_metacyclic(" + std::to_string(s.p) + "," + std::to_string(s.d) + ")";
  }
  return "";
}

std::uint64_t padic_unit(std::uint64_t p, unsigned k, std::uint64_t d) {
  if (!nt::is_prime(p) || p == 2) fail(ErrorKind::InvalidParameter, "padic_unit: p must be an odd prime");
  if (k == 0) fail(ErrorKind::InvalidParameter, "padic_unit: level must be >= 1");
  if (d == 0 || (p - 1) % d != 0) fail(ErrorKind::InvalidParameter, "padic_unit: d must divide p - 1");
  std::uint64_t pk = 1;
  for (unsigned i = 0; i < k; ++i) pk *= p;
  // primitive mod p^2 implies primitive mod every p^k; the same t at every
  // level keeps the residues coherent
  const std::uint64_t t = nt::smallest_primitive_root(p * p);
  return nt::pow_mod(t, (p - 1) * (pk / p) / d, pk);
}

namespace {

struct LevelParams {
  std::uint64_t m, n, r, s;
};

LevelParams level_params(const TowerSpec& spec, unsigned k) {
  switch (spec.kind) {
    case TowerKind::Prufer: {
      std::uint64_t m = 1;
      for (unsigned i = 0; i < k; ++i) m *= spec.p;
      return {m, 1, 1, 0};
    }
    case TowerKind::Prufer2Ext: {
      // y of order 2: Dih(2^(k+2)); y of order 4: Q_(2^(k+3)) with y^2 the involution of A
      const std::uint64_t m = spec.y_order == 2 ? (1ull << (k + 1)) : (1ull << (k + 2));
      return {m, 2, m - 1, spec.y_order == 2 ? 0 : m / 2};
    }
    case TowerKind::PruferMetacyclic: {
      std::uint64_t m = 1;
      for (unsigned i = 0; i < k; ++i) m *= spec.p;
      return {m, spec.d, padic_unit(spec.p, k, spec.d), 0};
    }
  }
  return {1, 1, 1, 0};
}

void validate(const TowerSpec& spec) {
  if (spec.depth == 0) fail(ErrorKind::InvalidParameter, "tower depth must be >= 1");
  switch (spec.kind) {
    case TowerKind::Prufer:
      if (!nt::is_prime(spec.p)) fail(ErrorKind::InvalidParameter, "prufer: p must be prime");
      break;
    case TowerKind::Prufer2Ext:
      if (spec.y_order != 2 && spec.y_order != 4)
        fail(ErrorKind::InvalidParameter, "prufer2_ext: y_order must be 2 or 4");
      break;
    case TowerKind::PruferMetacyclic:
      if (!nt::is_prime(spec.p) || spec.p == 2)
        fail(ErrorKind::InvalidParameter, "prufer_metacyclic: p must be an odd prime");
      if (spec.d <= 1 || (spec.p - 1) % spec.d != 0)
        fail(ErrorKind::InvalidParameter, "prufer_metacyclic: need d | p - 1 and d > 1");
      break;
  }
}

// p for the a -> a'^p inclusion
std::uint64_t step(const TowerSpec& spec) { return spec.kind == TowerKind::Prufer2Ext ? 2 : spec.p; }

// Evaluate the word of every element of `from` on the given generator images.
std::vector<Elem> induced_map(const Group& from, const Group& to, const std::vector<Elem>& gen_images) {
  std::vector<Elem> img(from.order());
  for (Elem g = 0; g < from.order(); ++g) {
    Elem x = Group::identity;
    for (auto i : from.word(g)) x = to.mul(x, gen_images[i]);
    img[g] = x;
  }
  return img;
}

bool is_injective_hom(const Group& A, const Group& B, const std::vector<Elem>& f) {
  std::vector<char> seen(B.order(), 0);
  for (auto y : f) {
    if (seen[y]) return false;
    seen[y] = 1;
  }
  for (Elem x = 0; x < A.order(); ++x)
    for (Elem y = 0; y < A.order(); ++y)
      if (f[A.mul(x, y)] != B.mul(f[x], f[y])) return false;
  return true;
}

}  // namespace

std::vector<TowerLevel> build_tower(const TowerSpec& spec, std::size_t cap) {
  validate(spec);
  const auto top = level_params(spec, spec.depth);
  if (top.m * top.n > cap)
    fail(ErrorKind::CapExceeded, "tower top level has order " + std::to_string(top.m * top.n) +
                                     " above the cap " + std::to_string(cap));
  std::vector<TowerLevel> levels;
  for (unsigned k = 1; k <= spec.depth; ++k) {
    const auto lp = level_params(spec, k);
    levels.push_back({detail::realize_metacyclic(lp.m, lp.n, lp.r, lp.s), lp.m, lp.n, lp.r, lp.s, {}});
  }
  const std::uint64_t p = step(spec);
  for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
    const Group& to = levels[k + 1].group;
    const auto& g = to.generators();
    levels[k].embedding = induced_map(levels[k].group, to, {to.pow(g[0], static_cast<long long>(p)), g[1]});
  }
  return levels;
}

bool TowerReport::ok() const {
  if (!labels_constant || !functorial) return false;
  for (const auto& l : levels)
    if (l.verdict != XResult::IsX || !l.embedding_ok || !l.stabilization_ok) return false;
  return true;
}

TowerReport verify_tower(const TowerSpec& spec, const std::vector<TowerLevel>& tower, std::size_t brute_cap) {
  TowerReport rep;
  rep.spec = spec;
  const std::uint64_t p = step(spec);
  for (std::size_t k = 0; k < tower.size(); ++k) {
    const Group& G = tower[k].group;
    TowerLevelReport lr;
    lr.level = static_cast<unsigned>(k + 1);
    lr.order = G.order();
    lr.verdict = is_x_bruteforce(G, brute_cap).result;
    try {
      lr.theorem_case = classify(G, {brute_cap, false}).label;
    } catch (const Error& e) {
      lr.theorem_case = std::string("error:") + std::string(to_string(e.kind()));
    }
    if (k + 1 < tower.size()) {
      const Group& H = tower[k + 1].group;
      const auto& f = tower[k].embedding;
      const auto& gs = G.generators();
      const auto& hs = H.generators();
      lr.embedding_ok = f.size() == G.order() && is_injective_hom(G, H, f) &&
                        f[gs[0]] == H.pow(hs[0], static_cast<long long>(p)) && f[gs[1]] == hs[1];
    }
    rep.levels.push_back(lr);
  }
  for (std::size_t k = 2; k < rep.levels.size(); ++k)
    if (rep.levels[k].theorem_case != rep.levels[1].theorem_case) rep.labels_constant = false;

  // composed embeddings: comp[k][m] maps level k into level m
  const std::size_t L = tower.size();
  std::vector<std::vector<std::vector<Elem>>> comp(L, std::vector<std::vector<Elem>>(L));
  for (std::size_t k = 0; k < L; ++k) {
    comp[k][k].resize(tower[k].group.order());
    for (Elem x = 0; x < comp[k][k].size(); ++x) comp[k][k][x] = x;
    for (std::size_t m = k + 1; m < L; ++m) {
      comp[k][m].resize(tower[k].group.order());
      for (Elem x = 0; x < comp[k][m].size(); ++x) comp[k][m][x] = tower[m - 1].embedding[comp[k][m - 1][x]];
    }
  }
  // functoriality: the two-step composite equals the direct map a -> a''^(p^2), y -> y''
  for (std::size_t k = 0; k + 2 < L; ++k) {
    const Group& G = tower[k].group;
    const Group& T = tower[k + 2].group;
    const auto direct = induced_map(G, T, {T.pow(T.generators()[0], static_cast<long long>(p * p)),
                                           T.generators()[1]});
    if (direct != comp[k][k + 2]) rep.functorial = false;
  }

  // stabilization: non-cyclic <a, b> at level k stays self-centralizing above
  for (std::size_t k = 0; k < L; ++k) {
    auto& lr = rep.levels[k];
    lr.stabilization_checked_through = static_cast<unsigned>(L);
    const Group& G = tower[k].group;
    for (const auto& cls : conjugacy_classes(G)) {
      const Elem a = cls.front();
      if (a == Group::identity) continue;
      const auto A = closure(G, {a});
      for (Elem b = 0; b < G.order() && lr.stabilization_ok; ++b) {
        if (A.contains(b)) continue;
        const auto Hs = closure(G, {a, b});
        if (is_cyclic(G, Hs)) continue;
        for (std::size_t m = k + 1; m < L && lr.stabilization_ok; ++m) {
          const Group& M = tower[m].group;
          const auto& f = comp[k][m];
          std::vector<char> in(M.order(), 0);
          for (auto h : Hs.members()) in[f[h]] = 1;
          for (Elem x = 0; x < M.order(); ++x)
            if (!in[x] && M.commute(x, f[a]) && M.commute(x, f[b])) {
              lr.stabilization_ok = false;
              break;
            }
        }
      }
    }
  }
  return rep;
}

TowerReport verify_tower(const TowerSpec& spec, std::size_t brute_cap) {
  return verify_tower(spec, build_tower(spec, brute_cap), brute_cap);
}

std::vector<std::pair<std::size_t, XResult>> dihedral_quotient_control(unsigned depth) {
  std::vector<std::pair<std::size_t, XResult>> out;
  std::uint64_t m = 1;
  for (unsigned k = 1; k <= depth; ++k) {
    m *= 6;
    const Group G = detail::realize_metacyclic(m, 2, m - 1, 0);
    out.emplace_back(G.order(), is_x_bruteforce(G, std::max<std::size_t>(kDefaultBruteCap, G.order())).result);
  }
  return out;
}

}  // namespace xgroup
