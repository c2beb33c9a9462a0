#include <algorithm>
#include <map>

#include "xgroup/engine.hpp"
#include "xgroup/errors.hpp"

namespace xgroup {

std::vector<Subgroup> normal_subgroups(const Group& G) {
  std::vector<Subgroup> out;
  auto known = [&](const Subgroup& S) {
    for (const auto& T : out)
      if (T.size() == S.size() && T == S) return true;
    return false;
  };
  out.push_back(Subgroup::trivial(G));
  for (const auto& c : conjugacy_classes(G)) {
    if (c[0] == Group::identity) continue;
    Elem x = c[0];
    auto N = normal_closure(G, std::span<const Elem>(&x, 1));
    if (!known(N)) out.push_back(std::move(N));
  }
  // close under products
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (out[i].subset_of(out[j]) || out[j].subset_of(out[i])) continue;
      auto N = join(G, out[i], out[j]);
      if (!known(N)) out.push_back(std::move(N));
    }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  });
  return out;
}

// ---- subgroup lattice -------------------------------------------------------

bool are_conjugate(const Group& G, const Subgroup& A, const Subgroup& B) {
  if (A.size() != B.size()) return false;
  for (Elem g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (auto a : A.generators())
      if (!B.contains(G.conj(a, g))) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

std::vector<SubgroupClass> subgroups_up_to_conjugacy(const Group& G, std::size_t cap) {
  if (G.order() > cap)
    fail(ErrorKind::CapExceeded,
         "subgroup enumeration cap " + std::to_string(cap) + " exceeded");
  const auto classes = conjugacy_classes(G);
  const auto cid = class_ids(G, classes);

  // conjugation-invariant key: order plus how many members fall in each class
  auto key_of = [&](const Subgroup& H) {
    std::vector<std::uint32_t> k(classes.size() + 1, 0);
    k[0] = static_cast<std::uint32_t>(H.size());
    for (auto e : H.members()) ++k[cid[e] + 1];
    return k;
  };

  std::vector<SubgroupClass> reps;
  std::map<std::vector<std::uint32_t>, std::vector<std::size_t>> by_key;
  auto register_class = [&](Subgroup H) {
    auto k = key_of(H);
    auto& bucket = by_key[k];
    for (auto idx : bucket)
      if (are_conjugate(G, H, reps[idx].representative)) return;
    bucket.push_back(reps.size());
    const auto N = normalizer(G, H);
    reps.push_back({std::move(H), G.order() / N.size()});
  };
  register_class(Subgroup::trivial(G));

  // Every subgroup K is <H, g> for a proper subgroup H < K and g in K \ H; H
  // is conjugate to some representative, so extending each representative by
  // single elements reaches every class (perfect subgroups included).
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const Subgroup H = reps[i].representative;
    std::vector<bool> used(G.order(), false);
    for (auto h : H.members()) used[h] = true;
    for (Elem g = 1; g < G.order(); ++g) {
      if (used[g]) continue;
      for (auto h : H.members()) used[G.mul(h, g)] = true;
      SubgroupBuilder b(G, H);
      b.add(g);
      register_class(b.build());
    }
  }
  std::stable_sort(reps.begin(), reps.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    return a.representative.size() < b.representative.size();
  });
  return reps;
}

}  // namespace xgroup
