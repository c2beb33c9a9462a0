#pragma once

// Deliberately naive reference implementations. Nothing here calls the
// engine beyond Group::mul / inv / order.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "xgroup/group.hpp"

namespace oracle {

using xgroup::Elem;
using xgroup::Group;

inline std::vector<Elem> closure(const Group& G, const std::vector<Elem>& seed) {
  std::vector<char> in(G.order(), 0);
  std::vector<Elem> list{Group::identity};
  in[0] = 1;
  for (std::size_t i = 0; i < list.size(); ++i)
    for (auto s : seed) {
      const Elem y = G.mul(list[i], s);
      if (!in[y]) {
        in[y] = 1;
        list.push_back(y);
      }
    }
  std::sort(list.begin(), list.end());
  return list;
}

inline std::vector<Elem> centralizer(const Group& G, const std::vector<Elem>& xs) {
  std::vector<Elem> out;
  for (Elem g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (auto x : xs) ok = ok && G.mul(g, x) == G.mul(x, g);
    if (ok) out.push_back(g);
  }
  return out;
}

inline unsigned order_of(const Group& G, Elem g) {
  unsigned k = 1;
  for (Elem x = g; x != Group::identity; x = G.mul(x, g)) ++k;
  return k;
}

inline bool cyclic(const Group& G, const std::vector<Elem>& H) {
  for (auto h : H)
    if (order_of(G, h) == H.size()) return true;
  return false;
}

inline bool normal(const Group& G, const std::vector<Elem>& H) {
  std::set<Elem> s(H.begin(), H.end());
  for (Elem g = 0; g < G.order(); ++g)
    for (auto h : H)
      if (!s.count(G.mul(G.mul(G.inv(g), h), g))) return false;
  return true;
}

/// All subgroups generated by at most `k` elements (k <= 3), as sorted member lists.
inline std::set<std::vector<Elem>> small_subgroups(const Group& G, int k) {
  std::set<std::vector<Elem>> out;
  const Elem n = static_cast<Elem>(G.order());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = (k >= 2 ? a : 0); b < (k >= 2 ? n : 1); ++b)
      for (Elem c = (k >= 3 ? b : 0); c < (k >= 3 ? n : 1); ++c) out.insert(closure(G, {a, b, c}));
  return out;
}

/// Pair-free 𝔛 test: every non-cyclic subgroup in `subs` contains its centralizer.
inline bool is_x(const Group& G, const std::set<std::vector<Elem>>& subs) {
  for (const auto& H : subs) {
    if (cyclic(G, H)) continue;
    const auto C = centralizer(G, H);
    if (!std::includes(H.begin(), H.end(), C.begin(), C.end())) return false;
  }
  return true;
}

/// Random permutation images of a given degree.
inline std::vector<std::int64_t> random_images(std::mt19937_64& rng, std::size_t degree) {
  std::vector<std::int64_t> v(degree);
  for (std::size_t i = 0; i < degree; ++i) v[i] = static_cast<std::int64_t>(i);
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

}  // namespace oracle
