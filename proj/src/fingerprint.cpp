#include "xgroup/fingerprint.hpp"

#include <algorithm>
#include <sstream>

#include "xgroup/engine.hpp"
#include "xgroup/numtheory.hpp"

namespace xgroup {

std::string Fingerprint::to_string() const {
  std::ostringstream os;
  os << "order=" << order << ";center=" << center_order << ";derived=" << derived_order
     << ";ab=[";
  for (std::size_t i = 0; i < abelianization_invariants.size(); ++i)
    os << (i ? "," : "") << abelianization_invariants[i];
  os << "];orders={";
  bool first = true;
  for (auto [o, c] : element_order_multiset) {
    os << (first ? "" : ",") << o << ":" << c;
    first = false;
  }
  os << "};classes={";
  first = true;
  for (auto [s, c] : conjugacy_class_size_multiset) {
    os << (first ? "" : ",") << s << ":" << c;
    first = false;
  }
  os << "};perfect=" << is_perfect << ";simple_mod_center=" << is_simple_quotient_by_center;
  return os.str();
}

std::vector<std::uint64_t> abelian_invariants_from_orders(
    const std::map<std::uint64_t, std::size_t>& order_counts) {
  std::size_t total = 0;
  for (auto [o, c] : order_counts) total += c;
  // elementary divisors per prime: |A[p^k]| = p^(sum_i min(k, e_i))
  std::vector<std::vector<std::uint64_t>> per_prime;  // descending prime powers
  for (auto [p, e] : nt::factorize(total)) {
    std::vector<unsigned> s(e + 2, 0);  // s[k] = log_p |A[p^k]|
    for (unsigned k = 0; k <= e + 1; ++k) {
      std::uint64_t pk = 1;
      for (unsigned i = 0; i < k; ++i) pk *= p;
      std::size_t cnt = 0;
      for (auto [o, c] : order_counts)
        if (pk % o == 0) cnt += c;
      unsigned l = 0;
      while (cnt > 1) {
        cnt /= p;
        ++l;
      }
      s[k] = l;
    }
    // number of e_i >= k is s[k] - s[k-1]
    std::vector<std::uint64_t> powers;
    for (unsigned k = 1; k <= e; ++k) {
      unsigned ge_k = s[k] - s[k - 1];
      unsigned ge_k1 = s[k + 1] - s[k];
      std::uint64_t pk = 1;
      for (unsigned i = 0; i < k; ++i) pk *= p;
      for (unsigned j = 0; j < ge_k - ge_k1; ++j) powers.push_back(pk);
    }
    std::sort(powers.rbegin(), powers.rend());
    per_prime.push_back(std::move(powers));
  }
  std::size_t rank = 0;
  for (const auto& v : per_prime) rank = std::max(rank, v.size());
  std::vector<std::uint64_t> inv(rank, 1);
  for (const auto& v : per_prime)
    for (std::size_t i = 0; i < v.size(); ++i) inv[i] *= v[i];
  std::reverse(inv.begin(), inv.end());
  return inv;
}

Fingerprint fingerprint(const Group& G) {
  Fingerprint f;
  f.order = G.order();
  const auto Z = center(G);
  f.center_order = Z.size();
  const auto D = derived_subgroup(G);
  f.derived_order = D.size();
  f.is_perfect = D.size() == G.order();
  for (auto o : G.element_orders()) ++f.element_order_multiset[o];

  // orders of cosets gD in G/D; each coset contributes |D| elements
  std::map<std::uint64_t, std::size_t> coset_orders;
  for (Elem g = 0; g < G.order(); ++g) {
    std::uint64_t k = 1;
    Elem x = g;
    while (!D.contains(x)) {
      x = G.mul(x, g);
      ++k;
    }
    ++coset_orders[k];
  }
  for (auto& [o, c] : coset_orders) c /= D.size();
  f.abelianization_invariants = abelian_invariants_from_orders(coset_orders);

  const auto classes = conjugacy_classes(G);
  for (const auto& c : classes) ++f.conjugacy_class_size_multiset[c.size()];

  if (Z.size() < G.order()) {
    bool simple = true;
    for (const auto& c : classes) {
      if (Z.contains(c[0])) continue;
      std::vector<Elem> seed(Z.generators());
      seed.push_back(c[0]);
      if (normal_closure(G, seed).size() != G.order()) {
        simple = false;
        break;
      }
    }
    f.is_simple_quotient_by_center = simple;
  }
  return f;
}

}  // namespace xgroup
