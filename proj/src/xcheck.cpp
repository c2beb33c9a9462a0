#include "xgroup/xcheck.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <unordered_map>

#include "xgroup/errors.hpp"
#include "xgroup/fingerprint.hpp"
#include "xgroup/numtheory.hpp"

namespace xgroup {

std::string_view to_string(XResult r) { return r == XResult::IsX ? "IsX" : "NotX"; }

std::string_view to_string(XMethod m) {
  switch (m) {
    case XMethod::Brute: return "brute";
    case XMethod::Recursive: return "recursive";
    case XMethod::Structural: return "structural";
  }
  return "";
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void check_cap(const Group& G, std::size_t cap) {
  if (G.order() > cap)
    fail(ErrorKind::CapExceeded, "group of order " + std::to_string(G.order()) +
                                     " exceeds the brute-force cap " + std::to_string(cap));
}

std::vector<Elem> class_representatives(const Group& G) {
  std::vector<Elem> reps;
  for (const auto& c : conjugacy_classes(G)) reps.push_back(c.front());
  return reps;
}

bool cyclic_members(const Group& G, const std::vector<Elem>& members) {
  for (auto e : members)
    if (G.element_order(e) == members.size()) return true;
  return false;
}

// First pair (a, b), a in `reps`, b ascending, with <a, b> non-cyclic and
// some element of `required(a, b)` outside <a, b>. `required` returns the
// candidate elements sorted ascending.
template <class Required>
std::optional<Witness> pair_scan(const Group& G, const std::vector<Elem>& reps, XStats& stats,
                                 Required required) {
  const std::size_t n = G.order();
  for (auto a : reps) {
    if (a == Group::identity) continue;
    const auto A = closure(G, {a});
    for (Elem b = 0; b < n; ++b) {
      if (A.contains(b)) continue;
      ++stats.pairs_scanned;
      const std::vector<Elem> targets = required(a, b);
      if (targets.empty()) continue;
      SubgroupBuilder H(G, A);
      ++stats.closures;
      if (H.add_until(b, targets)) continue;
      auto built = H.build();
      if (cyclic_members(G, built.members())) continue;
      for (auto x : targets)
        if (!built.contains(x)) return Witness{a, b, x};
    }
  }
  return std::nullopt;
}

}  // namespace

// ------------------------------------------------------------ brute force

XVerdict is_x_bruteforce(const Group& G, std::size_t cap) {
  check_cap(G, cap);
  const auto t0 = Clock::now();
  XVerdict v;
  v.method = XMethod::Brute;
  const auto reps = class_representatives(G);
  std::vector<Subgroup> cent_cache(G.order());
  std::vector<bool> have(G.order(), false);
  auto w = pair_scan(G, reps, v.stats, [&](Elem a, Elem b) {
    if (!have[a]) {
      cent_cache[a] = centralizer(G, a);
      have[a] = true;
    }
    std::vector<Elem> cab;
    for (auto x : cent_cache[a].members())
      if (G.commute(x, b)) cab.push_back(x);
    return cab;
  });
  if (w) {
    v.result = XResult::NotX;
    v.witness = w;
  }
  v.stats.elapsed_ms = ms_since(t0);
  return v;
}

// ------------------------------------------------------------ recursion

namespace {

struct RecursiveState {
  std::unordered_map<std::string, bool> memo;  // fingerprint -> IsX
  XStats stats;
};

std::optional<Witness> recursive_witness(const Group& G, RecursiveState& st) {
  ++st.stats.centralizer_groups;
  const auto whole = Subgroup::whole(G);
  if (is_cyclic(G, whole)) return std::nullopt;
  const std::string key = fingerprint(G).to_string();
  if (auto it = st.memo.find(key); it != st.memo.end() && it->second) {
    ++st.stats.memo_hits;
    return std::nullopt;
  }
  const auto Z = center(G);
  for (const auto& cls : conjugacy_classes(G)) {
    const Elem x = cls.front();
    if (Z.contains(x)) continue;
    // x of prime order, or x whose prime-order powers are all central
    const unsigned o = G.element_order(x);
    bool descend = nt::is_prime(o);
    if (!descend) {
      descend = true;
      for (auto p : nt::prime_divisors(o))
        if (!Z.contains(G.pow(x, o / p))) descend = false;
    }
    if (!descend) continue;
    std::vector<Elem> emb;
    const auto C = centralizer(G, x);
    const Group sub = subgroup_as_group(G, C, &emb);
    if (auto w = recursive_witness(sub, st)) return Witness{emb[w->a], emb[w->b], emb[w->x]};
  }
  if (Z.size() > 1) {
    // every non-cyclic subgroup must contain Z(G)
    const auto reps = class_representatives(G);
    const std::vector<Elem> zs = Z.members();
    auto w = pair_scan(G, reps, st.stats, [&](Elem, Elem) { return zs; });
    if (w) return w;
  }
  st.memo[key] = true;
  return std::nullopt;
}

}  // namespace

XVerdict is_x_recursive(const Group& G, std::size_t cap) {
  check_cap(G, cap);
  const auto t0 = Clock::now();
  RecursiveState st;
  XVerdict v;
  v.method = XMethod::Recursive;
  if (auto w = recursive_witness(G, st)) {
    v.result = XResult::NotX;
    v.witness = w;
  }
  v.stats = st.stats;
  v.stats.elapsed_ms = ms_since(t0);
  return v;
}

// ------------------------------------------------------------ witnesses

bool verify_witness(const Group& G, const Witness& w) {
  const std::size_t n = G.order();
  if (w.a >= n || w.b >= n || w.x >= n) return false;
  if (!G.commute(w.x, w.a) || !G.commute(w.x, w.b)) return false;
  // plain orbit closure of the identity under right multiplication by a, b
  std::vector<char> in(n, 0);
  std::vector<Elem> list{Group::identity};
  in[Group::identity] = 1;
  for (std::size_t i = 0; i < list.size(); ++i)
    for (Elem g : {w.a, w.b}) {
      Elem y = G.mul(list[i], g);
      if (!in[y]) {
        in[y] = 1;
        list.push_back(y);
      }
    }
  if (in[w.x]) return false;
  for (auto e : list)
    if (G.element_order(e) == list.size()) return false;  // cyclic
  return true;
}

std::optional<Subgroup> exhaustive_violation(const Group& G, std::size_t enum_cap) {
  for (const auto& cls : subgroups_up_to_conjugacy(G, enum_cap)) {
    const auto& H = cls.representative;
    if (is_cyclic(G, H)) continue;
    if (!centralizer(G, H).subset_of(H)) return H;
  }
  return std::nullopt;
}

// ------------------------------------------------------------ Frobenius groups

std::optional<FrobeniusStructure> frobenius_structure(const Group& G) {
  const std::size_t n = G.order();
  const auto classes = conjugacy_classes(G);
  for (const auto& N : normal_subgroups(G)) {
    const std::size_t k = N.size();
    if (k == 1 || k == n || nt::gcd(k, n / k) != 1) continue;
    bool ok = true;
    for (const auto& cls : classes) {
      const Elem x = cls.front();
      if (x == Group::identity || !N.contains(x)) continue;
      if (!centralizer(G, x).subset_of(N)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    // greedy complement: any subgroup meeting N trivially lies in a complement
    Elem start = 0;
    while (N.contains(start)) ++start;
    Subgroup L = centralizer(G, start);
    const std::size_t target = n / k;
    for (Elem y = 0; y < n && L.size() < target; ++y) {
      if (N.contains(y) || L.contains(y)) continue;
      SubgroupBuilder trial(G, L);
      trial.add(y);
      auto T = trial.build();
      if (target % T.size() != 0) continue;
      bool meets = false;
      for (auto e : T.members())
        if (e != Group::identity && N.contains(e)) {
          meets = true;
          break;
        }
      if (!meets) L = std::move(T);
    }
    const auto& Lsub = L;
    if (Lsub.size() != target) continue;
    return FrobeniusStructure{N, Lsub};
  }
  return std::nullopt;
}

// ------------------------------------------------------------ audit

AuditReport subgroup_closure_audit(const Group& G, std::size_t enum_cap, std::size_t brute_cap) {
  AuditReport rep;
  rep.group_is_x = is_x_bruteforce(G, brute_cap).result == XResult::IsX;
  for (const auto& cls : subgroups_up_to_conjugacy(G, enum_cap)) {
    const Group H = subgroup_as_group(G, cls.representative);
    AuditEntry e{cls.representative.size(), cls.class_size,
                 is_x_bruteforce(H, brute_cap).result == XResult::IsX};
    if (rep.group_is_x && !e.is_x) ++rep.violations;
    rep.classes.push_back(e);
  }
  return rep;
}

}  // namespace xgroup
