#include "xgroup/group.hpp"

#include <algorithm>
#include <random>

#include "xgroup/errors.hpp"

namespace xgroup {

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {}

Permutation Permutation::from_images(std::span<const std::int64_t> images) {
  const std::size_t n = images.size();
  if (n > 65535) fail(ErrorKind::InvalidPermutation, "degree exceeds 65535");
  std::vector<Point> out(n);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    auto v = images[i];
    if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v])
      fail(ErrorKind::InvalidPermutation,
           "images are not a bijection on {0.." + std::to_string(n ? n - 1 : 0) + "}");
    seen[v] = true;
    out[i] = static_cast<Point>(v);
  }
  return Permutation(std::move(out));
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> v(degree);
  for (std::size_t i = 0; i < degree; ++i) v[i] = static_cast<Point>(i);
  return Permutation(std::move(v));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  auto p = identity(degree);
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) p.images_[c[i]] = c[(i + 1) % c.size()];
  std::vector<std::int64_t> check(p.images_.begin(), p.images_.end());
  return from_images(check);
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = rhs.images_[images_[i]];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

// ---------------------------------------------------------------- Group

namespace {

std::uint64_t hash_points(const Point* p, std::size_t n) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h ^ (h >> 29);
}

constexpr std::uint32_t kEmpty = 0xffffffffu;

}  // namespace

long long Group::lookup(const Point* imgs) const {
  if (slots_.empty()) return -1;
  const std::size_t mask = slots_.size() - 1;
  std::size_t pos = hash_points(imgs, degree_) & mask;
  while (true) {
    auto s = slots_[pos];
    if (s == kEmpty) return -1;
    if (std::equal(imgs, imgs + degree_, points_.data() + static_cast<std::size_t>(s) * degree_))
      return s;
    pos = (pos + 1) & mask;
  }
}

void Group::build_index() {
  std::size_t cap = 16;
  while (cap < 2 * order_ + 2) cap <<= 1;
  slots_.assign(cap, kEmpty);
  const std::size_t mask = cap - 1;
  for (std::size_t e = 0; e < order_; ++e) {
    std::size_t pos = hash_points(points_.data() + e * degree_, degree_) & mask;
    while (slots_[pos] != kEmpty) pos = (pos + 1) & mask;
    slots_[pos] = static_cast<std::uint32_t>(e);
  }
}

long long Group::find(std::span<const Point> images) const {
  if (images.size() != degree_) return -1;
  return lookup(images.data());
}

Elem Group::mul_slow(Elem a, Elem b) const {
  thread_local std::vector<Point> buf;
  buf.resize(degree_);
  const Point* pa = points_.data() + static_cast<std::size_t>(a) * degree_;
  const Point* pb = points_.data() + static_cast<std::size_t>(b) * degree_;
  for (std::size_t i = 0; i < degree_; ++i) buf[i] = pb[pa[i]];
  auto r = lookup(buf.data());
  if (r < 0) fail(ErrorKind::InternalInvariantViolation, "product escaped the group");
  return static_cast<Elem>(r);
}

Elem Group::pow(Elem a, long long k) const {
  const long long n = orders_[a];
  k %= n;
  if (k < 0) k += n;
  Elem r = identity, b = a;
  while (k) {
    if (k & 1) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

Permutation Group::permutation(Elem a) const {
  auto s = images(a);
  return Permutation(std::vector<Point>(s.begin(), s.end()));
}

std::vector<Permutation> Group::generator_permutations() const {
  std::vector<Permutation> out;
  for (auto g : gens_) out.push_back(permutation(g));
  return out;
}

std::vector<std::size_t> Group::word(Elem a) const {
  std::vector<std::size_t> w;
  while (a != identity) {
    w.push_back(parent_gen_[a]);
    a = parent_[a];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

void Group::finish() {
  // inverses
  inv_.assign(order_, 0);
  if (table_input_) {
    for (std::size_t i = 0; i < order_; ++i)
      for (std::size_t j = 0; j < order_; ++j)
        if (table_[i * order_ + j] == 0) {
          inv_[i] = static_cast<Elem>(j);
          break;
        }
  } else {
    std::vector<Point> buf(degree_);
    for (std::size_t e = 0; e < order_; ++e) {
      const Point* p = points_.data() + e * degree_;
      for (std::size_t i = 0; i < degree_; ++i) buf[p[i]] = static_cast<Point>(i);
      auto r = lookup(buf.data());
      if (r < 0) fail(ErrorKind::InternalInvariantViolation, "inverse escaped the group");
      inv_[e] = static_cast<Elem>(r);
    }
  }
  orders_.assign(order_, 0);
  orders_[0] = 1;
  for (std::size_t e = 1; e < order_; ++e) {
    if (orders_[e]) continue;
    unsigned k = 1;
    Elem x = static_cast<Elem>(e);
    while (x != identity) {
      x = mul(x, static_cast<Elem>(e));
      ++k;
    }
    orders_[e] = k;
    orders_[inv_[e]] = k;
  }
}

Group Group::from_generators(std::size_t degree, std::span<const Permutation> gens,
                             std::size_t cap) {
  if (cap < 1) fail(ErrorKind::InvalidParameter, "cap must be at least 1");
  if (degree > 65535) fail(ErrorKind::InvalidPermutation, "degree exceeds 65535");
  for (const auto& g : gens) {
    if (g.degree() != degree)
      fail(ErrorKind::InvalidPermutation, "generator degree does not match group degree");
    std::vector<std::int64_t> imgs(g.images().begin(), g.images().end());
    (void)Permutation::from_images(imgs);
  }
  Group G;
  G.degree_ = degree;
  G.order_ = 1;
  auto id = Permutation::identity(degree);
  G.points_ = id.images();
  G.parent_ = {0};
  G.parent_gen_ = {0};
  G.build_index();

  const std::size_t ng = gens.size();
  std::vector<Elem> right;  // right[x * ng + s] = x * gen_s
  std::vector<Point> buf(degree);
  std::vector<Elem> gen_index(ng, 0);
  for (std::size_t x = 0; x < G.order_; ++x) {
    for (std::size_t s = 0; s < ng; ++s) {
      const Point* px = G.points_.data() + x * degree;
      const auto& ps = gens[s].images();
      for (std::size_t i = 0; i < degree; ++i) buf[i] = ps[px[i]];
      auto r = G.lookup(buf.data());
      if (r < 0) {
        if (G.order_ + 1 > cap)
          fail(ErrorKind::CapExceeded,
               "group order exceeds cap " + std::to_string(cap));
        G.points_.insert(G.points_.end(), buf.begin(), buf.end());
        G.parent_.push_back(static_cast<Elem>(x));
        G.parent_gen_.push_back(static_cast<std::uint32_t>(s));
        r = static_cast<long long>(G.order_);
        ++G.order_;
        if (2 * G.order_ + 2 > G.slots_.size()) {
          G.build_index();
        } else {
          const std::size_t mask = G.slots_.size() - 1;
          std::size_t pos = hash_points(buf.data(), degree) & mask;
          while (G.slots_[pos] != kEmpty) pos = (pos + 1) & mask;
          G.slots_[pos] = static_cast<std::uint32_t>(r);
        }
      }
      right.push_back(static_cast<Elem>(r));
      if (x == 0) gen_index[s] = static_cast<Elem>(r);
    }
  }
  // may contain the identity or repeats; word() indexes the input list
  G.gens_ = gen_index;

  const std::size_t n = G.order_;
  if (n <= kDenseTableThreshold) {
    G.table_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      auto* row = G.table_.data() + i * n;
      row[0] = static_cast<std::uint16_t>(i);
      for (std::size_t j = 1; j < n; ++j)
        row[j] = static_cast<std::uint16_t>(right[row[G.parent_[j]] * ng + G.parent_gen_[j]]);
    }
  }
  G.finish();
  return G;
}

Group Group::from_table(const std::vector<std::vector<Elem>>& table) {
  const std::size_t n = table.size();
  if (n == 0) fail(ErrorKind::ParseError, "empty table");
  if (n > kDenseTableThreshold)
    fail(ErrorKind::CapExceeded, "table input limited to order " +
                                     std::to_string(kDenseTableThreshold));
  Group G;
  G.order_ = n;
  G.degree_ = n;
  G.table_input_ = true;
  G.table_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) fail(ErrorKind::ParseError, "table is not square");
    std::vector<bool> seen(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      auto v = table[i][j];
      if (v >= n || seen[v]) fail(ErrorKind::ParseError, "table row is not a permutation");
      seen[v] = true;
      G.table_[i * n + j] = static_cast<std::uint16_t>(v);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (G.table_[i] != i || G.table_[i * n] != i)
      fail(ErrorKind::ParseError, "element 0 is not the identity");
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      auto v = G.table_[i * n + j];
      if (seen[v]) fail(ErrorKind::ParseError, "table column is not a permutation");
      seen[v] = true;
    }
  }
  auto m = [&](std::size_t a, std::size_t b) { return G.table_[a * n + b]; };
  if (n <= 256) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        auto ab = m(a, b);
        for (std::size_t c = 0; c < n; ++c)
          if (m(ab, c) != m(a, m(b, c))) fail(ErrorKind::ParseError, "table is not associative");
      }
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> d(0, n - 1);
    for (int t = 0; t < 100000; ++t) {
      auto a = d(rng), b = d(rng), c = d(rng);
      if (m(m(a, b), c) != m(a, m(b, c))) fail(ErrorKind::ParseError, "table is not associative");
    }
  }
  // right regular representation: g -> (x -> x g)
  G.points_.resize(n * n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t x = 0; x < n; ++x) G.points_[g * n + x] = static_cast<Point>(m(x, g));
  G.build_index();

  // greedy generating set, then BFS tree for words
  SubgroupBuilder b(G);
  for (std::size_t e = 1; e < n; ++e)
    if (!b.contains(static_cast<Elem>(e))) {
      b.add(static_cast<Elem>(e));
      G.gens_.push_back(static_cast<Elem>(e));
    }
  G.parent_.assign(n, 0);
  G.parent_gen_.assign(n, 0);
  std::vector<bool> seen(n, false);
  std::vector<Elem> queue{0};
  seen[0] = true;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    auto x = queue[qi];
    for (std::size_t s = 0; s < G.gens_.size(); ++s) {
      auto y = m(x, G.gens_[s]);
      if (!seen[y]) {
        seen[y] = true;
        G.parent_[y] = x;
        G.parent_gen_[y] = static_cast<std::uint32_t>(s);
        queue.push_back(y);
      }
    }
  }
  G.finish();
  return G;
}

// ---------------------------------------------------------------- Subgroup

Subgroup Subgroup::from_members(const Group& parent, std::vector<Elem> members) {
  std::sort(members.begin(), members.end());
  SubgroupBuilder b(parent);
  for (auto e : members)
    if (!b.contains(e)) b.add(e);
  auto s = b.build();
  if (s.members_ != members)
    fail(ErrorKind::InternalInvariantViolation, "member list is not a subgroup");
  return s;
}

Subgroup Subgroup::trivial(const Group& parent) { return SubgroupBuilder(parent).build(); }

Subgroup Subgroup::whole(const Group& parent) {
  SubgroupBuilder b(parent);
  for (auto g : parent.generators()) b.add(g);
  return b.build();
}

bool Subgroup::subset_of(const Subgroup& other) const {
  if (size() > other.size()) return false;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] & ~other.bits_[i]) return false;
  return true;
}

std::size_t Subgroup::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (auto w : bits_) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------- SubgroupBuilder

SubgroupBuilder::SubgroupBuilder(const Group& parent)
    : g_(parent), bits_((parent.order() + 63) / 64, 0) {
  insert(Group::identity);
}

SubgroupBuilder::SubgroupBuilder(const Group& parent, const Subgroup& start)
    : g_(parent), list_(start.members()), bits_(start.bits_), gens_(start.generators()) {
  // keep identity first so coset blocks line up
  auto it = std::find(list_.begin(), list_.end(), Group::identity);
  std::iter_swap(list_.begin(), it);
}

// Dimino-style extension: the current list is closed, so the new group is a
// union of right cosets of it; each coset is appended as a contiguous block.
bool SubgroupBuilder::add(Elem g) {
  if (contains(g)) return false;
  add_until(g, {});
  return true;
}

bool SubgroupBuilder::add_until(Elem g, std::span<const Elem> targets) {
  auto reached = [&] {
    if (targets.empty()) return false;
    for (auto t : targets)
      if (!contains(t)) return false;
    return true;
  };
  if (contains(g)) return reached();
  gens_.push_back(g);
  const std::size_t block = list_.size();
  const std::vector<Elem> base(list_.begin(), list_.end());
  auto add_coset = [&](Elem rep) {
    for (auto h : base) insert(g_.mul(h, rep));
  };
  add_coset(g);
  if (reached()) return true;
  for (std::size_t pos = block; pos < list_.size(); pos += block) {
    const Elem rep = list_[pos];
    for (auto s : gens_) {
      const Elem y = g_.mul(rep, s);
      if (!contains(y)) {
        add_coset(y);
        if (reached()) return true;
      }
    }
  }
  return reached();
}

void SubgroupBuilder::normalize_under(std::span<const Elem> by) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < gens_.size(); ++i)
      for (auto b : by) {
        auto c = g_.conj(gens_[i], b);
        if (!contains(c)) {
          add(c);
          changed = true;
        }
      }
  }
}

Subgroup SubgroupBuilder::build() const {
  Subgroup s;
  s.members_ = list_;
  std::sort(s.members_.begin(), s.members_.end());
  s.bits_ = bits_;
  s.gens_ = gens_;
  return s;
}

}  // namespace xgroup
