#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace xgroup {

using Elem = std::uint32_t;
using Point = std::uint16_t;

/// Groups up to this order keep a dense multiplication table.
inline constexpr std::size_t kDenseTableThreshold = 2048;
/// Hard ceiling on materialized group orders.
inline constexpr std::size_t kMaxGroupOrder = 20000;

/// A permutation of {0, ..., degree-1}. Composition is left to right:
/// (a * b)(x) = b(a(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> images);
  /// Throws InvalidPermutation unless `images` is a bijection.
  static Permutation from_images(std::span<const std::int64_t> images);
  static Permutation identity(std::size_t degree);
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<Point> images_;
};

enum class Representation { DenseTable, PermutationHashed };

/// A finite group materialized as an indexed element list. Element 0 is the
/// identity. Every element also carries a permutation image, so subgroups can
/// be rebuilt as standalone groups without going through a table.
class Group {
 public:
  static constexpr Elem identity = 0;

  /// Closure of `gens` in breadth-first order from the identity, generators
  /// scanned in input order.
  static Group from_generators(std::size_t degree,
                               std::span<const Permutation> gens,
                               std::size_t cap = kMaxGroupOrder);

  /// Group given by its Cayley table (row i, column j = index of g_i g_j).
  /// Element order is preserved; element 0 must be the identity.
  static Group from_table(const std::vector<std::vector<Elem>>& table);

  std::size_t order() const { return order_; }
  std::size_t degree() const { return degree_; }
  Representation representation() const {
    return table_.empty() ? Representation::PermutationHashed
                          : Representation::DenseTable;
  }
  /// True when built from an explicit table; its permutations are the right
  /// regular representation.
  bool from_table_input() const { return table_input_; }

  Elem mul(Elem a, Elem b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order_ + b];
    return mul_slow(a, b);
  }
  Elem inv(Elem a) const { return inv_[a]; }
  /// x^g = g^-1 x g
  Elem conj(Elem x, Elem g) const { return mul(mul(inv_[g], x), g); }
  /// [a, b] = a^-1 b^-1 a b
  Elem commutator(Elem a, Elem b) const {
    return mul(mul(inv_[a], inv_[b]), mul(a, b));
  }
  Elem pow(Elem a, long long k) const;
  bool commute(Elem a, Elem b) const { return mul(a, b) == mul(b, a); }

  unsigned element_order(Elem a) const { return orders_[a]; }
  const std::vector<unsigned>& element_orders() const { return orders_; }

  std::span<const Point> images(Elem a) const {
    return {points_.data() + static_cast<std::size_t>(a) * degree_, degree_};
  }
  Permutation permutation(Elem a) const;
  /// Index of the element with the given permutation image, or -1.
  long long find(std::span<const Point> images) const;

  const std::vector<Elem>& generators() const { return gens_; }
  std::vector<Permutation> generator_permutations() const;

  /// Word in the generators (indices into generators()) evaluating to `a`.
  std::vector<std::size_t> word(Elem a) const;

 private:
  Group() = default;
  Elem mul_slow(Elem a, Elem b) const;
  void build_index();
  long long lookup(const Point* imgs) const;
  void finish();  // inverses, orders, dense table

  std::size_t order_ = 0;
  std::size_t degree_ = 0;
  bool table_input_ = false;
  std::vector<Point> points_;
  std::vector<std::uint16_t> table_;
  std::vector<Elem> inv_;
  std::vector<unsigned> orders_;
  std::vector<Elem> gens_;
  std::vector<Elem> parent_;               // BFS tree for words
  std::vector<std::uint32_t> parent_gen_;
  std::vector<std::uint32_t> slots_;       // open-addressing index
};

/// A subgroup of some parent group, stored as a sorted member list plus a
/// membership bitset. The parent is passed explicitly to every operation.
class Subgroup {
 public:
  Subgroup() = default;
  /// `members` must already be closed; generators are chosen greedily.
  static Subgroup from_members(const class Group& parent, std::vector<Elem> members);
  static Subgroup trivial(const Group& parent);
  static Subgroup whole(const Group& parent);

  std::size_t size() const { return members_.size(); }
  bool contains(Elem e) const { return (bits_[e >> 6] >> (e & 63)) & 1u; }
  const std::vector<Elem>& members() const { return members_; }
  const std::vector<Elem>& generators() const { return gens_; }
  bool subset_of(const Subgroup& other) const;
  bool operator==(const Subgroup& o) const { return bits_ == o.bits_; }
  std::size_t hash() const;

 private:
  friend class SubgroupBuilder;
  std::vector<Elem> members_;
  std::vector<std::uint64_t> bits_;
  std::vector<Elem> gens_;
};

/// Incremental closure. Used by the engine and by anything that needs to grow
/// a subgroup one generator at a time with an early stop.
class SubgroupBuilder {
 public:
  explicit SubgroupBuilder(const Group& parent);
  SubgroupBuilder(const Group& parent, const Subgroup& start);

  bool contains(Elem e) const { return (bits_[e >> 6] >> (e & 63)) & 1u; }
  std::size_t size() const { return list_.size(); }
  /// Adds a generator and closes. Returns false if it was already a member.
  bool add(Elem g);
  /// Like add(), but stops as soon as every element of `targets` is a member.
  /// Returns true if the targets were all reached (closure may be partial).
  bool add_until(Elem g, std::span<const Elem> targets);
  /// Conjugates of current generators by `by` are added until stable.
  void normalize_under(std::span<const Elem> by);
  Subgroup build() const;

 private:
  const Group& g_;
  std::vector<Elem> list_;
  std::vector<std::uint64_t> bits_;
  std::vector<Elem> gens_;
  void insert(Elem e) {
    bits_[e >> 6] |= std::uint64_t{1} << (e & 63);
    list_.push_back(e);
  }
};

}  // namespace xgroup
