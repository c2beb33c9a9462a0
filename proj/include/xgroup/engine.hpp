#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "xgroup/group.hpp"

namespace xgroup {

inline constexpr std::size_t kDefaultEnumerationCap = 2048;

// ---- closure and conjugation ----------------------------------------------

Subgroup closure(const Group& G, std::span<const Elem> seed);
Subgroup closure(const Group& G, std::initializer_list<Elem> seed);

/// Smallest normal subgroup of G containing `seed`.
Subgroup normal_closure(const Group& G, std::span<const Elem> seed);
/// Normal closure of `seed` inside the subgroup H.
Subgroup normal_closure_in(const Group& G, const Subgroup& H, std::span<const Elem> seed);

Subgroup centralizer(const Group& G, Elem x);
/// Elements commuting with every element of `xs`.
Subgroup centralizer(const Group& G, std::span<const Elem> xs);
Subgroup centralizer(const Group& G, const Subgroup& H);
Subgroup center(const Group& G);
Subgroup normalizer(const Group& G, const Subgroup& H);

/// H^g as a subgroup.
Subgroup conjugate(const Group& G, const Subgroup& H, Elem g);
Subgroup intersection(const Group& G, const Subgroup& A, const Subgroup& B);
/// <A, B>
Subgroup join(const Group& G, const Subgroup& A, const Subgroup& B);

/// Conjugacy classes ordered by (element order, class size, smallest member).
/// Each class is sorted; its representative is its smallest member.
std::vector<std::vector<Elem>> conjugacy_classes(const Group& G);
/// class_id[e] = position of e's class in conjugacy_classes(G).
std::vector<std::uint32_t> class_ids(const Group& G,
                                     const std::vector<std::vector<Elem>>& classes);

// ---- predicates -------------------------------------------------------------

struct SubgroupFlags {
  bool is_cyclic = false;
  bool is_abelian = false;
  bool is_normal = false;
  bool is_perfect = false;
};

bool is_cyclic(const Group& G, const Subgroup& H);
bool is_abelian(const Group& G, const Subgroup& H);
bool is_normal(const Group& G, const Subgroup& H);
SubgroupFlags subgroup_predicates(const Group& G, const Subgroup& H);

Subgroup derived_subgroup(const Group& G, const Subgroup& H);
Subgroup derived_subgroup(const Group& G);
/// Last term of the derived series of H.
Subgroup perfect_residual(const Group& G, const Subgroup& H);

/// Cosets of a normal subgroup, with induced multiplication. Cosets are
/// ordered by their smallest member.
struct QuotientMap {
  std::vector<std::uint32_t> coset_of;  // element -> coset index
  std::vector<Elem> representative;     // coset -> smallest member
};
Group quotient(const Group& G, const Subgroup& N, QuotientMap* map = nullptr);

// ---- Sylow and Fitting machinery ------------------------------------------

/// A Sylow p-subgroup grown by normalizer ascent.
Subgroup sylow(const Group& G, std::uint64_t p);
/// Largest normal p-subgroup.
Subgroup p_core(const Group& G, std::uint64_t p);
Subgroup fitting(const Group& G);

struct GeneralizedFitting {
  Subgroup fitting;
  std::vector<Subgroup> components;
  Subgroup fstar;
};
GeneralizedFitting generalized_fitting(const Group& G);

struct StructureFlags {
  bool is_nilpotent = false;
  bool is_supersoluble = false;
  bool is_simple = false;
  bool is_quasisimple = false;
};
bool is_nilpotent(const Group& G);
bool is_soluble(const Group& G);
bool is_supersoluble(const Group& G);
bool is_simple(const Group& G);
bool is_quasisimple(const Group& G);
StructureFlags structure_tests(const Group& G);

/// All normal subgroups, sorted by order then member list.
std::vector<Subgroup> normal_subgroups(const Group& G);

// ---- subgroups as standalone groups ----------------------------------------

/// H rebuilt as a Group (same degree, permutation images from the parent).
/// If `embedding` is given it receives, for each element of the new group,
/// its index in G.
Group subgroup_as_group(const Group& G, const Subgroup& H,
                        std::vector<Elem>* embedding = nullptr);

// ---- subgroup lattice -------------------------------------------------------

struct SubgroupClass {
  Subgroup representative;
  std::size_t class_size = 0;
};

/// One representative per conjugacy class of subgroups, ordered by subgroup
/// order and discovery.
std::vector<SubgroupClass> subgroups_up_to_conjugacy(
    const Group& G, std::size_t cap = kDefaultEnumerationCap);

bool are_conjugate(const Group& G, const Subgroup& A, const Subgroup& B);

}  // namespace xgroup
