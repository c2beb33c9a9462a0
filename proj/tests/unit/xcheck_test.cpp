#include <doctest.h>

#include "oracles.hpp"
#include "xgroup/constructors.hpp"
#include "xgroup/engine.hpp"
#include "xgroup/fingerprint.hpp"
#include "xgroup/xcheck.hpp"

using namespace xgroup;

namespace {

// <a, b, x> is the non-X subgroup the witness exhibits; <a, b> is the part
// that fails to be self-centralizing inside it.
Fingerprint witness_fingerprint(const Group& G, const Witness& w) {
  return fingerprint(subgroup_as_group(G, closure(G, {w.a, w.b, w.x})));
}

Elem find_perm(const Group& G, const Permutation& p) {
  const long long i = G.find(p.images());
  REQUIRE(i >= 0);
  return static_cast<Elem>(i);
}

}  // namespace

TEST_SUITE("xcheck") {
  TEST_CASE("brute force on small groups") {
    CHECK(is_x_bruteforce(two_group(TwoGroupKind::Quaternion, 8).group).result == XResult::IsX);
    CHECK(is_x_bruteforce(basic_abelian({96}).group).result == XResult::IsX);
    CHECK(is_x_bruteforce(basic_abelian({}).group).result == XResult::IsX);
    const Group S5 = sym_alt(5, false).group;
    const auto v = is_x_bruteforce(S5);
    REQUIRE(v.result == XResult::NotX);
    REQUIRE(v.witness);
    CHECK(verify_witness(S5, *v.witness));
    CHECK(witness_fingerprint(S5, *v.witness) == fingerprint(metacyclic(6, 2, 5).group));
  }

  TEST_CASE("recursive checker") {
    CHECK(is_x_recursive(sym_alt(4, false).group).result == XResult::IsX);
    CHECK(is_x_recursive(basic_abelian({}).group).result == XResult::IsX);
    const Group P = matrix_group(MatrixKind::PGL2, 9).group;
    const auto v = is_x_recursive(P);
    REQUIRE(v.result == XResult::NotX);
    REQUIRE(v.witness);
    CHECK(verify_witness(P, *v.witness));
    CHECK(witness_fingerprint(P, *v.witness) == fingerprint(metacyclic(10, 2, 9).group));
  }

  TEST_CASE("both checkers agree with the naive lattice definition") {
    std::vector<Group> groups{sym_alt(4, false).group,
                              sym_alt(4, true).group,
                              metacyclic(6, 2, 5).group,
                              metacyclic(7, 3, 2).group,
                              metacyclic(5, 4, 4).group,
                              basic_abelian({2, 4}).group,
                              basic_abelian({3, 3}).group,
                              two_group(TwoGroupKind::Semidihedral, 16).group,
                              matrix_group(MatrixKind::SL2, 3).group,
                              extraspecial(3, ExponentKind::PSquared).group};
    for (const auto& G : groups) {
      CAPTURE(G.order());
      const bool expect = oracle::is_x(G, oracle::small_subgroups(G, 2));
      const auto b = is_x_bruteforce(G), r = is_x_recursive(G);
      CHECK((b.result == XResult::IsX) == expect);
      CHECK((r.result == XResult::IsX) == expect);
      CHECK(exhaustive_violation(G).has_value() == !expect);
      if (b.witness) CHECK(verify_witness(G, *b.witness));
      if (r.witness) CHECK(verify_witness(G, *r.witness));
    }
  }

  TEST_CASE("fabricated witnesses are rejected") {
    const Group Q = two_group(TwoGroupKind::Quaternion, 8).group;
    // any two non-commuting elements generate Q8, so no x lies outside
    for (Elem a = 0; a < Q.order(); ++a)
      for (Elem b = 0; b < Q.order(); ++b)
        if (!Q.commute(a, b))
          for (Elem x = 0; x < Q.order(); ++x) CHECK_FALSE(verify_witness(Q, {a, b, x}));
    const Group S4 = sym_alt(4, false).group;
    const Elem t1 = find_perm(S4, Permutation::from_cycles(4, {{0, 1}}));
    const Elem t2 = find_perm(S4, Permutation::from_cycles(4, {{2, 3}}));
    CHECK_FALSE(verify_witness(S4, {t1, t2, S4.mul(t1, t2)}));
    CHECK_FALSE(verify_witness(S4, {t1, t1, t2}));  // <t1> is cyclic
  }

  TEST_CASE("Frobenius structure") {
    const auto a = frobenius_structure(metacyclic(7, 3, 2).group);
    REQUIRE(a);
    CHECK(a->kernel.size() == 7);
    CHECK(a->complement.size() == 3);
    CHECK_FALSE(frobenius_structure(sym_alt(4, false).group));
    const auto q = frobenius_structure(affine_frobenius(3, parse_complement("quaternion(8)")).group);
    REQUIRE(q);
    CHECK(q->kernel.size() == 9);
    CHECK(q->complement.size() == 8);
    CHECK(frobenius_structure(sym_alt(3, false).group));
    CHECK_FALSE(frobenius_structure(basic_abelian({6}).group));
  }

  TEST_CASE("subgroup closure audit") {
    const auto sl = subgroup_closure_audit(matrix_group(MatrixKind::SL2, 3).group);
    CHECK(sl.group_is_x);
    CHECK(sl.classes.size() == 7);
    CHECK(sl.violations == 0);
    for (const auto& c : sl.classes) CHECK(c.is_x);

    const auto s5 = subgroup_closure_audit(sym_alt(5, false).group);
    CHECK_FALSE(s5.group_is_x);
    bool whole = false, twelve = false;
    for (const auto& c : s5.classes) {
      if (c.order <= 8) CHECK(c.is_x);
      if (c.order == 120) whole = !c.is_x;
      if (c.order == 12 && !c.is_x) twelve = true;
    }
    CHECK(whole);
    CHECK(twelve);

    const auto c30 = subgroup_closure_audit(basic_abelian({30}).group);
    CHECK(c30.classes.size() == 8);
    for (const auto& c : c30.classes) CHECK(c.is_x);
  }
}
