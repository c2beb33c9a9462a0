#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "xgroup/constructors.hpp"
#include "xgroup/engine.hpp"
#include "xgroup/errors.hpp"
#include "xgroup/fingerprint.hpp"

using namespace xgroup;

namespace {

Group sym(std::size_t n) {
  std::vector<Permutation> g{Permutation::from_cycles(n, {{0, 1}})};
  std::vector<Point> cyc(n);
  std::iota(cyc.begin(), cyc.end(), Point{0});
  g.push_back(Permutation::from_cycles(n, {cyc}));
  return Group::from_generators(n, g);
}

}  // namespace

TEST_SUITE("engine") {
  TEST_CASE("closure of generators") {
    CHECK(sym(4).order() == 24);
    CHECK(sym(5).order() == 120);
    const std::vector<Permutation> none;
    CHECK(Group::from_generators(2, none).order() == 1);
    const auto sl25 = matrix_group(MatrixKind::SL2, 5).group;
    CHECK(sl25.order() == 5 * 24);
  }

  TEST_CASE("group axioms") {
    const Group G = sym(4);
    for (Elem a = 0; a < G.order(); ++a) {
      CHECK(G.mul(a, Group::identity) == a);
      CHECK(G.mul(a, G.inv(a)) == Group::identity);
      for (Elem b = 0; b < G.order(); ++b)
        for (Elem c = 0; c < G.order(); ++c) CHECK(G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c)));
    }
  }

  TEST_CASE("invalid input") {
    CHECK_THROWS_AS(Permutation::from_images(std::vector<std::int64_t>{0, 0, 1}), Error);
    CHECK_THROWS_AS(sym(9).order(), Error);  // 362880 > cap
  }

  TEST_CASE("closure, centralizer and center match naive versions") {
    const Group G = sym(4);
    for (Elem a = 0; a < G.order(); a += 3)
      for (Elem b = 0; b < G.order(); b += 5) {
        CHECK(closure(G, {a, b}).members() == oracle::closure(G, {a, b}));
        const std::vector<Elem> xs{a, b};
        CHECK(centralizer(G, std::span<const Elem>(xs)).members() == oracle::centralizer(G, xs));
      }
    std::vector<Elem> all(G.order());
    std::iota(all.begin(), all.end(), Elem{0});
    CHECK(center(G).members() == oracle::centralizer(G, all));
    CHECK(center(G).size() == 1);
  }

  TEST_CASE("conjugacy classes of Sym(5)") {
    const Group G = sym(5);
    const auto cls = conjugacy_classes(G);
    CHECK(cls.size() == 7);
    std::size_t total = 0;
    for (const auto& c : cls) {
      total += c.size();
      CHECK(G.order() % c.size() == 0);
      CHECK(c.size() * centralizer(G, c.front()).size() == G.order());
    }
    CHECK(total == 120);
  }

  TEST_CASE("word evaluation") {
    const Group G = sym(4);
    for (Elem g = 0; g < G.order(); ++g) {
      Elem x = Group::identity;
      for (auto i : G.word(g)) x = G.mul(x, G.generators()[i]);
      CHECK(x == g);
    }
  }

  TEST_CASE("quotients") {
    const Group G = sym(4);
    const auto ns = normal_subgroups(G);
    REQUIRE(ns.size() == 4);
    CHECK(ns[1].size() == 4);
    CHECK(quotient(G, ns[1]).order() == 6);
    CHECK(quotient(G, ns[2]).order() == 2);
    for (const auto& N : ns) CHECK(oracle::normal(G, N.members()));
  }

  TEST_CASE("Sylow subgroups") {
    const auto G = matrix_group(MatrixKind::PSL2, 7).group;
    CHECK(sylow(G, 2).size() == 8);
    CHECK(sylow(G, 3).size() == 3);
    CHECK(sylow(G, 7).size() == 7);
    CHECK(p_core(G, 2).size() == 1);
  }

  TEST_CASE("structure tests") {
    CHECK(is_simple(sym_alt(5, true).group));
    CHECK_FALSE(is_simple(sym(4)));
    CHECK(is_soluble(sym(4)));
    CHECK_FALSE(is_supersoluble(sym(4)));
    CHECK(is_supersoluble(sym(3)));
    CHECK(is_nilpotent(two_group(TwoGroupKind::Quaternion, 16).group));
    CHECK(is_quasisimple(matrix_group(MatrixKind::SL2, 5).group));
    CHECK(derived_subgroup(sym(4)).size() == 12);
  }

  TEST_CASE("generalized Fitting subgroup") {
    const Group S4 = sym(4);
    const auto f = generalized_fitting(S4);
    CHECK(f.fstar.size() == 4);
    CHECK(f.components.empty());
    const auto sl = matrix_group(MatrixKind::SL2, 5).group;
    const auto g = generalized_fitting(sl);
    CHECK(g.fstar.size() == 120);
    CHECK(g.components.size() == 1);
    CHECK(generalized_fitting(sym(5)).fstar.size() == 60);
  }

  TEST_CASE("fingerprints") {
    const auto fp = fingerprint(sym(4));
    CHECK(fp.order == 24);
    CHECK(fp.derived_order == 12);
    CHECK(fp.abelianization_invariants == std::vector<std::uint64_t>{2});
    std::size_t s = 0;
    for (auto [o, c] : fp.element_order_multiset) s += c;
    CHECK(s == 24);
    CHECK(fingerprint(two_group(TwoGroupKind::Quaternion, 8).group) !=
          fingerprint(two_group(TwoGroupKind::Dihedral, 8).group));
    CHECK(fingerprint(matrix_group(MatrixKind::SL2, 4).group) == fingerprint(sym_alt(5, true).group));
  }

  TEST_CASE("large groups use the hashed representation") {
    const auto G = matrix_group(MatrixKind::SL2, 17).group;
    CHECK(G.representation() == Representation::PermutationHashed);
    CHECK(G.order() == 4896);
    const Elem a = 123, b = 4000;
    CHECK(G.mul(G.mul(a, b), G.inv(b)) == a);
  }
}
