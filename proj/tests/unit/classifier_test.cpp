#include <doctest.h>

#include "xgroup/classifier.hpp"
#include "xgroup/constructors.hpp"
#include "xgroup/engine.hpp"
#include "xgroup/errors.hpp"
#include "xgroup/fingerprint.hpp"

using namespace xgroup;

namespace {

bool mentions(const TheoremCase& tc, const std::string& needle) {
  for (const auto& e : tc.evidence)
    if (e.fact.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_SUITE("classifier") {
  TEST_CASE("labels on named examples") {
    CHECK(classify(matrix_group(MatrixKind::SL2, 3).group).label == "3.2.1");
    CHECK(classify(m10().group).label == "4.2");
    CHECK(classify(basic_abelian({}).group).label == "1.1");
    const auto mc = classify(metacyclic(5, 4, 4).group);
    CHECK(mc.label == "2.1.3");
    CHECK(mc.parameters["q"] == 2);
    CHECK(mc.parameters["Z"] == 2);
    const auto psl11 = classify(matrix_group(MatrixKind::PSL2, 11).group);
    CHECK(psl11.label == "NotX");
    REQUIRE(psl11.witness);
    CHECK(verify_witness(matrix_group(MatrixKind::PSL2, 11).group, *psl11.witness));
  }

  TEST_CASE("every positive label carries verified evidence") {
    for (const auto& rec : {metacyclic(7, 3, 2), sym_alt(4, false), extraspecial(5, ExponentKind::P),
                            heisenberg_extension(5, 3), sl2p_dot2(5), quaternion_metacyclic(3, 8)}) {
      const auto tc = classify(rec.group);
      CAPTURE(rec.family);
      CHECK(tc.label == rec.intended_case);
      REQUIRE_FALSE(tc.evidence.empty());
      for (const auto& e : tc.evidence) CHECK(e.verified);
      CHECK(tc.confirmation == "brute");
      CHECK_FALSE(tc.witness);
    }
  }

  TEST_CASE("explanations") {
    const auto s4 = classify(sym_alt(4, false).group);
    CHECK(mentions(s4, "F* elementary abelian of order 2^2 and minimal normal"));
    CHECK(mentions(s4, "G/F* of order 6"));
    const auto q8 = classify(two_group(TwoGroupKind::Quaternion, 8).group);
    CHECK(mentions(q8, "nilpotent"));
    CHECK(mentions(q8, "quaternion fingerprint"));
    const auto e = classify(extraspecial_frobenius(7, 3, 1).group);
    CHECK(mentions(e, "extraspecial of order 7^3"));
    CHECK(mentions(e, "cyclic complement of odd order 3"));
    const std::string text = explain(e);
    CHECK(text.find("[ok]") != std::string::npos);
    CHECK(text.find("=> case 2.2") != std::string::npos);
  }

  TEST_CASE("Fermat and Mersenne gate on PSL2(p)") {
    CHECK(classify(matrix_group(MatrixKind::PSL2, 3).group).label == "3.1.1");
    for (std::uint32_t p : {5u, 7u}) CHECK(classify(matrix_group(MatrixKind::PSL2, p).group).label == "4.2");
    for (std::uint32_t p : {11u, 13u}) CHECK(classify(matrix_group(MatrixKind::PSL2, p).group).label == "NotX");
  }

  TEST_CASE("aliases receive one label") {
    CHECK(classify(matrix_group(MatrixKind::SL2, 4).group).label == "4.2");
    CHECK(classify(matrix_group(MatrixKind::PSL2, 5).group).label == "4.2");
    CHECK(classify(sym_alt(5, true).group).label == "4.2");
    CHECK(classify(matrix_group(MatrixKind::PSL2, 9).group).label == "4.2");
    CHECK(classify(sym_alt(6, true).group).label == "4.2");
  }

  TEST_CASE("sibling cases are exclusive") {
    // 2.1.1 has trivial center, 2.1.3 does not
    const auto a = classify(metacyclic(7, 3, 2).group);
    const auto b = classify(metacyclic(5, 4, 4).group);
    CHECK(a.label == "2.1.1");
    CHECK(center(metacyclic(7, 3, 2).group).size() == 1);
    CHECK(b.label == "2.1.3");
    CHECK(center(metacyclic(5, 4, 4).group).size() > 1);
  }

  TEST_CASE("above the brute cap") {
    const auto tc = classify(extraspecial_frobenius(13, 3, 1).group);
    CHECK(tc.label == "2.2");
    CHECK(tc.confirmation == "structural-only");
    const auto x = cross_check(extraspecial_frobenius(13, 3, 1).group);
    CHECK(x.status == CrossStatus::Warn);
    CHECK_FALSE(x.brute);
  }

  TEST_CASE("cross check") {
    const auto d12 = cross_check(metacyclic(6, 2, 5).group);
    CHECK(d12.label == "NotX");
    CHECK(d12.brute == XResult::NotX);
    CHECK(d12.status == CrossStatus::Match);
    const auto c1 = cross_check(basic_abelian({}).group);
    CHECK(c1.label == "1.1");
    CHECK(c1.brute == XResult::IsX);
    CHECK(c1.status == CrossStatus::Match);
  }

  TEST_CASE("Dih(12) witness is a Sym(3) centralized by the center") {
    const Group G = metacyclic(6, 2, 5).group;
    const auto tc = classify(G);
    REQUIRE(tc.witness);
    const auto H = closure(G, {tc.witness->a, tc.witness->b});
    CHECK(fingerprint(subgroup_as_group(G, H)) == fingerprint(sym_alt(3, false).group));
    const auto Z = center(G);
    CHECK(Z.size() == 2);
    CHECK(Z.contains(tc.witness->x));
  }
}
