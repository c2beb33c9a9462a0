#include <doctest.h>

#include "xgroup/classifier.hpp"
#include "xgroup/constructors.hpp"
#include "xgroup/document.hpp"
#include "xgroup/errors.hpp"
#include "xgroup/fingerprint.hpp"

using namespace xgroup;

namespace {

void same_elements(const Group& a, const Group& b) {
  REQUIRE(a.order() == b.order());
  for (Elem g = 0; g < a.order(); ++g)
    for (Elem h = 0; h < a.order(); h += 7) REQUIRE(a.mul(g, h) == b.mul(g, h));
}

std::vector<std::string> keys(const Doc& d) {
  std::vector<std::string> k;
  for (auto it = d.begin(); it != d.end(); ++it) k.push_back(it.key());
  return k;
}

}  // namespace

TEST_SUITE("document") {
  TEST_CASE("permutation documents round-trip bit-exactly") {
    for (const auto& rec : {sym_alt(5, false), matrix_group(MatrixKind::SL2, 5), metacyclic(7, 3, 2), m10()}) {
      CAPTURE(rec.family);
      const auto text = dump(group_to_doc(rec.group));
      const Group back = group_from_text(text);
      same_elements(rec.group, back);
      for (Elem g = 0; g < back.order(); g += 11)
        CHECK(back.permutation(g) == rec.group.permutation(g));
      CHECK(dump(group_to_doc(back)) == text);
    }
  }

  TEST_CASE("table documents") {
    // C4 with a deliberately non-BFS element order
    const std::string text = R"({"table": [[0,1,2,3],[1,0,3,2],[2,3,1,0],[3,2,0,1]]})";
    const Group G = group_from_text(text);
    CHECK(G.order() == 4);
    CHECK(G.from_table_input());
    CHECK(G.mul(2, 2) == 1);
    CHECK(G.element_order(2) == 4);
    const Group again = group_from_text(dump(group_to_doc(G)));
    same_elements(G, again);
  }

  TEST_CASE("malformed input") {
    auto kind = [](const std::string& text) {
      try {
        group_from_text(text);
      } catch (const Error& e) {
        return e.kind();
      }
      return ErrorKind::InternalInvariantViolation;
    };
    CHECK(kind("{") == ErrorKind::ParseError);
    CHECK(kind(R"({"degree": 3})") == ErrorKind::ParseError);
    CHECK(kind(R"({"degree": 3, "generators": [[0, 0, 1]]})") == ErrorKind::InvalidPermutation);
    CHECK(kind(R"({"degree": 3, "generators": [[0, 1]]})") == ErrorKind::InvalidPermutation);
    CHECK(kind(R"({"table": [[0,1],[1,1]]})") == ErrorKind::ParseError);
  }

  TEST_CASE("witness words survive a round trip") {
    const Group S5 = sym_alt(5, false).group;
    const auto v = is_x_bruteforce(S5);
    REQUIRE(v.witness);
    const Doc d = witness_to_doc(S5, *v.witness);
    CHECK(keys(d) == std::vector<std::string>{"a", "b", "x"});
    const Group rebuilt = group_from_text(dump(group_to_doc(S5)));
    const Witness w = witness_from_doc(rebuilt, nlohmann::json::parse(dump(d)));
    CHECK(w == *v.witness);
    CHECK(verify_witness(rebuilt, w));
    for (Elem g = 0; g < S5.order(); g += 13) CHECK(evaluate(S5, word_of(S5, g)) == g);
  }

  TEST_CASE("report field order is fixed") {
    const Group G = matrix_group(MatrixKind::SL2, 3).group;
    const Doc v = verdict_to_doc(G, is_x_bruteforce(G));
    CHECK(keys(v) == std::vector<std::string>{"method", "verdict", "witness", "witness_verified", "stats"});
    CHECK_FALSE(v["stats"].contains("elapsed_ms"));
    const Doc c = theorem_case_to_doc(G, classify(G));
    CHECK(keys(c) == std::vector<std::string>{"label", "parameters", "evidence", "confirmation", "witness"});
    CHECK(c["label"] == "3.2.1");
    CHECK(dump(c) == dump(theorem_case_to_doc(G, classify(G))));
  }

  TEST_CASE("provenance") {
    const auto rec = metacyclic(7, 3, 2);
    const Doc p = provenance(rec);
    CHECK(keys(p) == std::vector<std::string>{"family", "parameters", "intended_case", "order", "degree", "checks", "details"});
    const auto again = construct(p["family"].get<std::string>(), nlohmann::json::parse(p["parameters"].dump()));
    CHECK(fingerprint(again.group) == fingerprint(rec.group));
    CHECK(dump(group_to_doc(again.group)) == dump(group_to_doc(rec.group)));
  }
}
