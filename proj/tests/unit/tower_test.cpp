#include <doctest.h>

#include "oracles.hpp"
#include "xgroup/constructors.hpp"
#include "xgroup/engine.hpp"
#include "xgroup/fingerprint.hpp"
#include "xgroup/numtheory.hpp"
#include "xgroup/tower.hpp"

using namespace xgroup;

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  for (b %= m; e; e >>= 1, b = b * b % m)
    if (e & 1) r = r * b % m;
  return r;
}

}  // namespace

TEST_SUITE("tower") {
  TEST_CASE("p-adic units") {
    const auto u = padic_unit(5, 2, 4);
    CHECK(u == 7);
    CHECK(u * u % 25 == 24);
    CHECK(powmod(u, 4, 25) == 1);
    CHECK(padic_unit(7, 1, 3) == 2);
    CHECK(padic_unit(5, 1, 1) == 1);
  }

  TEST_CASE("Hensel coherence") {
    for (std::uint64_t p : {3, 5, 7, 11, 13})
      for (std::uint64_t d = 1; d < p; ++d) {
        if ((p - 1) % d) continue;
        for (unsigned k = 1; k < 5; ++k) {
          CAPTURE(p);
          CAPTURE(d);
          CAPTURE(k);
          const std::uint64_t pk = ipow(p, k);
          const auto u = padic_unit(p, k, d), v = padic_unit(p, k + 1, d);
          CHECK(v % pk == u);
          // exact multiplicative order d, computed by stepping
          std::uint64_t x = u % pk, ord = 1;
          while (x != 1 % pk) {
            x = x * u % pk;
            ++ord;
          }
          CHECK(ord == (pk == 1 ? 1 : d));
        }
      }
  }

  TEST_CASE("level orders") {
    const auto m = build_tower({TowerKind::PruferMetacyclic, 5, 4, 2, 3});
    REQUIRE(m.size() == 3);
    CHECK(m[0].group.order() == 20);
    CHECK(m[1].group.order() == 100);
    CHECK(m[2].group.order() == 500);

    const auto q = build_tower({TowerKind::Prufer2Ext, 2, 1, 4, 3});
    REQUIRE(q.size() == 3);
    std::uint64_t n = 16;
    for (const auto& l : q) {
      CHECK(fingerprint(l.group) == fingerprint(two_group(TwoGroupKind::Quaternion, n).group));
      n *= 2;
    }

    const auto c = build_tower({TowerKind::Prufer, 3, 1, 2, 4});
    REQUIRE(c.size() == 4);
    for (unsigned k = 0; k < 4; ++k) {
      CHECK(c[k].group.order() == ipow(3, k + 1));
      CHECK(oracle::cyclic(c[k].group, oracle::closure(c[k].group, c[k].group.generators())));
    }
  }

  TEST_CASE("embeddings are injective homomorphisms") {
    const auto t = build_tower({TowerKind::PruferMetacyclic, 3, 2, 2, 3});
    for (std::size_t k = 0; k + 1 < t.size(); ++k) {
      const Group& G = t[k].group;
      const Group& H = t[k + 1].group;
      const auto& f = t[k].embedding;
      REQUIRE(f.size() == G.order());
      std::set<Elem> image(f.begin(), f.end());
      CHECK(image.size() == G.order());
      for (Elem a = 0; a < G.order(); ++a)
        for (Elem b = 0; b < G.order(); ++b) CHECK(f[G.mul(a, b)] == H.mul(f[a], f[b]));
    }
    CHECK(t.back().embedding.empty());
  }

  TEST_CASE("verification runs") {
    const auto a = verify_tower({TowerKind::PruferMetacyclic, 7, 3, 2, 3});
    CHECK(a.ok());
    REQUIRE(a.levels.size() == 3);
    for (const auto& l : a.levels) {
      CHECK(l.verdict == XResult::IsX);
      CHECK(l.theorem_case == "2.1.1");
      CHECK(l.stabilization_ok);
    }
    CHECK(a.levels[0].order == 21);
    CHECK(a.levels[2].order == 1029);
    CHECK(a.functorial);

    const auto d = verify_tower({TowerKind::Prufer2Ext, 2, 1, 2, 4});
    CHECK(d.ok());
    for (const auto& l : d.levels) CHECK(l.theorem_case == "1.4");
    CHECK(d.levels.front().order == 8);
    CHECK(d.levels.back().order == 64);

    const auto e = verify_tower({TowerKind::PruferMetacyclic, 5, 2, 2, 3});
    CHECK(e.ok());
    for (std::size_t k = 0; k < e.levels.size(); ++k) {
      CHECK(e.levels[k].theorem_case == "2.1.1");
      CHECK(e.levels[k].order == 2 * ipow(5, static_cast<unsigned>(k + 1)));
    }
  }

  TEST_CASE("quotient control is not inherited") {
    const auto c = dihedral_quotient_control(2);
    REQUIRE(c.size() == 2);
    CHECK(c[0].first == 12);
    CHECK(c[0].second == XResult::NotX);
  }
}
