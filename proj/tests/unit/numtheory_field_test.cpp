#include <doctest.h>

#include "xgroup/field.hpp"
#include "xgroup/numtheory.hpp"

using namespace xgroup;

namespace {

bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t naive_order(std::uint64_t a, std::uint64_t m) {
  std::uint64_t x = a % m, k = 1;
  while (x != 1) {
    x = x * a % m;
    ++k;
  }
  return k;
}

}  // namespace

TEST_SUITE("numtheory") {
  TEST_CASE("primality matches trial division") {
    for (std::uint64_t n = 0; n < 3000; ++n) CHECK(nt::is_prime(n) == trial_division_prime(n));
  }

  TEST_CASE("factorization multiplies back") {
    for (std::uint64_t n = 1; n < 2000; ++n) {
      std::uint64_t prod = 1;
      for (auto [p, e] : nt::factorize(n)) {
        CHECK(trial_division_prime(p));
        for (unsigned i = 0; i < e; ++i) prod *= p;
      }
      CHECK(prod == n);
    }
  }

  TEST_CASE("multiplicative order and primitive roots") {
    for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
      const auto g = nt::smallest_primitive_root(p);
      CHECK(naive_order(g, p) == p - 1);
      for (std::uint64_t h = 2; h < g; ++h) CHECK(naive_order(h, p) < p - 1);
      const auto g2 = nt::smallest_primitive_root(p * p);
      CHECK(naive_order(g2, p * p) == p * (p - 1));
      for (std::uint64_t a = 2; a < p; ++a) CHECK(nt::mult_order(a, p) == naive_order(a, p));
    }
    CHECK(nt::smallest_primitive_root(25) == 2);
    CHECK(nt::smallest_primitive_root(7) == 3);
  }

  TEST_CASE("Fermat and Mersenne primes") {
    for (std::uint64_t p = 2; p < 300; ++p) {
      bool fermat = false, mersenne = false;
      for (std::uint64_t k = 1; k < 10; ++k) {
        if ((1ull << k) + 1 == p && trial_division_prime(p)) fermat = true;
        if ((1ull << k) - 1 == p && trial_division_prime(p)) mersenne = true;
      }
      CHECK(nt::is_fermat_prime(p) == fermat);
      CHECK(nt::is_mersenne_prime(p) == mersenne);
    }
  }

  TEST_CASE("prime power base") {
    CHECK(nt::prime_power_base(1) == 0);
    CHECK(nt::prime_power_base(8) == 2);
    CHECK(nt::prime_power_base(343) == 7);
    CHECK(nt::prime_power_base(12) == 0);
    CHECK(nt::p_part(720, 2) == 16);
  }
}

TEST_SUITE("field") {
  TEST_CASE("field axioms on every element") {
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {5, 1}, {2, 2}, {3, 2}, {5, 2}, {7, 2}, {2, 3}}) {
      GaloisField F(p, n);
      const auto q = F.size();
      CAPTURE(q);
      for (GaloisField::Value a = 0; a < q; ++a) {
        CHECK(F.add(a, 0) == a);
        CHECK(F.mul(a, 1) == a);
        CHECK(F.add(a, F.neg(a)) == 0);
        if (a) CHECK(F.mul(a, F.inv(a)) == 1);
        CHECK(F.pow(a, q) == a);
        for (GaloisField::Value b = 0; b < q; ++b) {
          CHECK(F.mul(a, b) == F.mul(b, a));
          for (GaloisField::Value c = 0; c < q; c += 3)
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        }
      }
      CHECK(F.mult_order(F.primitive_element()) == q - 1);
    }
  }

  TEST_CASE("GF(p^2) against polynomial arithmetic mod the chosen modulus") {
    for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
      GaloisField F(p, 2);
      const auto c = F.modulus();  // x^2 = -(c0 + c1 x)
      REQUIRE(GaloisField::is_irreducible(p, c));
      for (std::uint32_t a0 = 0; a0 < p; ++a0)
        for (std::uint32_t a1 = 0; a1 < p; ++a1)
          for (std::uint32_t b0 = 0; b0 < p; b0 += 2)
            for (std::uint32_t b1 = 0; b1 < p; ++b1) {
              // (a0 + a1 x)(b0 + b1 x), reduce x^2
              const std::uint64_t x2 = (std::uint64_t)a1 * b1 % p;
              const std::uint64_t r0 = ((std::uint64_t)a0 * b0 + (p - c[0]) * x2) % p;
              const std::uint64_t r1 = ((std::uint64_t)a0 * b1 + (std::uint64_t)a1 * b0 + (p - c[1]) * x2) % p;
              CHECK(F.mul(a0 + p * a1, b0 + p * b1) == r0 + p * r1);
            }
    }
  }

  TEST_CASE("square roots") {
    GaloisField F(13);
    for (GaloisField::Value a = 1; a < 13; ++a) {
      const auto r = F.sqrt(a);
      CHECK((r >= 0) == F.is_square(a));
      if (r >= 0) CHECK(F.mul(static_cast<GaloisField::Value>(r), static_cast<GaloisField::Value>(r)) == a);
    }
  }

  TEST_CASE("SL2(q) closure has order q(q^2-1)") {
    for (std::uint32_t q : {3u, 4u, 5u, 7u}) {
      const auto p = nt::prime_power_base(q);
      GaloisField F(static_cast<std::uint32_t>(p), q == 4 ? 2 : 1);
      std::vector<Mat2> gens{{1, 1, 0, 1}, {0, F.neg(1), 1, 0}};
      if (q == 4) gens.push_back({1, F.primitive_element(), 0, 1});
      const auto all = matrix_closure(F, gens, 100000);
      CHECK(all.size() == q * (q * q - 1));
      for (const auto& m : all) CHECK(mat_det(F, m) == 1);
    }
  }

  TEST_CASE("multiplication matrices represent GF(p^2)") {
    GaloisField F(5, 2);
    GaloisField Fp(5);
    for (GaloisField::Value a = 1; a < 25; a += 4)
      for (GaloisField::Value b = 1; b < 25; b += 3) {
        const auto ma = multiplication_matrix(F, a), mb = multiplication_matrix(F, b);
        CHECK(mat_mul(Fp, ma, mb) == multiplication_matrix(F, F.mul(a, b)));
      }
  }
}
