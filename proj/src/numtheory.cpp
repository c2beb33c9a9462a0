#include "xgroup/numtheory.hpp"

#include <numeric>

#include "xgroup/errors.hpp"

namespace xgroup {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::InvalidPermutation: return "InvalidPermutation";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::ConstraintViolation: return "ConstraintViolation";
    case ErrorKind::SearchFailed: return "SearchFailed";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorKind::Unclassified: return "Unclassified";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace nt {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::map<std::uint64_t, unsigned> factorize(std::uint64_t n) {
  std::map<std::uint64_t, unsigned> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }
std::uint64_t lcm(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  unsigned __int128 r = 1, b = base % mod;
  while (exp) {
    if (exp & 1) r = r * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t mult_order(std::uint64_t a, std::uint64_t m) {
  if (m < 2 || gcd(a, m) != 1)
    fail(ErrorKind::InvalidParameter, "mult_order: argument not a unit");
  std::uint64_t x = a % m, k = 1;
  while (x != 1) {
    x = x * (a % m) % m;
    ++k;
  }
  return k;
}

std::uint64_t smallest_primitive_root(std::uint64_t m) {
  // phi(m) for m = p^k or 2p^k
  std::uint64_t phi = m;
  for (auto p : prime_divisors(m)) phi = phi / p * (p - 1);
  auto qs = prime_divisors(phi);
  for (std::uint64_t g = 2; g < m; ++g) {
    if (gcd(g, m) != 1) continue;
    bool ok = true;
    for (auto q : qs)
      if (pow_mod(g, phi / q, m) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  if (m == 2) return 1;
  fail(ErrorKind::InvalidParameter, "no primitive root modulo " + std::to_string(m));
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  if (n == 0 || p < 2) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::uint64_t prime_power_base(std::uint64_t n) {
  auto f = factorize(n);
  if (f.size() != 1) return 0;
  return f.begin()->first;
}

bool is_fermat_prime(std::uint64_t p) {
  if (!is_prime(p) || p < 3) return false;
  std::uint64_t m = p - 1;
  if (!is_power_of(m, 2)) return false;
  unsigned k = 0;
  while (m > 1) {
    m >>= 1;
    ++k;
  }
  return is_power_of(k, 2) || k == 1;
}

bool is_mersenne_prime(std::uint64_t p) {
  return is_prime(p) && is_power_of(p + 1, 2);
}

}  // namespace nt
}  // namespace xgroup
