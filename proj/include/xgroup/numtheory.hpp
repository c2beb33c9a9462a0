#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace xgroup::nt {

bool is_prime(std::uint64_t n);

/// Prime factorization as prime -> exponent.
std::map<std::uint64_t, unsigned> factorize(std::uint64_t n);

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// The p-part of n (largest power of p dividing n).
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Multiplicative order of a modulo m (a coprime to m, m >= 2).
std::uint64_t mult_order(std::uint64_t a, std::uint64_t m);

/// Smallest primitive root modulo m; m must be p^k or 2p^k.
std::uint64_t smallest_primitive_root(std::uint64_t m);

bool is_power_of(std::uint64_t n, std::uint64_t p);

/// If n is a prime power p^k (k >= 1), returns p, else 0.
std::uint64_t prime_power_base(std::uint64_t n);

bool is_fermat_prime(std::uint64_t p);
bool is_mersenne_prime(std::uint64_t p);

}  // namespace xgroup::nt
