#include "xgroup/normal_form.hpp"

#include <memory>

#include "xgroup/errors.hpp"
#include "xgroup/numtheory.hpp"

namespace xgroup {

Group regular_group(const AbstractGroup& A, const std::vector<std::uint32_t>& gens) {
  if (A.order > kMaxRegularDegree)
    fail(ErrorKind::CapExceeded, "regular representation of order " +
                                     std::to_string(A.order) + " is too large");
  std::vector<Permutation> perms;
  for (auto g : gens) {
    std::vector<Point> img(A.order);
    for (std::uint32_t x = 0; x < A.order; ++x) img[x] = static_cast<Point>(A.mul(x, g));
    perms.emplace_back(std::move(img));
  }
  return Group::from_generators(A.order, perms);
}

Group coset_group(const AbstractGroup& A, const std::vector<std::uint32_t>& gens,
                  const std::vector<std::uint32_t>& sub, std::size_t expected_order) {
  const std::uint32_t none = UINT32_MAX;
  std::vector<std::uint32_t> coset(A.order, none);
  std::uint32_t count = 0;
  for (std::uint32_t x = 0; x < A.order; ++x) {
    if (coset[x] != none) continue;
    for (auto h : sub) coset[A.mul(h, x)] = count;
    ++count;
  }
  ensure(count * sub.size() == A.order, "coset action: subgroup does not partition");
  std::vector<std::uint32_t> rep(count);
  for (std::uint32_t x = A.order; x-- > 0;) rep[coset[x]] = x;
  std::vector<Permutation> perms;
  for (auto g : gens) {
    std::vector<Point> img(count);
    for (std::uint32_t c = 0; c < count; ++c) img[c] = static_cast<Point>(coset[A.mul(rep[c], g)]);
    perms.emplace_back(std::move(img));
  }
  auto G = Group::from_generators(count, perms);
  ensure(G.order() == expected_order, "coset action is not faithful");
  return G;
}

AbstractGroup metacyclic_normal_form(std::uint64_t m, std::uint64_t n, std::uint64_t r,
                                     std::uint64_t s) {
  if (m == 0 || n == 0) fail(ErrorKind::InvalidParameter, "metacyclic: m, n must be positive");
  r %= m;
  s %= m;
  if (nt::pow_mod(r, n, m) != 1 % m || (s * (r + m - 1)) % m != 0)
    fail(ErrorKind::InvalidParameter, "metacyclic: inconsistent relations");
  auto rpow = std::make_shared<std::vector<std::uint64_t>>(n);
  (*rpow)[0] = 1 % m;
  for (std::uint64_t j = 1; j < n; ++j) (*rpow)[j] = ((*rpow)[j - 1] * r) % m;
  AbstractGroup A;
  A.order = m * n;
  A.mul = [m, n, s, rpow](std::uint32_t x, std::uint32_t y) {
    std::uint64_t i = x % m, j = x / m, k = y % m, l = y / m;
    std::uint64_t e = (i + k * (*rpow)[j]) % m;
    std::uint64_t f = j + l;
    if (f >= n) {
      f -= n;
      e = (e + s) % m;
    }
    return static_cast<std::uint32_t>(e + m * f);
  };
  return A;
}

AbstractGroup heisenberg_normal_form(std::uint32_t p, bool symmetric) {
  const std::uint64_t P = p;
  const std::uint64_t half = (P + 1) / 2;  // inverse of 2 mod odd p
  AbstractGroup A;
  A.order = P * P * P;
  A.mul = [P, half, symmetric](std::uint32_t x, std::uint32_t y) {
    std::uint64_t a = x % P, b = (x / P) % P, c = x / (P * P);
    std::uint64_t a2 = y % P, b2 = (y / P) % P, c2 = y / (P * P);
    std::uint64_t cocycle;
    if (symmetric)
      cocycle = ((a * b2 + P * P - a2 * b) % P) * half % P;
    else
      cocycle = (a * b2) % P;
    std::uint64_t na = (a + a2) % P, nb = (b + b2) % P, nc = (c + c2 + cocycle) % P;
    return static_cast<std::uint32_t>(na + P * nb + P * P * nc);
  };
  return A;
}

AbstractGroup semidirect_cyclic(const AbstractGroup& N, std::uint32_t k,
                                const std::function<std::uint32_t(std::uint32_t)>& phi) {
  const std::size_t n = N.order;
  auto table = std::make_shared<std::vector<std::uint32_t>>(n * k);
  for (std::uint32_t x = 0; x < n; ++x) (*table)[x] = x;
  for (std::uint32_t t = 1; t < k; ++t)
    for (std::uint32_t x = 0; x < n; ++x) (*table)[t * n + x] = phi((*table)[(t - 1) * n + x]);
  for (std::uint32_t x = 0; x < n; ++x)
    ensure(phi((*table)[(k - 1) * n + x]) == x, "semidirect: automorphism order does not divide k");
  AbstractGroup A;
  A.order = n * k;
  auto nmul = N.mul;
  A.mul = [n, k, table, nmul](std::uint32_t x, std::uint32_t y) {
    std::uint32_t a = x % n, t = x / n, b = y % n, u = y / n;
    std::uint32_t prod = nmul(a, (*table)[t * n + b]);
    return static_cast<std::uint32_t>(prod + n * ((t + u) % k));
  };
  return A;
}

}  // namespace xgroup
