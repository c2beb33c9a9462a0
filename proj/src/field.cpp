#include "xgroup/field.hpp"

#include <map>
#include <unordered_map>

#include "xgroup/errors.hpp"
#include "xgroup/numtheory.hpp"

namespace xgroup {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients, lowest degree first

// remainder of a modulo monic b over GF(p)
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    auto lead = a.back();
    if (lead) {
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t i = 0; i <= db; ++i)
        a[shift + i] = (a[shift + i] + p - (lead * b[i]) % p) % p;
    }
    a.pop_back();
  }
  return a;
}

}  // namespace

bool GaloisField::is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& lower) {
  const std::size_t n = lower.size();
  Poly f(lower);
  f.push_back(1);
  if (n <= 1) return n == 1;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    // every monic polynomial of degree d
    std::size_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::size_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      std::size_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      auto r = poly_mod(f, g, p);
      bool zero = true;
      for (auto x : r)
        if (x) zero = false;
      if (zero) return false;
    }
  }
  return true;
}

GaloisField::GaloisField(std::uint32_t p, std::uint32_t degree) : p_(p), n_(degree) {
  if (!nt::is_prime(p) || degree < 1)
    fail(ErrorKind::InvalidParameter, "GF(p^n) needs p prime and n >= 1");
  q_ = 1;
  for (std::uint32_t i = 0; i < degree; ++i) q_ *= p;
  if (q_ > 1024) fail(ErrorKind::InvalidParameter, "field too large");
  if (degree > 1) {
    for (std::uint32_t code = 0; code < q_; ++code) {
      std::vector<std::uint32_t> c(degree);
      std::uint32_t x = code;
      for (std::uint32_t i = 0; i < degree; ++i) {
        c[i] = x % p;
        x /= p;
      }
      if (is_irreducible(p, c)) {
        modulus_ = c;
        break;
      }
    }
    ensure(!modulus_.empty(), "no irreducible polynomial found");
  }
  auto digits = [&](Value a) {
    Poly d(n_);
    for (std::uint32_t i = 0; i < n_; ++i) {
      d[i] = a % p_;
      a /= p_;
    }
    return d;
  };
  auto encode = [&](const Poly& d) {
    Value v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + d[i];
    return v;
  };
  Poly full_mod(modulus_);
  full_mod.push_back(1);
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  for (Value a = 0; a < q_; ++a) {
    auto da = digits(a);
    Poly na(n_);
    for (std::uint32_t i = 0; i < n_; ++i) na[i] = (p_ - da[i]) % p_;
    neg_[a] = encode(na);
    for (Value b = 0; b < q_; ++b) {
      auto db = digits(b);
      Poly s(n_);
      for (std::uint32_t i = 0; i < n_; ++i) s[i] = (da[i] + db[i]) % p_;
      add_[a * q_ + b] = encode(s);
      Poly prod(2 * n_ - 1, 0);
      for (std::uint32_t i = 0; i < n_; ++i)
        for (std::uint32_t j = 0; j < n_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      if (n_ > 1) prod = poly_mod(prod, full_mod, p_);
      prod.resize(n_, 0);
      mul_[a * q_ + b] = encode(prod);
    }
  }
  inv_.assign(q_, 0);
  for (Value a = 1; a < q_; ++a)
    for (Value b = 1; b < q_; ++b)
      if (mul(a, b) == 1) {
        inv_[a] = b;
        break;
      }
  for (Value a = 1; a < q_; ++a)
    if (mult_order(a) == q_ - 1) {
      primitive_ = a;
      break;
    }
}

GaloisField::Value GaloisField::inv(Value a) const {
  if (a == 0) fail(ErrorKind::InvalidParameter, "inverse of zero");
  return inv_[a];
}

GaloisField::Value GaloisField::pow(Value a, std::uint64_t k) const {
  Value r = 1;
  while (k) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

GaloisField::Value GaloisField::from_int(std::int64_t k) const {
  auto m = static_cast<std::int64_t>(p_);
  return static_cast<Value>(((k % m) + m) % m);
}

std::uint64_t GaloisField::mult_order(Value a) const {
  if (a == 0) fail(ErrorKind::InvalidParameter, "order of zero");
  std::uint64_t k = 1;
  for (Value x = a; x != 1; x = mul(x, a)) ++k;
  return k;
}

bool GaloisField::is_square(Value a) const { return sqrt(a) >= 0; }

long long GaloisField::sqrt(Value a) const {
  for (Value x = 0; x < q_; ++x)
    if (mul(x, x) == a) return x;
  return -1;
}

// ---------------------------------------------------------------- matrices

Mat2 mat_mul(const GaloisField& F, const Mat2& x, const Mat2& y) {
  return {F.add(F.mul(x[0], y[0]), F.mul(x[1], y[2])), F.add(F.mul(x[0], y[1]), F.mul(x[1], y[3])),
          F.add(F.mul(x[2], y[0]), F.mul(x[3], y[2])), F.add(F.mul(x[2], y[1]), F.mul(x[3], y[3]))};
}

Mat2 mat_scale(const GaloisField& F, GaloisField::Value s, const Mat2& x) {
  return {F.mul(s, x[0]), F.mul(s, x[1]), F.mul(s, x[2]), F.mul(s, x[3])};
}

Mat2 mat_add(const GaloisField& F, const Mat2& x, const Mat2& y) {
  return {F.add(x[0], y[0]), F.add(x[1], y[1]), F.add(x[2], y[2]), F.add(x[3], y[3])};
}

GaloisField::Value mat_det(const GaloisField& F, const Mat2& x) {
  return F.sub(F.mul(x[0], x[3]), F.mul(x[1], x[2]));
}

GaloisField::Value mat_trace(const GaloisField& F, const Mat2& x) { return F.add(x[0], x[3]); }

Mat2 mat_inv(const GaloisField& F, const Mat2& x) {
  auto d = mat_det(F, x);
  if (d == 0) fail(ErrorKind::InvalidParameter, "singular matrix");
  auto di = F.inv(d);
  return {F.mul(di, x[3]), F.mul(di, F.neg(x[1])), F.mul(di, F.neg(x[2])), F.mul(di, x[0])};
}

Mat2 mat_identity() { return {1, 0, 0, 1}; }

Mat2 mat_pow(const GaloisField& F, Mat2 x, std::uint64_t k) {
  Mat2 r = mat_identity();
  while (k) {
    if (k & 1) r = mat_mul(F, r, x);
    x = mat_mul(F, x, x);
    k >>= 1;
  }
  return r;
}

std::uint64_t mat_order(const GaloisField& F, const Mat2& x) {
  std::uint64_t k = 1;
  for (Mat2 y = x; y != mat_identity(); y = mat_mul(F, y, x)) {
    ++k;
    if (k > 1000000) fail(ErrorKind::InvalidParameter, "matrix is singular");
  }
  return k;
}

Vec2 apply(const GaloisField& F, const Vec2& v, const Mat2& m) {
  return {F.add(F.mul(v[0], m[0]), F.mul(v[1], m[2])), F.add(F.mul(v[0], m[1]), F.mul(v[1], m[3]))};
}

Mat2 mat_frobenius(const GaloisField& F, const Mat2& x) {
  return {F.frobenius(x[0]), F.frobenius(x[1]), F.frobenius(x[2]), F.frobenius(x[3])};
}

namespace {

// coordinates of a in the basis {1, x} of GF(p^2)
std::array<GaloisField::Value, 2> coords(const GaloisField& F, GaloisField::Value a) {
  const auto p = F.characteristic();
  return {a % p, a / p};
}

}  // namespace

Mat2 multiplication_matrix(const GaloisField& F, GaloisField::Value a) {
  if (F.degree() != 2) fail(ErrorKind::InvalidParameter, "needs GF(p^2)");
  const auto p = F.characteristic();
  // row vectors: basis element e_i maps to e_i * a
  auto r0 = coords(F, F.mul(1, a));
  auto r1 = coords(F, F.mul(p, a));  // the element x is encoded as p
  return {r0[0], r0[1], r1[0], r1[1]};
}

Mat2 frobenius_matrix(const GaloisField& F) {
  if (F.degree() != 2) fail(ErrorKind::InvalidParameter, "needs GF(p^2)");
  const auto p = F.characteristic();
  auto r0 = coords(F, F.frobenius(1));
  auto r1 = coords(F, F.frobenius(p));
  return {r0[0], r0[1], r1[0], r1[1]};
}

std::vector<Mat2> matrix_closure(const GaloisField& F, const std::vector<Mat2>& gens,
                                 std::size_t limit) {
  auto key = [&](const Mat2& m) {
    std::uint64_t k = 0;
    for (auto v : m) k = k * F.size() + v;
    return k;
  };
  std::vector<Mat2> out{mat_identity()};
  std::unordered_map<std::uint64_t, std::size_t> seen{{key(out[0]), 0}};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens) {
      auto y = mat_mul(F, out[i], g);
      if (seen.emplace(key(y), out.size()).second) {
        out.push_back(y);
        if (out.size() > limit) return {};
      }
    }
  return out;
}

MatrixAction linear_action(const GaloisField& F, const std::vector<Mat2>& gens) {
  MatrixAction act;
  std::map<Vec2, std::size_t> index;
  auto add = [&](const Vec2& v) {
    if (index.emplace(v, act.points.size()).second) act.points.push_back(v);
  };
  add({1, 0});
  add({0, 1});
  for (std::size_t i = 0; i < act.points.size(); ++i)
    for (const auto& g : gens) add(apply(F, act.points[i], g));
  if (act.points.size() > 65535) fail(ErrorKind::CapExceeded, "orbit too large");
  for (const auto& g : gens) {
    std::vector<Point> img(act.points.size());
    for (std::size_t i = 0; i < act.points.size(); ++i)
      img[i] = static_cast<Point>(index.at(apply(F, act.points[i], g)));
    act.generators.emplace_back(std::move(img));
  }
  return act;
}

std::vector<Vec2> projective_points(const GaloisField& F) {
  std::vector<Vec2> pts{{1, 0}};
  for (GaloisField::Value x = 0; x < F.size(); ++x) pts.push_back({x, 1});
  return pts;
}

Permutation projective_permutation(const GaloisField& F, const Mat2& m,
                                   unsigned frobenius_power) {
  const auto pts = projective_points(F);
  std::vector<Point> img(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Vec2 v = pts[i];
    for (unsigned k = 0; k < frobenius_power; ++k) v = {F.frobenius(v[0]), F.frobenius(v[1])};
    v = apply(F, v, m);
    Point idx;
    if (v[1] == 0) {
      idx = 0;
    } else {
      idx = static_cast<Point>(1 + F.div(v[0], v[1]));
    }
    img[i] = idx;
  }
  return Permutation(std::move(img));
}

}  // namespace xgroup
