#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "xgroup/group.hpp"

namespace xgroup {

/// GF(p^n), elements encoded as integers sum c_i p^i (c_i the coefficient of
/// x^i modulo the defining polynomial). GF(p) embeds as 0..p-1.
class GaloisField {
 public:
  using Value = std::uint32_t;

  /// Uses the lexicographically smallest monic irreducible of degree n.
  GaloisField(std::uint32_t p, std::uint32_t degree = 1);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return n_; }
  std::uint32_t size() const { return q_; }
  /// Coefficients c_0..c_{n-1} of x^n = -(c_0 + c_1 x + ...), i.e. the monic
  /// modulus without its leading 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Value add(Value a, Value b) const { return add_[a * q_ + b]; }
  Value sub(Value a, Value b) const { return add_[a * q_ + neg_[b]]; }
  Value neg(Value a) const { return neg_[a]; }
  Value mul(Value a, Value b) const { return mul_[a * q_ + b]; }
  Value inv(Value a) const;  // a != 0
  Value div(Value a, Value b) const { return mul(a, inv(b)); }
  Value pow(Value a, std::uint64_t k) const;
  Value frobenius(Value a) const { return pow(a, p_); }
  Value from_int(std::int64_t k) const;
  /// Smallest generator of the multiplicative group.
  Value primitive_element() const { return primitive_; }
  std::uint64_t mult_order(Value a) const;
  bool is_square(Value a) const;
  /// Some square root of a square, or -1.
  long long sqrt(Value a) const;

  /// True if the monic polynomial x^n + c_{n-1}x^{n-1} + ... + c_0 over GF(p)
  /// has no monic factor of degree 1..n/2.
  static bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& lower_coeffs);

 private:
  std::uint32_t p_, n_, q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Value> add_, mul_, neg_, inv_;
  Value primitive_ = 1;
};

/// 2x2 matrix {a, b, c, d} = [[a, b], [c, d]], acting on row vectors.
using Mat2 = std::array<GaloisField::Value, 4>;
using Vec2 = std::array<GaloisField::Value, 2>;

Mat2 mat_mul(const GaloisField& F, const Mat2& x, const Mat2& y);
Mat2 mat_scale(const GaloisField& F, GaloisField::Value s, const Mat2& x);
Mat2 mat_add(const GaloisField& F, const Mat2& x, const Mat2& y);
GaloisField::Value mat_det(const GaloisField& F, const Mat2& x);
GaloisField::Value mat_trace(const GaloisField& F, const Mat2& x);
Mat2 mat_inv(const GaloisField& F, const Mat2& x);
Mat2 mat_identity();
Mat2 mat_pow(const GaloisField& F, Mat2 x, std::uint64_t k);
std::uint64_t mat_order(const GaloisField& F, const Mat2& x);
Vec2 apply(const GaloisField& F, const Vec2& v, const Mat2& m);
/// Frobenius applied entrywise.
Mat2 mat_frobenius(const GaloisField& F, const Mat2& x);
/// Matrix of multiplication by `a` in GF(p^2) on the basis {1, x}, as a
/// GF(p)-linear map. Requires F.degree() == 2 and returns entries in GF(p).
Mat2 multiplication_matrix(const GaloisField& F, GaloisField::Value a);
/// Matrix of the Frobenius x -> x^p on GF(p^2) in the basis {1, x}.
Mat2 frobenius_matrix(const GaloisField& F);

/// Every matrix in the group generated by `gens` (breadth-first), or empty if
/// the group exceeds `limit`.
std::vector<Mat2> matrix_closure(const GaloisField& F, const std::vector<Mat2>& gens,
                                 std::size_t limit);

/// Permutation images of matrix generators acting on the orbit of the
/// standard basis vectors (a faithful action).
struct MatrixAction {
  std::vector<Vec2> points;
  std::vector<Permutation> generators;
};
MatrixAction linear_action(const GaloisField& F, const std::vector<Mat2>& gens);

/// Projective points of GF(q)^2: (1, 0) then (x, 1) for x in the field.
std::vector<Vec2> projective_points(const GaloisField& F);
/// Action on projective points of v -> sigma^k(v) * m.
Permutation projective_permutation(const GaloisField& F, const Mat2& m,
                                   unsigned frobenius_power = 0);

}  // namespace xgroup
