#pragma once

#include "framed/numeric.hpp"

#include <optional>
#include <span>
#include <vector>

namespace framed {

template <class T>
struct Vec2 {
  T x{0};
  T y{0};

  friend bool operator==(const Vec2&, const Vec2&) = default;
  friend Vec2 operator+(const Vec2& u, const Vec2& v) { return {u.x + v.x, u.y + v.y}; }
  friend Vec2 operator-(const Vec2& u, const Vec2& v) { return {u.x - v.x, u.y - v.y}; }
  friend Vec2 operator*(const T& s, const Vec2& v) { return {s * v.x, s * v.y}; }
};

/// Row-major 2x2 matrix [[a, b], [c, d]].
template <class T>
struct Mat2 {
  T a{1};
  T b{0};
  T c{0};
  T d{1};

  static Mat2 identity() { return {T(1), T(0), T(0), T(1)}; }
  static Mat2 scalar(const T& s) { return {s, T(0), T(0), s}; }

  T det() const { return a * d - b * c; }
  T trace() const { return a + d; }
  Mat2 transpose() const { return {a, c, b, d}; }

  friend bool operator==(const Mat2&, const Mat2&) = default;

  friend Mat2 operator*(const Mat2& m, const Mat2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  }
  friend Vec2<T> operator*(const Mat2& m, const Vec2<T>& v) { return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y}; }
  friend Mat2 operator-(const Mat2& m) { return {-m.a, -m.b, -m.c, -m.d}; }
};

using Mat2Z = Mat2<Int>;
using Mat2Q = Mat2<Rational>;
using Vec2Z = Vec2<Int>;
using Vec2Q = Vec2<Rational>;

/// The elementary matrices U1 = [[1,1],[0,1]], U2 = [[1,0],[-1,1]] and the quarter turn R = U1 U2 U1.
Mat2Z unipotent_upper();
Mat2Z unipotent_lower();
Mat2Z quarter_turn();

Int det(const Mat2Z& m);

struct Membership {
  bool in_EZ = false;   // det != 0
  bool in_EpZ = false;  // det > 0
  bool in_GL2Z = false; // det = +-1
  bool in_SL2Z = false; // det = 1

  friend bool operator==(const Membership&, const Membership&) = default;
};

Membership classify(const Mat2Z& m);

Mat2Q to_rational(const Mat2Z& m);
Vec2Q to_rational(const Vec2Z& v);
/// Integer matrix if every entry is integral.
std::optional<Mat2Z> to_integer(const Mat2Q& m);

/// Exact inverse; throws DomainError when singular.
Mat2Q inverse(const Mat2Q& m);
Mat2Q inverse(const Mat2Z& m);

/// Inverse of a unimodular matrix; throws DomainError if det != +-1.
Mat2Z unimodular_inverse(const Mat2Z& m);

/// Hermite normal form of the lattice spanned by two integer rows.
///
/// Result is [[a, b], [0, d]] with a >= 1, d >= 1, 0 <= b < d. Throws DomainError when the
/// rows are linearly dependent.
Mat2Z row_hnf(const Vec2Z& r1, const Vec2Z& r2);
Mat2Z row_hnf(const Mat2Z& rows);

/// Row HNF of the lattice spanned by any finite family of integer rows of rank 2.
Mat2Z lattice_hnf(std::span<const Vec2Z> rows);

/// Rational analogue: rows are scaled to integers, put into HNF, and scaled back.
Mat2Q lattice_hnf(std::span<const Vec2Q> rows);

/// Extended gcd: returns (g, s, t) with s*a + t*b = g >= 0.
struct Bezout {
  Int g;
  Int s;
  Int t;
};
Bezout extended_gcd(const Int& a, const Int& b);

}  // namespace framed
