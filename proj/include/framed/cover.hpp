#pragma once

#include "framed/braid.hpp"
#include "framed/intmat2.hpp"

#include <cstdint>

namespace framed {

/// Exact complex number with rational parts.
struct RationalComplex {
  Rational re{0};
  Rational im{0};

  RationalComplex conj() const { return {re, -im}; }
  /// |z|^2.
  Rational norm() const { return re * re + im * im; }

  friend bool operator==(const RationalComplex&, const RationalComplex&) = default;
  friend RationalComplex operator*(const RationalComplex& x, const RationalComplex& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend RationalComplex operator*(const Rational& s, const RationalComplex& z) { return {s * z.re, s * z.im}; }
  friend RationalComplex operator-(const RationalComplex& x, const RationalComplex& y) { return {x.re - y.re, x.im - y.im}; }
  friend RationalComplex operator/(const RationalComplex& x, const RationalComplex& y) {
    const Rational n = y.norm();
    const RationalComplex p = x * y.conj();
    return {p.re / n, p.im / n};
  }
};

/// True iff the principal argument (in (-pi, pi]) is exactly pi.
bool arg_is_pi(const RationalComplex& z);
/// True iff the principal argument is strictly positive.
bool arg_positive(const RationalComplex& z);
/// True iff the principal argument is strictly negative.
bool arg_negative(const RationalComplex& z);

/// The integer w with Arg(u) + Arg(v) = Arg(uv) + 2 pi w; always in {-1, 0, 1}.
int arg_sum_wrap(const RationalComplex& u, const RationalComplex& v);

/// Principal argument as a double, for display and float oracles only.
double arg_approx(const RationalComplex& z);

/// True iff u / |u| = v / |v| (same ray), decided exactly.
bool same_direction(const RationalComplex& u, const RationalComplex& v);

/// z(A) = (a + d) + i (b - c); its unit normalization is phi(A). Throws DomainError if det <= 0.
RationalComplex z_of(const Mat2Z& m);
RationalComplex z_of(const Mat2Q& m);

/// zeta(A, B) = z(AB) conj(z(A)) conj(z(B)); eta(A, B) = Arg(zeta).
///
/// Re(zeta) > 0 always holds for positive determinants, so eta lies in (-pi/2, pi/2); a violation
/// throws ConsistencyError.
RationalComplex eta_zeta(const Mat2Z& a, const Mat2Z& b);
RationalComplex eta_zeta(const Mat2Q& a, const Mat2Q& b);

/// alpha_A = (a^2 + b^2 - c^2 - d^2 - 2i(ac + bd)) / ((a + d)^2 + (b - c)^2).
RationalComplex alpha_of(const Mat2Q& m);
/// 1 - alpha_{A^-1} conj(alpha_B); a positive multiple of eta_zeta(A, B).
RationalComplex alpha_cocycle(const Mat2Q& a, const Mat2Q& b);

/// A point (A, s) of the universal cover over matrices of positive determinant, stored as the
/// matrix and the winding w with s = Arg(z(A)) + 2 pi w.
template <class T>
struct BasicCoverElement {
  Mat2<T> matrix = Mat2<T>::identity();
  std::int64_t winding = 0;

  friend bool operator==(const BasicCoverElement&, const BasicCoverElement&) = default;
};

using CoverElement = BasicCoverElement<Int>;
using RationalCoverElement = BasicCoverElement<Rational>;

/// Validating constructors; throw DomainError if det <= 0.
CoverElement make_cover(const Mat2Z& m, std::int64_t winding = 0);
RationalCoverElement make_cover(const Mat2Q& m, std::int64_t winding = 0);

/// The carry c with winding(xy) = winding(x) + winding(y) + c.
int cover_carry(const Mat2Z& a, const Mat2Z& b);
int cover_carry(const Mat2Q& a, const Mat2Q& b);

CoverElement cover_mul(const CoverElement& x, const CoverElement& y);
RationalCoverElement cover_mul(const RationalCoverElement& x, const RationalCoverElement& y);

/// Lift of a braid word: generators go to (U1, 0), (U2, 0); inverses to their cover inverses.
CoverElement lift_word(const BraidWord& w);

/// The lift of transposition sending s to -s. When Arg(z(A)) = pi the winding becomes -w - 1.
CoverElement transpose_cover(const CoverElement& x);
RationalCoverElement transpose_cover(const RationalCoverElement& x);

/// Inverse in the rational completion (always exists there).
RationalCoverElement cover_inverse(const RationalCoverElement& x);
/// Inverse inside the integral monoid; DomainError unless the matrix is in SL2(Z).
CoverElement cover_inverse(const CoverElement& x);

/// (n I, 0) for n >= 1.
CoverElement scalar_lift(const Int& n);
/// (r I, 0) for rational r > 0.
RationalCoverElement scalar_lift(const Rational& r);

/// Inclusion of the integral monoid into its rational group completion.
RationalCoverElement embed(const CoverElement& x);

/// Equality in the completed group; the winding representation is canonical.
bool completion_eq(const RationalCoverElement& x, const RationalCoverElement& y);

/// s = Arg(z(A)) + 2 pi w, as a double.
double encoded_parameter(const CoverElement& x);

}  // namespace framed
