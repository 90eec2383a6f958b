#include "framed/cover.hpp"

#include <cmath>
#include <numbers>

namespace framed {

namespace {

template <class T>
RationalComplex z_impl(const Mat2<T>& m) {
  if (sign(m.det()) <= 0) {
    throw DomainError("cover requires det > 0 (got det = " + to_string(m.det()) + ")");
  }
  return {Rational(m.a + m.d), Rational(m.b - m.c)};
}

template <class T>
RationalComplex zeta_impl(const Mat2<T>& a, const Mat2<T>& b) {
  const RationalComplex zeta = z_impl(a * b) * z_impl(a).conj() * z_impl(b).conj();
  if (sign(zeta.re) <= 0) {
    throw ConsistencyError("cocycle value has non-positive real part");
  }
  return zeta;
}

template <class T>
int carry_impl(const Mat2<T>& a, const Mat2<T>& b) {
  const RationalComplex za = z_impl(a);
  const RationalComplex zb = z_impl(b);
  const RationalComplex zeta = zeta_impl(a, b);
  // Arg za + Arg zb = Arg(za zb) + 2 pi w1; Arg(za zb) + eta = Arg(z(AB)) + 2 pi w2.
  const RationalComplex zab = za * zb;
  return arg_sum_wrap(za, zb) + arg_sum_wrap(zab, zeta);
}

template <class T>
BasicCoverElement<T> mul_impl(const BasicCoverElement<T>& x, const BasicCoverElement<T>& y) {
  const int carry = carry_impl(x.matrix, y.matrix);
  return {x.matrix * y.matrix, x.winding + y.winding + carry};
}

template <class T>
BasicCoverElement<T> transpose_impl(const BasicCoverElement<T>& x) {
  // z(A^T) = conj(z(A)); negating s keeps the principal branch unless Arg = pi.
  const bool at_pi = arg_is_pi(z_impl(x.matrix));
  return {x.matrix.transpose(), at_pi ? -x.winding - 1 : -x.winding};
}

}  // namespace

bool arg_is_pi(const RationalComplex& z) { return z.im == 0 && z.re < 0; }
bool arg_positive(const RationalComplex& z) { return z.im > 0 || arg_is_pi(z); }
bool arg_negative(const RationalComplex& z) { return z.im < 0; }

int arg_sum_wrap(const RationalComplex& u, const RationalComplex& v) {
  const RationalComplex p = u * v;
  if (arg_positive(u) && arg_positive(v)) {
    // Sum in (0, 2 pi]; it exceeds pi exactly when Arg(uv) <= 0.
    return (p.im < 0 || (p.im == 0 && p.re > 0)) ? 1 : 0;
  }
  if (arg_negative(u) && arg_negative(v)) {
    // Sum in (-2 pi, 0); it is <= -pi exactly when Arg(uv) > 0.
    return arg_positive(p) ? -1 : 0;
  }
  return 0;
}

double arg_approx(const RationalComplex& z) {
  if (arg_is_pi(z)) return std::numbers::pi;
  return std::atan2(z.im.convert_to<double>(), z.re.convert_to<double>());
}

bool same_direction(const RationalComplex& u, const RationalComplex& v) {
  const RationalComplex w = u * v.conj();
  return w.im == 0 && w.re > 0;
}

RationalComplex z_of(const Mat2Z& m) { return z_impl(m); }
RationalComplex z_of(const Mat2Q& m) { return z_impl(m); }

RationalComplex eta_zeta(const Mat2Z& a, const Mat2Z& b) { return zeta_impl(a, b); }
RationalComplex eta_zeta(const Mat2Q& a, const Mat2Q& b) { return zeta_impl(a, b); }

RationalComplex alpha_of(const Mat2Q& m) {
  const Rational den = (m.a + m.d) * (m.a + m.d) + (m.b - m.c) * (m.b - m.c);
  if (den == 0) throw DomainError("alpha undefined: z(A) = 0");
  const Rational re = m.a * m.a + m.b * m.b - m.c * m.c - m.d * m.d;
  const Rational im = -2 * (m.a * m.c + m.b * m.d);
  return {re / den, im / den};
}

RationalComplex alpha_cocycle(const Mat2Q& a, const Mat2Q& b) {
  return RationalComplex{1, 0} - alpha_of(inverse(a)) * alpha_of(b).conj();
}

CoverElement make_cover(const Mat2Z& m, std::int64_t winding) {
  z_impl(m);
  return {m, winding};
}

RationalCoverElement make_cover(const Mat2Q& m, std::int64_t winding) {
  z_impl(m);
  return {m, winding};
}

int cover_carry(const Mat2Z& a, const Mat2Z& b) { return carry_impl(a, b); }
int cover_carry(const Mat2Q& a, const Mat2Q& b) { return carry_impl(a, b); }

CoverElement cover_mul(const CoverElement& x, const CoverElement& y) { return mul_impl(x, y); }
RationalCoverElement cover_mul(const RationalCoverElement& x, const RationalCoverElement& y) { return mul_impl(x, y); }

CoverElement lift_word(const BraidWord& w) {
  static const CoverElement u1{unipotent_upper(), 0};
  static const CoverElement u2{unipotent_lower(), 0};
  static const CoverElement u1_inv = cover_inverse(u1);
  static const CoverElement u2_inv = cover_inverse(u2);
  CoverElement x;
  for (int l : w.letters()) {
    switch (l) {
      case 1: x = cover_mul(x, u1); break;
      case -1: x = cover_mul(x, u1_inv); break;
      case 2: x = cover_mul(x, u2); break;
      case -2: x = cover_mul(x, u2_inv); break;
    }
  }
  return x;
}

CoverElement transpose_cover(const CoverElement& x) { return transpose_impl(x); }
RationalCoverElement transpose_cover(const RationalCoverElement& x) { return transpose_impl(x); }

RationalCoverElement cover_inverse(const RationalCoverElement& x) {
  // z(A^-1) = conj(z(A)) / det and zeta(A, A^-1) is real positive, so s -> -s as for transposes.
  const bool at_pi = arg_is_pi(z_impl(x.matrix));
  return {inverse(x.matrix), at_pi ? -x.winding - 1 : -x.winding};
}

CoverElement cover_inverse(const CoverElement& x) {
  if (x.matrix.det() != 1) {
    throw DomainError("cover element is invertible only when its matrix is in SL2(Z)");
  }
  const bool at_pi = arg_is_pi(z_impl(x.matrix));
  return {unimodular_inverse(x.matrix), at_pi ? -x.winding - 1 : -x.winding};
}

CoverElement scalar_lift(const Int& n) {
  if (n < 1) throw DomainError("scalar_lift requires n >= 1 (got " + n.str() + ")");
  return {Mat2Z::scalar(n), 0};
}

RationalCoverElement scalar_lift(const Rational& r) {
  if (r <= 0) throw DomainError("scalar_lift requires r > 0 (got " + to_string(r) + ")");
  return {Mat2Q::scalar(r), 0};
}

RationalCoverElement embed(const CoverElement& x) { return {to_rational(x.matrix), x.winding}; }

bool completion_eq(const RationalCoverElement& x, const RationalCoverElement& y) { return x == y; }

double encoded_parameter(const CoverElement& x) {
  return arg_approx(z_of(x.matrix)) + 2.0 * std::numbers::pi * static_cast<double>(x.winding);
}

}  // namespace framed
