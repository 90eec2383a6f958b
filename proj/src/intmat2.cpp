#include "framed/intmat2.hpp"

#include <utility>

namespace framed {

Mat2Z unipotent_upper() { return {1, 1, 0, 1}; }
Mat2Z unipotent_lower() { return {1, 0, -1, 1}; }
Mat2Z quarter_turn() { return {0, 1, -1, 0}; }

Int det(const Mat2Z& m) { return m.det(); }

Membership classify(const Mat2Z& m) {
  const Int dt = m.det();
  return {dt != 0, dt > 0, dt == 1 || dt == -1, dt == 1};
}

Mat2Q to_rational(const Mat2Z& m) { return {Rational(m.a), Rational(m.b), Rational(m.c), Rational(m.d)}; }

Vec2Q to_rational(const Vec2Z& v) { return {Rational(v.x), Rational(v.y)}; }

std::optional<Mat2Z> to_integer(const Mat2Q& m) {
  if (!is_integer(m.a) || !is_integer(m.b) || !is_integer(m.c) || !is_integer(m.d)) {
    return std::nullopt;
  }
  return Mat2Z{numer(m.a), numer(m.b), numer(m.c), numer(m.d)};
}

Mat2Q inverse(const Mat2Q& m) {
  const Rational dt = m.det();
  if (dt == 0) {
    throw DomainError("matrix is singular (det = 0)");
  }
  return {m.d / dt, -m.b / dt, -m.c / dt, m.a / dt};
}

Mat2Q inverse(const Mat2Z& m) { return inverse(to_rational(m)); }

Mat2Z unimodular_inverse(const Mat2Z& m) {
  const Int dt = m.det();
  if (dt != 1 && dt != -1) {
    throw DomainError("matrix is not in GL2(Z) (det = " + dt.str() + ")");
  }
  return {m.d * dt, -m.b * dt, -m.c * dt, m.a * dt};
}

Bezout extended_gcd(const Int& a, const Int& b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    const Int q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
    old_t -= q * t;
    std::swap(old_t, t);
  }
  if (old_r < 0) {
    return {-old_r, -old_s, -old_t};
  }
  return {old_r, old_s, old_t};
}

Mat2Z lattice_hnf(std::span<const Vec2Z> rows) {
  // Pivot row (p, q) collects the gcd of the first column; leftovers have first entry 0.
  Int p = 0, q = 0;
  Int second = 0;
  for (const auto& r : rows) {
    if (r.x == 0) {
      second = gcd(second, r.y);
      continue;
    }
    if (p == 0) {
      p = r.x;
      q = r.y;
      continue;
    }
    // Unimodular combination [[s, t], [-r.x/g, p/g]] applied to the rows (p, q), (r.x, r.y).
    const auto [g, s, t] = extended_gcd(p, r.x);
    const Int new_q = s * q + t * r.y;
    const Int residue = (p / g) * r.y - (r.x / g) * q;
    p = g;
    q = new_q;
    second = gcd(second, residue);
  }
  if (p == 0 || second == 0) {
    throw DomainError("rows do not span a rank-2 lattice");
  }
  if (p < 0) {
    p = -p;
    q = -q;
  }
  const Int d = second < 0 ? Int(-second) : second;
  return {p, floor_mod(q, d), 0, d};
}

Mat2Z row_hnf(const Vec2Z& r1, const Vec2Z& r2) {
  if (r1.x * r2.y - r1.y * r2.x == 0) {
    throw DomainError("rows are linearly dependent");
  }
  const Vec2Z rows[] = {r1, r2};
  return lattice_hnf(rows);
}

Mat2Z row_hnf(const Mat2Z& rows) { return row_hnf(Vec2Z{rows.a, rows.b}, Vec2Z{rows.c, rows.d}); }

Mat2Q lattice_hnf(std::span<const Vec2Q> rows) {
  Int scale = 1;
  for (const auto& r : rows) {
    scale = lcm(scale, denom(r.x));
    scale = lcm(scale, denom(r.y));
  }
  std::vector<Vec2Z> scaled;
  scaled.reserve(rows.size());
  const Rational s(scale);
  for (const auto& r : rows) {
    scaled.push_back({numer(r.x * s), numer(r.y * s)});
  }
  const Mat2Z h = lattice_hnf(std::span<const Vec2Z>(scaled));
  return {Rational(h.a) / s, Rational(h.b) / s, Rational(0), Rational(h.d) / s};
}

}  // namespace framed
