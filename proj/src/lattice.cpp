#include "framed/lattice.hpp"

#include <algorithm>

namespace framed {

namespace {

HnfLattice integer_lattice(const Mat2Z& h) { return {to_rational(h), LatticeKind::Sublattice}; }

bool vec_less(const Vec2Q& u, const Vec2Q& v) { return u.x < v.x || (u.x == v.x && u.y < v.y); }

}  // namespace

Int HnfLattice::index() const {
  const Rational covol = basis.a * basis.d;
  const Rational idx = kind == LatticeKind::Sublattice ? covol : Rational(1) / covol;
  if (!is_integer(idx)) throw ConsistencyError("lattice index is not an integer");
  return numer(idx);
}

bool HnfLattice::contains(const Vec2Q& v) const {
  // v = k1 (a, b) + k2 (0, d) with integer k1, k2.
  const Rational k1 = v.x / basis.a;
  if (!is_integer(k1)) return false;
  return is_integer((v.y - k1 * basis.b) / basis.d);
}

std::vector<HnfLattice> enumerate_sublattices(const Int& n) {
  if (n < 1) throw DomainError("index must be >= 1 (got " + n.str() + ")");
  std::vector<HnfLattice> out;
  for (Int a = 1; a <= n; ++a) {
    if (n % a != 0) continue;
    const Int d = n / a;
    for (Int b = 0; b < d; ++b) out.push_back(integer_lattice({a, b, 0, d}));
  }
  return out;
}

HnfLattice image_lattice(const Mat2Z& m) {
  if (m.det() == 0) throw DomainError("image_lattice requires a nonsingular matrix");
  return integer_lattice(row_hnf(m));
}

HnfLattice column_lattice(const Mat2Z& m) {
  if (m.det() == 0) throw DomainError("column_lattice requires a nonsingular matrix");
  return integer_lattice(row_hnf(m.transpose()));
}

Vec2Q reduce_mod(const Vec2Q& v, const Mat2Q& hnf) {
  const Int k1 = floor(v.x / hnf.a);
  Vec2Q r{v.x - Rational(k1) * hnf.a, v.y - Rational(k1) * hnf.b};
  const Int k2 = floor(r.y / hnf.d);
  r.y -= Rational(k2) * hnf.d;
  return r;
}

Vec2Q reduce_mod_one(const Vec2Q& v) { return {frac(v.x), frac(v.y)}; }

Int FiniteTorusSubgroup::order() const { return HnfLattice{superlattice, LatticeKind::Superlattice}.index(); }

bool FiniteTorusSubgroup::contains(const Vec2Q& point) const {
  return HnfLattice{superlattice, LatticeKind::Superlattice}.contains(point);
}

bool FiniteTorusSubgroup::subset_of(const FiniteTorusSubgroup& other) const {
  return other.contains({superlattice.a, superlattice.b}) && other.contains({superlattice.c, superlattice.d});
}

std::vector<Vec2Q> FiniteTorusSubgroup::elements() const {
  // quot^-1(C) / Z^2: combinations i u1 + j u2 with 0 <= i < 1/a, 0 <= j < 1/d cover every coset.
  const Int na = numer(Rational(1) / superlattice.a);
  const Int nd = numer(Rational(1) / superlattice.d);
  std::vector<Vec2Q> out;
  for (Int i = 0; i < na; ++i) {
    for (Int j = 0; j < nd; ++j) {
      const Vec2Q p{Rational(i) * superlattice.a, Rational(i) * superlattice.b + Rational(j) * superlattice.d};
      out.push_back(reduce_mod_one(p));
    }
  }
  std::sort(out.begin(), out.end(), vec_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FiniteTorusSubgroup trivial_subgroup() { return subgroup_from_generators({}); }

FiniteTorusSubgroup subgroup_from_generators(const std::vector<Vec2Q>& gens) {
  std::vector<Vec2Q> rows = {{1, 0}, {0, 1}};
  std::vector<Vec2Q> reduced;
  reduced.reserve(gens.size());
  for (const auto& g : gens) {
    reduced.push_back(reduce_mod_one(g));
    rows.push_back(reduced.back());
  }
  return {std::move(reduced), lattice_hnf(std::span<const Vec2Q>(rows))};
}

FiniteTorusSubgroup subgroup_from_superlattice(const Vec2Q& r1, const Vec2Q& r2) {
  if (r1.x * r2.y - r1.y * r2.x == 0) throw DomainError("superlattice rows are linearly dependent");
  const Vec2Q rows[] = {r1, r2};
  const Mat2Q h = lattice_hnf(std::span<const Vec2Q>(rows));
  const HnfLattice lat{h, LatticeKind::Superlattice};
  if (!lat.contains({1, 0}) || !lat.contains({0, 1})) {
    throw DomainError("lattice does not contain Z^2");
  }
  return {{reduce_mod_one(r1), reduce_mod_one(r2)}, h};
}

Mat2Z matrix_from_subgroup(const FiniteTorusSubgroup& c) {
  // Columns u1 = (a, b), u2 = (0, d).
  const Mat2Q basis{c.superlattice.a, c.superlattice.c, c.superlattice.b, c.superlattice.d};
  const auto m = to_integer(inverse(basis));
  if (!m) throw ConsistencyError("superlattice does not contain Z^2");
  return *m;
}

FiniteTorusSubgroup kernel_subgroup(const Mat2Z& m) {
  if (m.det() <= 0) throw DomainError("kernel_subgroup requires det > 0 (got " + m.det().str() + ")");
  const Mat2Q inv = inverse(m);
  // m^-1 Z^2 is spanned by the columns of m^-1.
  return subgroup_from_generators({{inv.a, inv.c}, {inv.b, inv.d}});
}

Int divisor_sum(const Int& n) {
  if (n < 1) throw DomainError("divisor_sum requires n >= 1");
  Int s = 0;
  for (Int k = 1; k * k <= n; ++k) {
    if (n % k != 0) continue;
    s += k;
    if (k * k != n) s += n / k;
  }
  return s;
}

}  // namespace framed
