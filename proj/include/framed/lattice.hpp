#pragma once

#include "framed/intmat2.hpp"

#include <vector>

namespace framed {

enum class LatticeKind { Sublattice, Superlattice };

/// A full-rank lattice in Q^2 stored by its row HNF [[a, b], [0, d]] (a, d > 0, 0 <= b < d).
///
/// Sublattices of Z^2 have integer entries; superlattices contain Z^2 with finite index.
struct HnfLattice {
  Mat2Q basis;
  LatticeKind kind = LatticeKind::Sublattice;

  /// [Z^2 : L] for sublattices, [L : Z^2] for superlattices.
  Int index() const;
  bool contains(const Vec2Q& v) const;

  friend bool operator==(const HnfLattice&, const HnfLattice&) = default;
};

/// All sublattices of Z^2 of index n, ordered by (a, b) of their HNF. Count is sigma_1(n).
std::vector<HnfLattice> enumerate_sublattices(const Int& n);

/// Lattice spanned by the rows of m (the image of m^T); invariant under m -> U m, U in GL2(Z).
HnfLattice image_lattice(const Mat2Z& m);
/// Lattice spanned by the columns of m (the image of m); invariant under m -> m U.
HnfLattice column_lattice(const Mat2Z& m);

/// Canonical representative of v modulo the lattice with the given HNF basis,
/// lying in [0, a) x [0, d).
Vec2Q reduce_mod(const Vec2Q& v, const Mat2Q& hnf);

/// Point of the torus: both coordinates reduced into [0, 1).
Vec2Q reduce_mod_one(const Vec2Q& v);

/// A finite subgroup C of T^2, identified with the superlattice quot^-1(C) of Z^2.
struct FiniteTorusSubgroup {
  std::vector<Vec2Q> generators;
  /// Canonical rational HNF of quot^-1(C).
  Mat2Q superlattice;

  Int order() const;
  bool contains(const Vec2Q& point) const;
  /// C is contained in other.
  bool subset_of(const FiniteTorusSubgroup& other) const;
  /// All elements, each reduced into [0, 1)^2; sorted. Intended for small orders.
  std::vector<Vec2Q> elements() const;

  /// Equality of subgroups: the canonical superlattices agree.
  friend bool operator==(const FiniteTorusSubgroup& x, const FiniteTorusSubgroup& y) {
    return x.superlattice == y.superlattice;
  }
};

FiniteTorusSubgroup trivial_subgroup();

/// The subgroup generated by the images of the given rational points.
FiniteTorusSubgroup subgroup_from_generators(const std::vector<Vec2Q>& gens);

/// The subgroup whose preimage is spanned by the two given rows; DomainError unless it contains Z^2.
FiniteTorusSubgroup subgroup_from_superlattice(const Vec2Q& r1, const Vec2Q& r2);

/// A_C with A_C u_i = e_i, where (u_1, u_2) are the HNF rows of quot^-1(C) used as column
/// vectors. They are non-negative and positively oriented; det(A_C) = |C|.
Mat2Z matrix_from_subgroup(const FiniteTorusSubgroup& c);

/// ker(T^2 -> T^2) for the endomorphism induced by m; preimage lattice m^-1 Z^2.
/// Throws DomainError if det(m) <= 0.
FiniteTorusSubgroup kernel_subgroup(const Mat2Z& m);

/// sigma_1(n), computed from the divisor list.
Int divisor_sum(const Int& n);

}  // namespace framed
