#pragma once

#include "framed/lattice.hpp"

#include <vector>

namespace framed {

/// The transitive T^2-space T^2/C for a finite subgroup C.
struct OrbitObject {
  FiniteTorusSubgroup subgroup;

  friend bool operator==(const OrbitObject&, const OrbitObject&) = default;
};

/// The equivariant map T^2/C -> T^2/C', x + C |-> x + t + C'. Exists only when C is in C'.
struct OrbitMorphism {
  OrbitObject source;
  OrbitObject target;
  /// Canonical representative of t modulo quot^-1(C').
  Vec2Q translation;

  friend bool operator==(const OrbitMorphism&, const OrbitMorphism&) = default;
};

bool hom_exists(const OrbitObject& c, const OrbitObject& c2);

/// Throws DomainError if source.subgroup is not contained in target.subgroup.
OrbitMorphism make_morphism(const OrbitObject& source, const OrbitObject& target, const Vec2Q& translation);
OrbitMorphism identity_morphism(const OrbitObject& c);

/// Diagram-order composite: first f, then g. Requires target(f) = source(g).
OrbitMorphism compose(const OrbitMorphism& f, const OrbitMorphism& g);

/// T^2/C |-> T^2/m^-1(C): the right action of the isogeny monoid (superlattice m^-1 quot^-1(C)).
OrbitObject preimage_act(const Mat2Z& m, const OrbitObject& c);

/// Left action m . T^2/C := T^2/(m^T)^-1(C), i.e. the preimage action precomposed with the
/// transpose anti-isomorphism. Satisfies isogeny_act(AB, C) = isogeny_act(A, isogeny_act(B, C)).
/// Throws DomainError if det(m) <= 0.
OrbitObject isogeny_act(const Mat2Z& m, const OrbitObject& c);

/// Left GL2(Z)-cosets [A] of isogenies with det(A) <= max_index, ordered by [A] <= [B] iff B A^-1
/// is integral, together with the order isomorphism [A] |-> ker(A) to finite subgroups.
struct FactorizationPoset {
  /// Row-HNF representatives, sorted by determinant then by entries.
  std::vector<Mat2Z> objects;
  /// kernels[i] = kernel_subgroup(objects[i]).
  std::vector<FiniteTorusSubgroup> kernels;
  /// leq[i][j] iff objects[i] <= objects[j].
  std::vector<std::vector<bool>> leq;

  /// Immediate successors of object i (index ratio prime).
  std::vector<std::size_t> covers(std::size_t i) const;
};

FactorizationPoset factorization_poset(const Int& max_index);

}  // namespace framed
