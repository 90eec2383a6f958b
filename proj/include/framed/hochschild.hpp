#pragma once

#include "framed/sparse.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace framed {

/// A finite-dimensional algebra over Q given by structure constants e_i e_j = sum_k c[i][j][k] e_k.
struct StructureConstantAlgebra {
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<Rational> unit;
  /// Flattened c[i][j][k] at (i * dim + j) * dim + k.
  std::vector<Rational> constants;

  StructureConstantAlgebra() = default;
  StructureConstantAlgebra(std::size_t dim, std::vector<std::string> labels, std::vector<Rational> unit);

  Rational& at(std::size_t i, std::size_t j, std::size_t k) { return constants[(i * dim + j) * dim + k]; }
  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const { return constants[(i * dim + j) * dim + k]; }

  /// e_i e_j as a sparse vector.
  SparseVector product(std::size_t i, std::size_t j) const;
  /// Bilinear product of coordinate vectors.
  std::vector<Rational> multiply(const std::vector<Rational>& x, const std::vector<Rational>& y) const;
};

/// Two unital associative products on one vector space with a shared unit.
struct TwoAlgebra {
  StructureConstantAlgebra first;
  StructureConstantAlgebra second;

  TwoAlgebra swapped() const { return {second, first}; }
};

struct Violation {
  std::string law;                  // "associativity", "left unit", "interchange", ...
  std::vector<std::size_t> indices; // the basis tuple where it fails
  std::size_t component = 0;        // output coordinate that differs

  std::string describe(const std::vector<std::string>& labels) const;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<std::string> messages;
  bool valid() const { return violations.empty() && messages.empty(); }
};

ValidationReport validate_algebra(const StructureConstantAlgebra& a);
/// Both products associative and unital, a shared unit, and the interchange law
/// mu2(mu1(a, b), mu1(c, d)) = mu1(mu2(a, c), mu2(b, d)) on basis 4-tuples.
ValidationReport validate_two_algebra(const TwoAlgebra& a);

/// Builtin algebras: q, dual (Q[x]/x^2), trunc3 (Q[x]/x^3), prod2 (Q x Q), mat2 (M2(Q)),
/// group2 (Q[Z/2]), group3 (Q[Z/3]). nullopt for unknown names.
std::optional<StructureConstantAlgebra> builtin_algebra(const std::string& name);
std::vector<std::string> builtin_algebra_names();

/// The 2-algebra (A, mu, mu).
TwoAlgebra diagonal_two_algebra(const StructureConstantAlgebra& a);

/// Plain-text algebra spec: lines "dim N", "basis l0 l1 ...", "unit u0 u1 ...",
/// "mul i j k c", optional "mul2 i j k c"; '#' starts a comment. Throws DomainError.
struct AlgebraSpec {
  StructureConstantAlgebra algebra;
  std::optional<StructureConstantAlgebra> second;
};
AlgebraSpec parse_algebra_spec(const std::string& text);
/// Builtin name or path to a spec file.
AlgebraSpec load_algebra(const std::string& name_or_path);

/// Same algebra in a basis whose vector 0 is the unit (identity if it already is).
StructureConstantAlgebra unit_first_basis(const StructureConstantAlgebra& a);
TwoAlgebra unit_first_basis(const TwoAlgebra& a);

/// Chains C_0 ... C_top with boundaries boundary[n]: C_n -> C_{n-1} (boundary[0] has 0 rows).
struct ChainComplexQ {
  std::vector<std::size_t> dims;
  std::vector<SparseMatrixQ> boundary;
  /// Cyclic operator t_n on C_n (unnormalized complexes only; empty otherwise).
  std::vector<SparseMatrixQ> cyclic;
  /// Connes' B_n: C_n -> C_{n+1}, for n < top.
  std::vector<SparseMatrixQ> connes;
  bool normalized = true;

  std::size_t top_degree() const { return dims.empty() ? 0 : dims.size() - 1; }
};

/// Cyclic bar complex C_n = A^{(n+1)} (or A (x) Abar^n when normalized), 0 <= n <= n_max.
///
/// b = sum_i (-1)^i d_i with the wrap-around face d_n(a_0..a_n) = (a_n a_0, a_1, ..., a_{n-1});
/// t_n = (-1)^n times the cyclic shift (a_n, a_0, ..., a_{n-1}); B = (1 - t) s N unnormalized and
/// B = s N normalized, where s inserts the unit in front and N = sum of powers of t.
/// The algebra is first moved to a unit-first basis.
ChainComplexQ cyclic_bar(const StructureConstantAlgebra& a, int n_max, bool normalized = true);

/// Betti numbers dim H_n for 0 <= n < top (degree top is truncated and not reported).
std::vector<std::size_t> betti_numbers(const ChainComplexQ& c);

struct HomologyResult {
  std::vector<std::size_t> betti;
  /// Highest chain degree that was built; betti covers 0 .. built_through - 1.
  std::size_t built_through = 0;
  /// Set when no degree could be reported.
  bool truncated = false;
  std::string note;
};

/// dim HH_n(A) for 0 <= n <= n_max - 2, from the cyclic bar complex built through degree n_max - 1.
HomologyResult hh_betti(const StructureConstantAlgebra& a, int n_max, bool normalized = true);

/// dim A/[A, A].
std::size_t hh0_direct(const StructureConstantAlgebra& a);

enum class IterationOrder { FirstMu1, FirstMu2 };

/// Bisimplicial cyclic bar construction of a 2-algebra.
///
/// C_{p,q} = (A^{(q+1)})^{(p+1)}: p+1 outer blocks of q+1 inner factors, stored block-major. The
/// inner (q) direction is the cyclic bar of the inner product applied in every block; the outer
/// (p) direction is the cyclic bar of A^{(q+1)} with the other product taken factorwise. The
/// normalized variant divides out grids whose outer block j >= 1 is all units or whose inner
/// column i >= 1 is all units.
class BicyclicModule {
public:
  BicyclicModule(const TwoAlgebra& a, IterationOrder order, bool normalized);

  std::size_t dim(int p, int q) const;
  /// Sum of (-1)^j d^h_j: C_{p,q} -> C_{p-1,q}. With all_faces = false the last face is omitted (b').
  SparseMatrixQ horizontal(int p, int q, bool all_faces = true) const;
  /// Sum of (-1)^i d^v_i: C_{p,q} -> C_{p,q-1}, without the totalization sign.
  SparseMatrixQ vertical(int p, int q, bool all_faces = true) const;
  /// t^(1): (-1)^p times the rotation of the outer blocks. Unnormalized only.
  SparseMatrixQ outer_rotation(int p, int q) const;
  /// t^(2): (-1)^q times the simultaneous rotation of the inner factors of every block. Unnormalized only.
  SparseMatrixQ inner_rotation(int p, int q) const;

  /// Total complex with d = d^h + (-1)^p d^v, degrees 0 .. top.
  ChainComplexQ total_complex(int top) const;

  struct Impl;

private:
  std::shared_ptr<Impl> impl_;
};

/// dim HH^(2)_d for 0 <= d <= total_max - 2. DomainError if the 2-algebra is invalid.
HomologyResult secondary_hh_betti(const TwoAlgebra& a, int total_max, IterationOrder order, bool normalized = true);

/// (t^(1), t^(2)) on the unnormalized C_{p,q}.
std::pair<SparseMatrixQ, SparseMatrixQ> bicyclic_rotations(const TwoAlgebra& a, int p, int q);

}  // namespace framed
