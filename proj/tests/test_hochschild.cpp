#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "framed/hochschild.hpp"

#include <vector>

using namespace framed;

namespace {

StructureConstantAlgebra builtin(const std::string& name) { return *builtin_algebra(name); }

using Dense = std::vector<std::vector<Rational>>;

std::size_t dense_rank(Dense m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::size_t power(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// Unnormalized Hochschild boundary A^(n+1) -> A^n straight from the definition.
Dense dense_boundary(const StructureConstantAlgebra& a, std::size_t n) {
  const std::size_t d = a.dim;
  Dense m(power(d, n), std::vector<Rational>(power(d, n + 1)));
  std::vector<std::size_t> digits(n + 1);
  for (std::size_t col = 0; col < power(d, n + 1); ++col) {
    for (std::size_t k = 0, c = col; k <= n; ++k, c /= d) digits[n - k] = c % d;
    for (std::size_t i = 0; i <= n; ++i) {
      const Rational sign = i % 2 == 0 ? 1 : -1;
      const std::size_t x = i < n ? digits[i] : digits[n];
      const std::size_t y = i < n ? digits[i + 1] : digits[0];
      for (std::size_t out = 0; out < d; ++out) {
        const Rational& c = a.at(x, y, out);
        if (c == 0) continue;
        std::vector<std::size_t> face;
        if (i < n) {
          face.assign(digits.begin(), digits.begin() + i);
          face.push_back(out);
          face.insert(face.end(), digits.begin() + i + 2, digits.end());
        } else {
          face.push_back(out);
          face.insert(face.end(), digits.begin() + 1, digits.begin() + n);
        }
        std::size_t row = 0;
        for (auto f : face) row = row * d + f;
        m[row][col] += sign * c;
      }
    }
  }
  return m;
}

std::vector<std::size_t> dense_betti(const StructureConstantAlgebra& a, std::size_t top) {
  std::vector<std::size_t> ranks{0};
  for (std::size_t n = 1; n <= top; ++n) ranks.push_back(dense_rank(dense_boundary(a, n)));
  std::vector<std::size_t> betti;
  for (std::size_t n = 0; n < top; ++n) betti.push_back(power(a.dim, n + 1) - ranks[n] - ranks[n + 1]);
  return betti;
}

SparseMatrixQ mat_power(const SparseMatrixQ& m, int k) {
  SparseMatrixQ p = SparseMatrixQ::identity(m.rows());
  for (int i = 0; i < k; ++i) p = m * p;
  return p;
}

void check_mixed_complex(const ChainComplexQ& c) {
  for (std::size_t k = 2; k <= c.top_degree(); ++k) CHECK((c.boundary[k - 1] * c.boundary[k]).is_zero());
  for (std::size_t k = 0; k < c.cyclic.size(); ++k) {
    CHECK(mat_power(c.cyclic[k], static_cast<int>(k) + 1) == SparseMatrixQ::identity(c.dims[k]));
  }
  for (std::size_t k = 0; k < c.connes.size(); ++k) {
    if (k + 1 < c.connes.size()) CHECK((c.connes[k + 1] * c.connes[k]).is_zero());
    SparseMatrixQ anti = c.boundary[k + 1] * c.connes[k];
    if (k >= 1) anti = anti + c.connes[k - 1] * c.boundary[k];
    CHECK(anti.is_zero());
  }
}

StructureConstantAlgebra permuted(const StructureConstantAlgebra& a, const std::vector<std::size_t>& perm) {
  std::vector<std::string> labels(a.dim);
  std::vector<Rational> unit(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    labels[perm[i]] = a.labels[i];
    unit[perm[i]] = a.unit[i];
  }
  StructureConstantAlgebra out(a.dim, labels, unit);
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t j = 0; j < a.dim; ++j) {
      for (std::size_t k = 0; k < a.dim; ++k) out.at(perm[i], perm[j], perm[k]) = a.at(i, j, k);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("builtin algebras are valid") {
  for (const auto& name : builtin_algebra_names()) {
    CAPTURE(name);
    CHECK(validate_algebra(builtin(name)).valid());
  }
  CHECK_FALSE(builtin_algebra("nope").has_value());
}

TEST_CASE("validation reports a perturbed product") {
  auto a = builtin("trunc3");
  a.at(1, 1, 0) += 1;
  const auto report = validate_algebra(a);
  REQUIRE_FALSE(report.valid());
  bool found = false;
  for (const auto& v : report.violations) {
    found |= v.law == "associativity" && v.indices == std::vector<std::size_t>{1, 1, 2} && v.component == 2;
  }
  CHECK(found);
  CHECK(report.violations.front().describe(a.labels).find("associativity") == 0);

  auto b = builtin("dual");
  b.at(0, 1, 1) = 2;
  CHECK_FALSE(validate_algebra(b).valid());
  CHECK(validate_algebra(b).violations.front().law == "left unit");
}

TEST_CASE("2-algebra validation") {
  for (const auto& name : {"q", "dual", "trunc3", "prod2", "group2", "group3"}) {
    const auto two = diagonal_two_algebra(builtin(name));
    CHECK(validate_two_algebra(two).valid());
    CHECK(validate_two_algebra(two.swapped()).valid());
  }
  const auto m2 = validate_two_algebra(diagonal_two_algebra(builtin("mat2")));
  REQUIRE_FALSE(m2.valid());
  CHECK(m2.violations.front().law == "interchange");
  CHECK(m2.violations.front().indices.size() == 4);

  const TwoAlgebra mismatched{builtin("dual"), builtin("prod2")};
  CHECK_FALSE(validate_two_algebra(mismatched).valid());
}

TEST_CASE("cyclic bar dimensions") {
  const auto q = cyclic_bar(builtin("q"), 3, false);
  CHECK(q.dims == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(q.boundary[1].at(0, 0) == 0);
  CHECK(q.boundary[2].at(0, 0) == 1);
  CHECK(q.boundary[3].at(0, 0) == 0);
  CHECK(cyclic_bar(builtin("q"), 3, true).dims == std::vector<std::size_t>{1, 0, 0, 0});
  CHECK(cyclic_bar(builtin("dual"), 5, true).dims == std::vector<std::size_t>(6, 2));
  CHECK(cyclic_bar(builtin("mat2"), 2, false).dims == std::vector<std::size_t>{4, 16, 64});
  CHECK(cyclic_bar(builtin("mat2"), 2, true).dims == std::vector<std::size_t>{4, 12, 36});
  CHECK_THROWS_AS(cyclic_bar(builtin("q"), -1), DomainError);
}

TEST_CASE("t_1 is the signed swap") {
  const auto c = cyclic_bar(builtin("dual"), 2, false);
  const auto& t1 = c.cyclic[1];
  // basis order (x0, x1) -> code x0 * 2 + x1
  CHECK(t1.at(2 * 1 + 0, 2 * 0 + 1) == -1);
  CHECK(t1.at(2 * 0 + 1, 2 * 1 + 0) == -1);
  CHECK(t1 * t1 == SparseMatrixQ::identity(4));
}

TEST_CASE("mixed complex identities for every builtin algebra through degree 5") {
  for (const auto& name : builtin_algebra_names()) {
    CAPTURE(name);
    check_mixed_complex(cyclic_bar(builtin(name), 5, true));
    check_mixed_complex(cyclic_bar(builtin(name), 5, false));
  }
}

TEST_CASE("Betti numbers") {
  CHECK(hh_betti(builtin("q"), 5).betti == std::vector<std::size_t>{1, 0, 0, 0});
  CHECK(hh_betti(builtin("dual"), 6).betti == std::vector<std::size_t>{2, 1, 1, 1, 1});
  CHECK(hh_betti(builtin("dual"), 6, false).betti == std::vector<std::size_t>{2, 1, 1, 1, 1});
  CHECK(hh_betti(builtin("mat2"), 4).betti == std::vector<std::size_t>{1, 0, 0});
  CHECK(hh_betti(builtin("mat2"), 4).betti == hh_betti(builtin("q"), 4).betti);
  const auto r = hh_betti(builtin("dual"), 6);
  CHECK(r.built_through == 5);
  CHECK(r.note.find("through degree 5") != std::string::npos);
  CHECK(hh_betti(builtin("q"), 1).truncated);
  CHECK_THROWS_AS(hh_betti(builtin("q"), -2), DomainError);
}

TEST_CASE("Betti numbers agree with a dense rank oracle") {
  CHECK(dense_betti(builtin("dual"), 5) == std::vector<std::size_t>{2, 1, 1, 1, 1});
  CHECK(dense_betti(builtin("mat2"), 3) == std::vector<std::size_t>{1, 0, 0});
  for (const auto& name : {"q", "trunc3", "prod2", "group2", "group3"}) {
    CAPTURE(name);
    CHECK(dense_betti(builtin(name), 4) == hh_betti(builtin(name), 5).betti);
  }
}

TEST_CASE("normalized and unnormalized agree, degree 0 matches hh0") {
  for (const auto& name : builtin_algebra_names()) {
    CAPTURE(name);
    const auto a = builtin(name);
    const auto n = hh_betti(a, 5, true).betti;
    CHECK(n == hh_betti(a, 5, false).betti);
    CHECK(n[0] == hh0_direct(a));
  }
}

TEST_CASE("hh0 examples") {
  CHECK(hh0_direct(builtin("prod2")) == 2);
  CHECK(hh0_direct(builtin("mat2")) == 1);
  CHECK(hh0_direct(builtin("dual")) == 2);
}

TEST_CASE("homology does not depend on where the unit sits in the basis") {
  const auto m2 = builtin("mat2");
  CHECK(unit_first_basis(m2).unit == std::vector<Rational>{1, 0, 0, 0});
  CHECK(validate_algebra(unit_first_basis(m2)).valid());
  const auto shuffled = permuted(builtin("trunc3"), {2, 0, 1});
  CHECK(validate_algebra(shuffled).valid());
  CHECK(hh_betti(shuffled, 5).betti == hh_betti(builtin("trunc3"), 5).betti);
  CHECK(cyclic_bar(shuffled, 3).dims == cyclic_bar(builtin("trunc3"), 3).dims);
}

TEST_CASE("secondary Hochschild homology") {
  const auto q = diagonal_two_algebra(builtin("q"));
  CHECK(secondary_hh_betti(q, 4, IterationOrder::FirstMu1).betti == std::vector<std::size_t>{1, 0, 0});
  CHECK(secondary_hh_betti(q, 4, IterationOrder::FirstMu2).betti == std::vector<std::size_t>{1, 0, 0});
  for (const auto& name : {"dual", "trunc3", "prod2", "group2"}) {
    CAPTURE(name);
    const auto two = diagonal_two_algebra(builtin(name));
    const auto b1 = secondary_hh_betti(two, 4, IterationOrder::FirstMu1).betti;
    CHECK(b1 == secondary_hh_betti(two, 4, IterationOrder::FirstMu2).betti);
    CHECK(b1 == secondary_hh_betti(two, 4, IterationOrder::FirstMu1, false).betti);
  }
  CHECK_THROWS_AS(secondary_hh_betti(diagonal_two_algebra(builtin("mat2")), 3, IterationOrder::FirstMu1), DomainError);
  CHECK(secondary_hh_betti(q, 1, IterationOrder::FirstMu1).truncated);
}

TEST_CASE("bicomplex structure") {
  for (const auto& name : {"dual", "group2"}) {
    for (const bool normalized : {true, false}) {
      const BicyclicModule m(diagonal_two_algebra(builtin(name)), IterationOrder::FirstMu1, normalized);
      for (int p = 0; p <= 2; ++p) {
        for (int q = 0; q <= 2; ++q) {
          CAPTURE(p);
          CAPTURE(q);
          if (p >= 2) CHECK((m.horizontal(p - 1, q) * m.horizontal(p, q)).is_zero());
          if (q >= 2) CHECK((m.vertical(p, q - 1) * m.vertical(p, q)).is_zero());
          if (p >= 1 && q >= 1) CHECK(m.horizontal(p, q - 1) * m.vertical(p, q) == m.vertical(p - 1, q) * m.horizontal(p, q));
        }
      }
      const auto total = m.total_complex(4);
      for (std::size_t d = 2; d <= 4; ++d) CHECK((total.boundary[d - 1] * total.boundary[d]).is_zero());
    }
  }
}

TEST_CASE("transposing the bicomplex of a diagonal 2-algebra") {
  const auto two = diagonal_two_algebra(builtin("dual"));
  const BicyclicModule m(two, IterationOrder::FirstMu1, true);
  for (int p = 0; p <= 3; ++p) {
    for (int q = 0; q <= 3; ++q) CHECK(m.dim(p, q) == m.dim(q, p));
  }
}

TEST_CASE("bicyclic rotations") {
  const auto two = diagonal_two_algebra(builtin("dual"));
  const auto [a0, b0] = bicyclic_rotations(two, 0, 0);
  CHECK(a0 == SparseMatrixQ::identity(2));
  CHECK(b0 == SparseMatrixQ::identity(2));

  const auto [a1, b1] = bicyclic_rotations(two, 1, 0);
  CHECK(a1 * a1 == SparseMatrixQ::identity(4));
  CHECK(a1.at(1, 2) == -1);
  CHECK(b1 == SparseMatrixQ::identity(4));

  const auto [t1, t2] = bicyclic_rotations(two, 1, 1);
  CHECK(t1.rows() == 16);
  CHECK(t1 * t2 == t2 * t1);
  CHECK(mat_power(t1, 2) == SparseMatrixQ::identity(16));
  CHECK(mat_power(t2, 2) == SparseMatrixQ::identity(16));

  for (int p = 0; p <= 3; ++p) {
    for (int q = 0; q <= 2; ++q) {
      const auto [x, y] = bicyclic_rotations(diagonal_two_algebra(builtin("group2")), p, q);
      CHECK(x * y == y * x);
      CHECK(mat_power(x, p + 1) == SparseMatrixQ::identity(x.rows()));
      CHECK(mat_power(y, q + 1) == SparseMatrixQ::identity(y.rows()));
    }
  }
}

TEST_CASE("rotations commute with the boundary in the other direction") {
  const BicyclicModule m(diagonal_two_algebra(builtin("trunc3")), IterationOrder::FirstMu1, false);
  for (int p = 0; p <= 2; ++p) {
    for (int q = 1; q <= 2; ++q) {
      CHECK(m.vertical(p, q) * m.outer_rotation(p, q) == m.outer_rotation(p, q - 1) * m.vertical(p, q));
    }
  }
  for (int p = 1; p <= 2; ++p) {
    for (int q = 0; q <= 2; ++q) {
      CHECK(m.horizontal(p, q) * m.inner_rotation(p, q) == m.inner_rotation(p - 1, q) * m.horizontal(p, q));
    }
  }
  // Cyclic identity in the own direction: b (1 - t) = (1 - t) b'.
  for (int p = 1; p <= 3; ++p) {
    const int q = 1;
    const auto id_src = SparseMatrixQ::identity(m.dim(p, q));
    const auto id_dst = SparseMatrixQ::identity(m.dim(p - 1, q));
    CHECK(m.horizontal(p, q) * (id_src - m.outer_rotation(p, q)) ==
          (id_dst - m.outer_rotation(p - 1, q)) * m.horizontal(p, q, false));
  }
}

TEST_CASE("rotations need the unnormalized complex") {
  const BicyclicModule m(diagonal_two_algebra(builtin("dual")), IterationOrder::FirstMu1, true);
  CHECK_THROWS_AS(m.outer_rotation(1, 1), DomainError);
}

TEST_CASE("algebra spec files") {
  const auto spec = parse_algebra_spec(R"(# dual numbers
dim 2
basis 1 x
unit 1 0
mul 0 0 0 1
mul 0 1 1 1
mul 1 0 1 1
)");
  CHECK(spec.algebra.labels == std::vector<std::string>{"1", "x"});
  CHECK(spec.algebra.constants == builtin("dual").constants);
  CHECK_FALSE(spec.second.has_value());

  const auto two = parse_algebra_spec("dim 1\nunit 1\nmul 0 0 0 1\nmul2 0 0 0 1\n");
  CHECK(two.second.has_value());
  CHECK(parse_algebra_spec("dim 1\nunit 1\nmul 0 0 0 1/2\n").algebra.at(0, 0, 0) == Rational(1, 2));

  CHECK_THROWS_AS(parse_algebra_spec("unit 1\n"), DomainError);
  CHECK_THROWS_AS(parse_algebra_spec("dim 2\nunit 1 0\nmul 0 0 5 1\n"), DomainError);
  CHECK_THROWS_AS(parse_algebra_spec("dim 2\nunit 1\n"), DomainError);
  CHECK_THROWS_AS(parse_algebra_spec("dim 2\nunit 1 0\nfoo\n"), DomainError);
  CHECK_THROWS_AS(parse_algebra_spec("dim 1\nmul 0 0 0 1\n"), DomainError);
  CHECK(load_algebra("mat2").algebra.dim == 4);
  CHECK_THROWS_AS(load_algebra("/nonexistent/algebra.txt"), DomainError);
}
