#include "framed/selftest.hpp"

#include "framed/orbit.hpp"

#include <random>

namespace framed {

namespace {

class Property {
public:
  explicit Property(std::string name) : name_(std::move(name)) {}

  void check(bool ok, const std::function<std::string()>& describe) {
    ++samples_;
    if (ok) return;
    ++failures_;
    if (counterexample_.empty()) counterexample_ = describe();
  }

  bool passed() const { return failures_ == 0; }

  Json json() const {
    Json j;
    j["name"] = name_;
    j["samples"] = samples_;
    j["passed"] = passed();
    if (!passed()) {
      j["failures"] = failures_;
      j["counterexample"] = counterexample_;
    }
    return j;
  }

private:
  std::string name_;
  std::size_t samples_ = 0;
  std::size_t failures_ = 0;
  std::string counterexample_;
};

class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  // Uniform on [lo, hi]; modulo bias is irrelevant at these ranges and keeps runs portable.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Mat2Z positive_det(std::int64_t bound) {
    for (;;) {
      Mat2Z m{uniform(-bound, bound), uniform(-bound, bound), uniform(-bound, bound), uniform(-bound, bound)};
      if (m.det() > 0) return m;
    }
  }

  CoverElement cover(std::int64_t bound) { return {positive_det(bound), uniform(-3, 3)}; }

private:
  std::mt19937_64 gen_;
};

Json finish(const std::string& suite, const std::vector<Property>& props, std::uint64_t seed) {
  Json j;
  j["suite"] = suite;
  j["seed"] = seed;
  bool ok = true;
  std::size_t samples = 0;
  j["properties"] = Json::array();
  for (const auto& p : props) {
    ok = ok && p.passed();
    const Json pj = p.json();
    samples += pj["samples"].get<std::size_t>();
    j["properties"].push_back(pj);
  }
  j["samples"] = samples;
  j["passed"] = ok;
  return j;
}

Json cocycle_suite(std::uint64_t seed) {
  constexpr int kSamples = 1000;
  Sampler rng(seed);
  Property unit_relation("unit(z_A) unit(z_B) unit(zeta) = unit(z_AB)");
  Property positive("Re zeta > 0");
  Property carry_range("carry in {-1,0,1}");
  Property alpha("1 - conj(alpha_A) alpha_(B^-1) is a positive multiple of zeta");
  Property assoc("cover_mul associative");
  Property transpose("transpose reverses products");
  Property projection("cover_mul projects to matrix multiplication");
  for (int s = 0; s < kSamples; ++s) {
    const Mat2Z a = rng.positive_det(20), b = rng.positive_det(20);
    const auto where = [&] { return "A=" + format(a) + " B=" + format(b); };
    const RationalComplex zeta = eta_zeta(a, b);
    positive.check(zeta.re > 0, where);
    unit_relation.check(same_direction(z_of(a) * z_of(b) * zeta, z_of(a * b)), where);
    const int carry = cover_carry(a, b);
    carry_range.check(carry >= -1 && carry <= 1, where);
    alpha.check(same_direction(alpha_cocycle(to_rational(a), to_rational(b)), zeta), where);

    const CoverElement x = rng.cover(20), y = rng.cover(20), w = rng.cover(20);
    const auto triple = [&] { return format(x) + " " + format(y) + " " + format(w); };
    assoc.check(cover_mul(cover_mul(x, y), w) == cover_mul(x, cover_mul(y, w)), triple);
    transpose.check(transpose_cover(cover_mul(x, y)) == cover_mul(transpose_cover(y), transpose_cover(x)), triple);
    projection.check(cover_mul(x, y).matrix == x.matrix * y.matrix, triple);
  }
  return finish("cocycle", {unit_relation, positive, carry_range, alpha, assoc, transpose, projection}, seed);
}

// Every finite subgroup of order n, from superlattices L = Lambda / n with n Z^2 <= Lambda <= Z^2 of index n.
std::vector<FiniteTorusSubgroup> subgroups_of_order(const Int& n) {
  std::vector<FiniteTorusSubgroup> out;
  for (const auto& lat : enumerate_sublattices(n)) {
    if (!lat.contains({0, Rational(n)})) continue;
    const Mat2Q& h = lat.basis;
    out.push_back(subgroup_from_superlattice({h.a / n, h.b / n}, {h.c / n, h.d / n}));
  }
  return out;
}

Json duality_suite(std::uint64_t seed) {
  Property round_trip("kernel_subgroup(matrix_from_subgroup(C)) = C, |C| <= 12");
  Property order("det(matrix_from_subgroup(C)) = |C|");
  Property forward("A <= B iff ker A <= ker B, index <= 6");
  Property backward("C <= C' iff A_C <= A_C', index <= 6");
  for (Int n = 1; n <= 12; ++n) {
    for (const auto& c : subgroups_of_order(n)) {
      const Mat2Z m = matrix_from_subgroup(c);
      const auto where = [&] { return "C with superlattice " + format(c.superlattice); };
      round_trip.check(kernel_subgroup(m) == c, where);
      order.check(m.det() == c.order(), where);
    }
  }
  const auto poset = factorization_poset(6);
  std::vector<Mat2Z> back;
  for (const auto& k : poset.kernels) back.push_back(row_hnf(matrix_from_subgroup(k)));
  for (std::size_t i = 0; i < poset.objects.size(); ++i) {
    for (std::size_t j = 0; j < poset.objects.size(); ++j) {
      const auto where = [&] { return format(poset.objects[i]) + " vs " + format(poset.objects[j]); };
      forward.check(poset.leq[i][j] == poset.kernels[i].subset_of(poset.kernels[j]), where);
      const bool matrices_leq = to_integer(to_rational(back[j]) * inverse(back[i])).has_value();
      backward.check(matrices_leq == poset.kernels[i].subset_of(poset.kernels[j]) && back[i] == poset.objects[i], where);
    }
  }
  return finish("duality", {round_trip, order, forward, backward}, seed);
}

void check_complex(const std::string& name, const ChainComplexQ& c, Property& bb, Property& cyclic, Property& bB) {
  const std::size_t top = c.top_degree();
  for (std::size_t k = 2; k <= top; ++k) {
    bb.check((c.boundary[k - 1] * c.boundary[k]).is_zero(), [&] { return name + " degree " + std::to_string(k); });
  }
  for (std::size_t k = 0; k < c.cyclic.size(); ++k) {
    SparseMatrixQ p = c.cyclic[k];
    for (std::size_t i = 0; i < k; ++i) p = c.cyclic[k] * p;
    cyclic.check(p == SparseMatrixQ::identity(c.dims[k]), [&] { return name + " t^(n+1) in degree " + std::to_string(k); });
  }
  for (std::size_t k = 0; k < c.connes.size(); ++k) {
    const auto where = [&] { return name + " degree " + std::to_string(k); };
    if (k + 1 < c.connes.size()) bB.check((c.connes[k + 1] * c.connes[k]).is_zero(), where);
    SparseMatrixQ anti = c.boundary[k + 1] * c.connes[k];
    if (k >= 1) anti = anti + c.connes[k - 1] * c.boundary[k];
    bB.check(anti.is_zero(), where);
  }
}

Json homology_suite(std::uint64_t seed) {
  constexpr int kTop = 5;
  Property bb("b o b = 0");
  Property cyclic("t^(n+1) = id");
  Property bB("B o B = 0 and bB + Bb = 0");
  Property hh0("degree 0 equals dim A/[A,A]");
  Property agree("normalized and unnormalized Betti numbers agree");
  Property symmetry("secondary Betti numbers independent of iteration order");
  Property rotations("bicyclic rotations commute and have orders p+1, q+1");
  for (const auto& name : builtin_algebra_names()) {
    const auto a = *builtin_algebra(name);
    const auto norm = cyclic_bar(a, kTop, true);
    const auto full = cyclic_bar(a, kTop, false);
    check_complex(name + " normalized", norm, bb, cyclic, bB);
    check_complex(name + " unnormalized", full, bb, cyclic, bB);
    const auto bn = betti_numbers(norm);
    const auto bu = betti_numbers(full);
    agree.check(bn == bu, [&] { return name; });
    hh0.check(!bn.empty() && bn[0] == hh0_direct(a), [&] { return name; });
  }
  for (const auto& name : {"dual", "prod2", "group2"}) {
    const auto two = diagonal_two_algebra(*builtin_algebra(name));
    const auto first = secondary_hh_betti(two, 3, IterationOrder::FirstMu1);
    const auto second = secondary_hh_betti(two, 3, IterationOrder::FirstMu2);
    symmetry.check(first.betti == second.betti, [&] { return std::string(name); });
    for (int p = 0; p <= 2; ++p) {
      for (int q = 0; q + p <= 2; ++q) {
        const auto [t1, t2] = bicyclic_rotations(two, p, q);
        const auto id = SparseMatrixQ::identity(t1.rows());
        SparseMatrixQ p1 = t1, p2 = t2;
        for (int i = 0; i < p; ++i) p1 = t1 * p1;
        for (int i = 0; i < q; ++i) p2 = t2 * p2;
        rotations.check(t1 * t2 == t2 * t1 && p1 == id && p2 == id,
                        [&] { return std::string(name) + " p=" + std::to_string(p) + " q=" + std::to_string(q); });
      }
    }
  }
  return finish("homology", {bb, cyclic, bB, hh0, agree, symmetry, rotations}, seed);
}

}  // namespace

std::vector<std::string> selftest_suites() { return {"cocycle", "duality", "homology", "all"}; }

Json run_selftest(const std::string& suite, std::uint64_t seed) {
  if (suite == "cocycle") return cocycle_suite(seed);
  if (suite == "duality") return duality_suite(seed);
  if (suite == "homology") return homology_suite(seed);
  if (suite == "all") {
    Json j;
    j["suite"] = "all";
    j["seed"] = seed;
    j["suites"] = Json::array({cocycle_suite(seed), duality_suite(seed), homology_suite(seed)});
    bool ok = true;
    std::size_t samples = 0;
    for (const auto& s : j["suites"]) {
      ok = ok && s["passed"].get<bool>();
      samples += s["samples"].get<std::size_t>();
    }
    j["samples"] = samples;
    j["passed"] = ok;
    return j;
  }
  throw DomainError("unknown selftest suite '" + suite + "' (expected cocycle, duality, homology or all)");
}

}  // namespace framed
