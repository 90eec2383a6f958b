#pragma once

#include "framed/braid.hpp"
#include "framed/cover.hpp"
#include "framed/intmat2.hpp"
#include "framed/lattice.hpp"
#include "framed/semidirect.hpp"

#include <cmath>
#include <random>
#include <set>

namespace testing {

using namespace framed;

class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen_); }

  Mat2Z matrix(std::int64_t bound) { return {uniform(-bound, bound), uniform(-bound, bound), uniform(-bound, bound), uniform(-bound, bound)}; }

  Mat2Z positive_det(std::int64_t bound) {
    for (;;) {
      const Mat2Z m = matrix(bound);
      if (m.det() > 0) return m;
    }
  }

  BraidWord word(std::size_t max_len) {
    static constexpr int kLetters[] = {1, -1, 2, -2};
    std::vector<int> letters(uniform(0, static_cast<std::int64_t>(max_len)));
    for (auto& l : letters) l = kLetters[uniform(0, 3)];
    return BraidWord(letters);
  }

  Mat2Z unimodular(int steps) {
    Mat2Z m = Mat2Z::identity();
    for (int i = 0; i < steps; ++i) {
      const Mat2Z gens[] = {unipotent_upper(), unimodular_inverse(unipotent_upper()), unipotent_lower(),
                            unimodular_inverse(unipotent_lower()), Mat2Z{0, 1, 1, 0}};
      m = m * gens[uniform(0, 4)];
    }
    return m;
  }

  CoverElement cover(std::int64_t bound) { return {positive_det(bound), uniform(-3, 3)}; }

  std::mt19937_64& engine() { return gen_; }

private:
  std::mt19937_64 gen_;
};

inline double principal_arg(const Mat2<double>& m) { return std::atan2(m.b - m.c, m.a + m.d); }

/// Continuous argument of z along the piecewise-linear path P_k (I + t (G_k - I)) through the letters of w.
inline double path_lift(const BraidWord& w, int steps = 2000) {
  const Mat2<double> u1{1, 1, 0, 1}, u1i{1, -1, 0, 1}, u2{1, 0, -1, 1}, u2i{1, 0, 1, 1};
  Mat2<double> p = Mat2<double>::identity();
  double total = 0;
  double prev = principal_arg(p);
  for (int l : w.letters()) {
    const Mat2<double>& g = l == 1 ? u1 : l == -1 ? u1i : l == 2 ? u2 : u2i;
    for (int s = 1; s <= steps; ++s) {
      const double t = static_cast<double>(s) / steps;
      const Mat2<double> seg{1 + t * (g.a - 1), t * g.b, t * g.c, 1 + t * (g.d - 1)};
      const double cur = principal_arg(p * seg);
      double delta = cur - prev;
      if (delta > M_PI) delta -= 2 * M_PI;
      if (delta < -M_PI) delta += 2 * M_PI;
      total += delta;
      prev = cur;
    }
    p = p * g;
  }
  return total;
}

inline std::int64_t sigma1(std::int64_t n) {
  std::int64_t s = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    if (n % k == 0) s += k;
  }
  return s;
}

/// Inserts an inverse pair or a relator (a b a B A B, b a b A B A, or Delta^2 Delta^-2) at a random position.
inline BraidWord perturb(const BraidWord& word, Rng& rng) {
  std::vector<int> l = word.letters();
  std::vector<int> piece;
  switch (rng.uniform(0, 3)) {
    case 0: {
      const int g = static_cast<int>(rng.uniform(1, 2)) * (rng.uniform(0, 1) ? 1 : -1);
      piece = {g, -g};
      break;
    }
    case 1: piece = {1, 2, 1, -2, -1, -2}; break;
    case 2: piece = {2, 1, 2, -1, -2, -1}; break;
    default: piece = {1, 2, 1, 1, 2, 1, -1, -2, -1, -2, -1, -2}; break;
  }
  const auto pos = rng.uniform(0, static_cast<std::int64_t>(l.size()));
  l.insert(l.begin() + pos, piece.begin(), piece.end());
  return BraidWord(l);
}

using Residues = std::set<std::pair<std::int64_t, std::int64_t>>;

/// A sublattice of index n contains n Z^2, so it is determined by its image in (Z/n)^2.
inline Residues residues(std::int64_t r1x, std::int64_t r1y, std::int64_t r2x, std::int64_t r2y, std::int64_t n) {
  Residues out;
  for (std::int64_t s = 0; s < n; ++s) {
    for (std::int64_t t = 0; t < n; ++t) {
      out.emplace((((s * r1x + t * r2x) % n) + n) % n, (((s * r1y + t * r2y) % n) + n) % n);
    }
  }
  return out;
}

/// Distinct row spans of all integer bases with |entries| <= n and determinant n.
inline std::size_t brute_force_sublattices(std::int64_t n) {
  std::set<Residues> seen;
  for (std::int64_t a = -n; a <= n; ++a) {
    for (std::int64_t b = -n; b <= n; ++b) {
      for (std::int64_t c = -n; c <= n; ++c) {
        for (std::int64_t d = -n; d <= n; ++d) {
          if (a * d - b * c == n) seen.insert(residues(a, b, c, d, n));
        }
      }
    }
  }
  return seen.size();
}

/// Every finite subgroup of order <= max_order, via superlattices L = Lambda / n with n Z^2 <= Lambda of index n.
inline std::vector<FiniteTorusSubgroup> all_subgroups(std::int64_t max_order) {
  std::vector<FiniteTorusSubgroup> out;
  for (std::int64_t n = 1; n <= max_order; ++n) {
    for (const auto& l : enumerate_sublattices(n)) {
      const Mat2Q& h = l.basis;
      out.push_back(subgroup_from_superlattice({h.a / n, h.b / n}, {h.c / n, h.d / n}));
    }
  }
  return out;
}

inline TorusPoint random_point(Rng& rng) {
  return {Rational(rng.uniform(0, 59), 60), Rational(rng.uniform(0, 59), 60)};
}

inline SemidirectElement random_element(Rng& rng, Ambient ambient) {
  const TorusPoint p = random_point(rng);
  switch (ambient) {
    case Ambient::Isogeny: {
      Mat2Z m = rng.matrix(6);
      while (m.det() == 0) m = rng.matrix(6);
      return make_semidirect(p, m);
    }
    case Ambient::Braid: return make_semidirect(p, rng.word(10));
    case Ambient::Cover: return make_semidirect(p, rng.cover(6));
  }
  return sd_identity(ambient);
}

/// The affine map q -> A q + p on rational representatives, reduced at the end.
inline TorusPoint affine_oracle(const Mat2Z& a, const TorusPoint& p, const TorusPoint& q) {
  const Vec2Q v = to_rational(a) * q.vec() + p.vec();
  return {frac(v.x), frac(v.y)};
}

}  // namespace testing
