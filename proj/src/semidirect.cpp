#include "framed/semidirect.hpp"

namespace framed {

TorusPoint::TorusPoint(Rational x, Rational y) : x_(frac(x)), y_(frac(y)) {}

SemidirectElement make_semidirect(const TorusPoint& p, LinearPart part) {
  if (const auto* m = std::get_if<Mat2Z>(&part); m && m->det() == 0) {
    throw DomainError("semidirect E(Z) part must have det != 0");
  }
  if (const auto* x = std::get_if<CoverElement>(&part); x && x->matrix.det() <= 0) {
    throw DomainError("semidirect cover part must have det > 0");
  }
  return {p, std::move(part)};
}

bool operator==(const SemidirectElement& g, const SemidirectElement& h) {
  if (!(g.point == h.point) || g.part.index() != h.part.index()) return false;
  if (const auto* w = std::get_if<BraidWord>(&g.part)) return braid_equal(*w, std::get<BraidWord>(h.part));
  return g.part == h.part;
}

SemidirectElement sd_identity(Ambient ambient) {
  switch (ambient) {
    case Ambient::Isogeny: return {{}, Mat2Z::identity()};
    case Ambient::Braid: return {{}, BraidWord{}};
    case Ambient::Cover: return {{}, CoverElement{}};
  }
  throw DomainError("unknown ambient monoid");
}

TorusPoint act_point(const Mat2Z& m, const TorusPoint& p) {
  if (m.det() == 0) throw DomainError("act_point requires det != 0");
  const Vec2Q v = to_rational(m) * p.vec();
  return {v.x, v.y};
}

Mat2Z matrix_part(const SemidirectElement& g) {
  return std::visit(
      [](const auto& x) -> Mat2Z {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Mat2Z>) {
          return x;
        } else if constexpr (std::is_same_v<T, BraidWord>) {
          return phi(x);
        } else {
          return x.matrix;
        }
      },
      g.part);
}

TorusPoint aff_apply(const SemidirectElement& g, const TorusPoint& q) { return act_point(matrix_part(g), q) + g.point; }

SemidirectElement sd_mul(const SemidirectElement& g, const SemidirectElement& h) {
  if (g.ambient() != h.ambient()) throw DomainError("sd_mul: elements live in different ambient monoids");
  const TorusPoint point = act_point(matrix_part(g), h.point) + g.point;
  switch (g.ambient()) {
    case Ambient::Isogeny: return {point, std::get<Mat2Z>(g.part) * std::get<Mat2Z>(h.part)};
    case Ambient::Braid: return {point, braid_mul(std::get<BraidWord>(g.part), std::get<BraidWord>(h.part))};
    case Ambient::Cover: return {point, cover_mul(std::get<CoverElement>(g.part), std::get<CoverElement>(h.part))};
  }
  throw DomainError("unknown ambient monoid");
}

std::optional<SemidirectElement> sd_inverse(const SemidirectElement& g) {
  // (p, A)^-1 = (-A^-1 p, A^-1).
  LinearPart inv_part;
  Mat2Z inv_matrix;
  switch (g.ambient()) {
    case Ambient::Isogeny: {
      const auto& m = std::get<Mat2Z>(g.part);
      if (!classify(m).in_GL2Z) return std::nullopt;
      inv_matrix = unimodular_inverse(m);
      inv_part = inv_matrix;
      break;
    }
    case Ambient::Braid: {
      const auto w = std::get<BraidWord>(g.part).inverse();
      inv_matrix = phi(w);
      inv_part = w;
      break;
    }
    case Ambient::Cover: {
      const auto& x = std::get<CoverElement>(g.part);
      if (!classify(x.matrix).in_SL2Z) return std::nullopt;
      const auto y = cover_inverse(x);
      inv_matrix = y.matrix;
      inv_part = y;
      break;
    }
  }
  const TorusPoint moved = act_point(inv_matrix, g.point);
  return SemidirectElement{{-moved.x(), -moved.y()}, std::move(inv_part)};
}

bool sd_invertible(const SemidirectElement& g) { return sd_inverse(g).has_value(); }

SemidirectElement project_to_isogeny(const SemidirectElement& g) { return {g.point, matrix_part(g)}; }

}  // namespace framed
