#pragma once

#include "framed/braid.hpp"
#include "framed/cover.hpp"
#include "framed/intmat2.hpp"

#include <optional>
#include <variant>

namespace framed {

/// A rational point of T^2 = R^2/Z^2, coordinates kept in [0, 1).
class TorusPoint {
public:
  TorusPoint() = default;
  TorusPoint(Rational x, Rational y);

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  Vec2Q vec() const { return {x_, y_}; }

  friend TorusPoint operator+(const TorusPoint& p, const TorusPoint& q) { return {p.x_ + q.x_, p.y_ + q.y_}; }
  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;

private:
  Rational x_{0};
  Rational y_{0};
};

/// Which monoid the linear part lives in: E(Z), B3 (through phi), or the cover (through Psi).
enum class Ambient { Isogeny, Braid, Cover };

using LinearPart = std::variant<Mat2Z, BraidWord, CoverElement>;

/// (p, X) acting on T^2 by q |-> M(X) q + p, where M(X) is the matrix shadow of X.
struct SemidirectElement {
  TorusPoint point;
  LinearPart part;

  Ambient ambient() const { return static_cast<Ambient>(part.index()); }

  /// Braid parts compare as group elements, not as words.
  friend bool operator==(const SemidirectElement& g, const SemidirectElement& h);
};

/// Validating constructor; DomainError if an E(Z) part is singular or a cover part has det <= 0.
SemidirectElement make_semidirect(const TorusPoint& p, LinearPart part);
SemidirectElement sd_identity(Ambient ambient);

/// m p mod Z^2. DomainError if det(m) = 0.
TorusPoint act_point(const Mat2Z& m, const TorusPoint& p);

Mat2Z matrix_part(const SemidirectElement& g);

/// Aff(p, A): q |-> A q + p.
TorusPoint aff_apply(const SemidirectElement& g, const TorusPoint& q);

/// (p, A)(q, B) = (A q + p, AB); DomainError on mixed ambient monoids.
SemidirectElement sd_mul(const SemidirectElement& g, const SemidirectElement& h);

/// Inverse within the same ambient monoid, when it exists: for E(Z) iff the matrix is in
/// GL2(Z), for the cover iff the matrix is in SL2(Z), always for braids.
std::optional<SemidirectElement> sd_inverse(const SemidirectElement& g);
bool sd_invertible(const SemidirectElement& g);

/// Image in T^2 x| E(Z) under phi or Psi.
SemidirectElement project_to_isogeny(const SemidirectElement& g);

}  // namespace framed
