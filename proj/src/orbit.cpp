#include "framed/orbit.hpp"

namespace framed {

namespace {

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (Int k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

}  // namespace

bool hom_exists(const OrbitObject& c, const OrbitObject& c2) { return c.subgroup.subset_of(c2.subgroup); }

OrbitMorphism make_morphism(const OrbitObject& source, const OrbitObject& target, const Vec2Q& translation) {
  if (!hom_exists(source, target)) {
    throw DomainError("no equivariant map: source subgroup is not contained in target subgroup");
  }
  return {source, target, reduce_mod(translation, target.subgroup.superlattice)};
}

OrbitMorphism identity_morphism(const OrbitObject& c) { return make_morphism(c, c, {0, 0}); }

OrbitMorphism compose(const OrbitMorphism& f, const OrbitMorphism& g) {
  if (!(f.target == g.source)) throw DomainError("compose: target of the first map differs from source of the second");
  return make_morphism(f.source, g.target, f.translation + g.translation);
}

OrbitObject preimage_act(const Mat2Z& m, const OrbitObject& c) {
  if (m.det() <= 0) throw DomainError("isogeny action requires det > 0 (got " + m.det().str() + ")");
  const Mat2Q inv = inverse(m);
  const Mat2Q& h = c.subgroup.superlattice;
  // m^-1 applied to the basis vectors (a, b) and (0, d) of quot^-1(C).
  const Vec2Q u1 = inv * Vec2Q{h.a, h.b};
  const Vec2Q u2 = inv * Vec2Q{h.c, h.d};
  return {subgroup_from_superlattice(u1, u2)};
}

OrbitObject isogeny_act(const Mat2Z& m, const OrbitObject& c) { return preimage_act(m.transpose(), c); }

std::vector<std::size_t> FactorizationPoset::covers(std::size_t i) const {
  std::vector<std::size_t> out;
  const Int di = objects[i].det();
  for (std::size_t j = 0; j < objects.size(); ++j) {
    if (j == i || !leq[i][j]) continue;
    if (is_prime(objects[j].det() / di)) out.push_back(j);
  }
  return out;
}

FactorizationPoset factorization_poset(const Int& max_index) {
  if (max_index < 1) throw DomainError("max_index must be >= 1");
  FactorizationPoset poset;
  for (Int n = 1; n <= max_index; ++n) {
    for (const auto& lat : enumerate_sublattices(n)) {
      poset.objects.push_back(*to_integer(lat.basis));
    }
  }
  for (const auto& a : poset.objects) poset.kernels.push_back(kernel_subgroup(a));
  const std::size_t n = poset.objects.size();
  poset.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    const Mat2Q inv = inverse(poset.objects[i]);
    for (std::size_t j = 0; j < n; ++j) {
      poset.leq[i][j] = to_integer(to_rational(poset.objects[j]) * inv).has_value();
    }
  }
  return poset;
}

}  // namespace framed
