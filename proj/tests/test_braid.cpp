#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

using namespace framed;
using testing::perturb;
using testing::Rng;

namespace {

BraidWord w(std::initializer_list<int> letters) { return BraidWord(std::vector<int>(letters)); }

}  // namespace

TEST_CASE("braid_mul concatenates and cancels adjacent inverses") {
  CHECK(braid_mul(w({1}), w({-1})).empty());
  CHECK(braid_mul(w({1, 2}), w({1})) == w({1, 2, 1}));
  CHECK(braid_mul(w({1, 2, 1}), w({-1, -2, -1})).empty());
  CHECK(braid_mul(w({1, 2}), w({-2, 2})) == w({1, 2}));
}

TEST_CASE("letters are validated") {
  CHECK_THROWS_AS(BraidWord({3}), DomainError);
  CHECK_THROWS_AS(BraidWord({0}), DomainError);
}

TEST_CASE("normal form of the half twist") {
  const auto nf = normal_form(w({1, 2, 1}));
  CHECK(nf.delta_power == 1);
  CHECK(nf.factors.empty());
  CHECK(normal_form(w({2, 1, 2})) == nf);
  CHECK(normal_form(BraidWord()) == GarsideNormalForm{});
  CHECK(normal_form(w({-1, -2, -1})).delta_power == -1);
  CHECK(normal_form(w({-1, -2, -1})).factors.empty());
}

TEST_CASE("normal form small cases") {
  const auto a = normal_form(w({1}));
  CHECK(a.delta_power == 0);
  REQUIRE(a.factors.size() == 1);
  CHECK(a.factors[0] == Simple::A);

  const auto ab = normal_form(w({1, 2}));
  REQUIRE(ab.factors.size() == 1);
  CHECK(ab.factors[0] == Simple::AB);

  // a^-1 = Delta^-1 * (a b)
  const auto ai = normal_form(w({-1}));
  CHECK(ai.delta_power == -1);
  REQUIRE(ai.factors.size() == 1);
  CHECK(ai.factors[0] == Simple::AB);

  // a a b: a.ab is left-weighted
  const auto aab = normal_form(w({1, 1, 2}));
  REQUIRE(aab.factors.size() == 2);
  CHECK(aab.factors[0] == Simple::A);
  CHECK(aab.factors[1] == Simple::AB);
}

TEST_CASE("normal form is a fixpoint of to_word") {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const auto nf = normal_form(rng.word(30));
    CHECK(normal_form(nf.to_word()) == nf);
  }
}

TEST_CASE("relation insertion preserves the normal form") {
  Rng rng(12);
  for (int i = 0; i < 2000; ++i) {
    const BraidWord base = rng.word(20);
    BraidWord other = base;
    const auto steps = rng.uniform(1, 4);
    for (int s = 0; s < steps; ++s) other = perturb(other, rng);
    CHECK(normal_form(base) == normal_form(other));
  }
}

TEST_CASE("word problem agrees with the faithful cover lift") {
  Rng rng(13);
  int distinct = 0;
  for (int i = 0; i < 2000; ++i) {
    const BraidWord x = rng.word(8), y = rng.word(8);
    const bool same_lift = lift_word(x) == lift_word(y);
    CHECK(braid_equal(x, y) == same_lift);
    distinct += !same_lift;
  }
  CHECK(distinct > 1000);
}

TEST_CASE("Delta squared is central") {
  Rng rng(14);
  const BraidWord d2 = delta_word(2);
  for (int i = 0; i < 500; ++i) {
    const BraidWord x = rng.word(20);
    CHECK(normal_form(braid_mul(d2, x)) == normal_form(braid_mul(x, d2)));
  }
}

TEST_CASE("phi on generators and the half twist") {
  CHECK(phi(w({1})) == Mat2Z{1, 1, 0, 1});
  CHECK(phi(w({2})) == Mat2Z{1, 0, -1, 1});
  CHECK(phi(w({1, 2, 1})) == Mat2Z{0, 1, -1, 0});
  CHECK(phi(w({2, 1, 2})) == Mat2Z{0, 1, -1, 0});
  CHECK(phi(delta_word(4)) == Mat2Z::identity());
  CHECK(phi(parse_braid_word("a b a b a b a b a b a b")) == Mat2Z::identity());
}

TEST_CASE("phi is a homomorphism into SL2(Z)") {
  Rng rng(15);
  for (int i = 0; i < 500; ++i) {
    const BraidWord x = rng.word(15), y = rng.word(15);
    CHECK(phi(braid_mul(x, y)) == phi(x) * phi(y));
    CHECK(phi(x).det() == 1);
  }
}

TEST_CASE("kernel_power recognizes powers of Delta^4") {
  for (int k = -5; k <= 5; ++k) {
    CHECK(kernel_power(delta_word(4 * k)) == std::optional<std::int64_t>(k));
  }
  std::vector<int> l;
  for (int i = 0; i < 6; ++i) l.insert(l.end(), {1, 2});
  CHECK(kernel_power(BraidWord(l)) == std::optional<std::int64_t>(1));
  CHECK(kernel_power(BraidWord()) == std::optional<std::int64_t>(0));
  CHECK_FALSE(kernel_power(w({1})).has_value());
  CHECK_FALSE(kernel_power(delta_word(2)).has_value());
}

TEST_CASE("lift_matrix round trip") {
  CHECK(phi(lift_matrix({1, 1, 0, 1})) == Mat2Z{1, 1, 0, 1});
  CHECK(phi(lift_matrix({0, 1, -1, 0})) == Mat2Z{0, 1, -1, 0});
  CHECK(phi(lift_matrix({2, 1, 1, 1})) == Mat2Z{2, 1, 1, 1});
  CHECK(phi(lift_matrix(Mat2Z::identity())) == Mat2Z::identity());
  CHECK(phi(lift_matrix({-1, 0, 0, -1})) == Mat2Z{-1, 0, 0, -1});
  CHECK(lift_matrix({2, 1, 1, 1}) == lift_matrix({2, 1, 1, 1}));

  Rng rng(16);
  int tested = 0;
  while (tested < 1000) {
    const Mat2Z m = rng.unimodular(static_cast<int>(rng.uniform(1, 30)));
    if (m.det() != 1) continue;
    if (abs(m.a) > 50 || abs(m.b) > 50 || abs(m.c) > 50 || abs(m.d) > 50) continue;
    CHECK(phi(lift_matrix(m)) == m);
    ++tested;
  }
}

TEST_CASE("lift_matrix rejects det != 1") {
  CHECK_THROWS_AS(lift_matrix({0, 1, 1, 0}), DomainError);
  CHECK_THROWS_AS(lift_matrix({2, 0, 0, 1}), DomainError);
}

TEST_CASE("braid word syntax") {
  CHECK(parse_braid_word("1 2 1") == w({1, 2, 1}));
  CHECK(parse_braid_word("a b a") == w({1, 2, 1}));
  CHECK(parse_braid_word("aBA") == w({1, -2, -1}));
  CHECK(parse_braid_word("-1 -2") == w({-1, -2}));
  CHECK(parse_braid_word("") == BraidWord());
  CHECK(to_string(w({1, -2})) == "a B");
  CHECK_THROWS_AS(parse_braid_word("a c"), DomainError);
  CHECK_THROWS_AS(parse_braid_word("3"), DomainError);
}
