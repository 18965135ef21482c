#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "nullstrat/lattice.hpp"

using namespace nullstrat;

namespace {
AmbientWeight w(const GroupShape& s, std::vector<long> coords) {
  std::vector<Rat> c;
  for (long x : coords) c.emplace_back(x);
  return AmbientWeight(s, std::move(c));
}
}  // namespace

TEST_CASE("epsilon embeds basis characters in sum-zero coordinates") {
  GroupShape sl3({3});
  CHECK(epsilon(sl3, 0, 0) == w(sl3, {2, -1, -1}));
  CHECK(epsilon(sl3, 0, 1) == w(sl3, {-1, 2, -1}));

  GroupShape sl5({5});
  CHECK(epsilon(sl5, 0, 4) == w(sl5, {-1, -1, -1, -1, 4}));

  AmbientWeight sum = AmbientWeight::zero(sl5);
  for (std::size_t i = 0; i < 5; ++i) sum = sum + epsilon(sl5, 0, i);
  CHECK(sum.is_zero());

  CHECK_THROWS_AS(epsilon(sl3, 0, 3), std::out_of_range);
  CHECK_THROWS_AS(epsilon(sl3, 1, 0), std::out_of_range);
}

TEST_CASE("pair is the blockwise dot product") {
  GroupShape sl3({3});
  CHECK(pair(epsilon(sl3, 0, 0), epsilon(sl3, 0, 0)) == Rat(6));
  CHECK(pair(epsilon(sl3, 0, 0), epsilon(sl3, 0, 1)) == Rat(-3));

  GroupShape prod({5, 3});
  AmbientWeight a = epsilon(prod, 0, 1) + epsilon(prod, 1, 2);
  AmbientWeight b = epsilon(prod, 0, 1) - epsilon(prod, 1, 0);
  CHECK(pair(a, b) == pair(epsilon(prod, 0, 1), epsilon(prod, 0, 1)) -
                          pair(epsilon(prod, 1, 2), epsilon(prod, 1, 0)));

  GroupShape sl2({2});
  CHECK_THROWS_AS(pair(epsilon(sl3, 0, 0), epsilon(sl2, 0, 0)), std::invalid_argument);
}

TEST_CASE("pair is W-invariant") {
  GroupShape shape({4, 2});
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coeff(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    AmbientWeight a = AmbientWeight::zero(shape), b = AmbientWeight::zero(shape);
    for (std::size_t k = 0; k < shape.num_factors(); ++k) {
      for (int i = 0; i < shape.factors[k]; ++i) {
        a = a + epsilon(shape, k, static_cast<std::size_t>(i)).scaled(Rat(coeff(rng)));
        b = b + epsilon(shape, k, static_cast<std::size_t>(i)).scaled(Rat(coeff(rng)));
      }
    }
    WeylElement ww = WeylElement::random(shape, rng);
    CHECK(pair(ww.apply(a), ww.apply(b)) == pair(a, b));
  }
}

TEST_CASE("roots") {
  CHECK(roots(GroupShape({3})).size() == 6);
  CHECK(roots(GroupShape({5, 3})).size() == 26);

  auto rs = roots(GroupShape({5, 3}));
  for (const auto& r : rs) {
    // closed under negation
    CHECK(std::find(rs.begin(), rs.end(), -r) != rs.end());
    // sum-zero blocks: orthogonal to the all-ones direction
    Rat s(0);
    for (std::size_t i = 0; i < r.size(); ++i) s += r[i];
    CHECK(s == 0);
  }

  // <alpha, alpha> constant per factor
  GroupShape sl4({4});
  auto r4 = roots(sl4);
  for (const auto& r : r4) CHECK(norm2(r) == norm2(r4[0]));
}

TEST_CASE("weyl_canonical sorts blocks non-increasing and is orbit-constant") {
  GroupShape sl3({3});
  CHECK(weyl_canonical(w(sl3, {-1, 2, -1})) == w(sl3, {2, -1, -1}));
  CHECK(weyl_canonical(w(sl3, {2, -1, -1})) == w(sl3, {2, -1, -1}));

  GroupShape shape({3, 2});
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> coeff(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    AmbientWeight a = AmbientWeight::zero(shape);
    for (std::size_t k = 0; k < shape.num_factors(); ++k) {
      for (int i = 0; i < shape.factors[k]; ++i) {
        a = a + epsilon(shape, k, static_cast<std::size_t>(i)).scaled(Rat(coeff(rng)));
      }
    }
    AmbientWeight canon = weyl_canonical(a);
    CHECK(weyl_canonical(canon) == canon);  // idempotent
    WeylElement ww = WeylElement::random(shape, rng);
    CHECK(weyl_canonical(ww.apply(a)) == canon);
  }
}

TEST_CASE("weyl element signs multiply over cycles and factors") {
  GroupShape shape({3, 2});
  WeylElement id = WeylElement::identity(shape);
  CHECK(id.sign() == 1);
  WeylElement swap01 = id;
  swap01.perms[0] = {1, 0, 2};
  CHECK(swap01.sign() == -1);
  swap01.perms[1] = {1, 0};
  CHECK(swap01.sign() == 1);
  CHECK(WeylElement::all(shape).size() == 12);
}

TEST_CASE("integrality predicate and n_min") {
  GroupShape sl5({5});
  CHECK(is_integral(epsilon(sl5, 0, 0)));

  // the half-space label 2/(n-1) (1,1,1,1,-(n-1)) of the two-form setup
  std::vector<Rat> c(5, rat_of(2, 4));
  c[4] = Rat(-2);
  AmbientWeight cw(sl5, c);
  CHECK_FALSE(is_integral(cw));
  CHECK(n_min_integral(cw) == 2);  // 2c = eps_1 + ... + eps_4

  GroupShape sl3({3});
  CHECK_FALSE(is_integral(w(sl3, {1, 0, -1})));  // coords not congruent mod 3
  CHECK(n_min_integral(w(sl3, {1, 0, -1})) == 3);
}

TEST_CASE("group shape parsing and invariants") {
  CHECK(parse_group("SL3").factors == std::vector<int>{3});
  CHECK(parse_group("SL5 x SL3").factors == std::vector<int>{5, 3});
  CHECK(parse_group("sl5xsl3").factors == std::vector<int>{5, 3});
  CHECK_THROWS_AS(parse_group("GL3"), std::invalid_argument);
  CHECK_THROWS_AS(GroupShape({1}), std::invalid_argument);
  CHECK_THROWS_AS(GroupShape(std::vector<int>{}), std::invalid_argument);
  CHECK(GroupShape({5, 3}).rank() == 6);
  CHECK(GroupShape({5, 3}).weyl_order() == 720);
}

TEST_CASE("weight text serialization") {
  GroupShape sl3({3});
  CHECK(w(sl3, {2, -1, -1}).str() == "[(2,-1,-1)]");
  GroupShape prod({2, 2});
  std::vector<Rat> c{rat_of(1, 2), rat_of(-1, 2), Rat(0), Rat(0)};
  CHECK(AmbientWeight(prod, c).str() == "[(1/2,-1/2),(0,0)]");
}

TEST_CASE("block sums are enforced") {
  GroupShape sl3({3});
  CHECK_THROWS_AS(w(sl3, {1, 0, 0}), std::invalid_argument);
}
