#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "nullstrat/repchar.hpp"
#include "nullstrat/tensorcalc.hpp"

using namespace nullstrat;

namespace {
const QField Q;

PolyTensor<QField> qmono(int e_idx, std::vector<std::uint8_t> x) {
  std::vector<std::uint8_t> e(3, 0);
  if (e_idx >= 0) e[static_cast<std::size_t>(e_idx)] = 1;
  return monomial(Q, 3, e, std::move(x));
}

PolyTensor<QField> random_tensor(int a, int b, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coeff(-5, 5);
  PolyTensor<QField> t(Q, 3, a, b);
  for (const auto& e : exponents_of_degree(3, a)) {
    for (const auto& x : exponents_of_degree(3, b)) {
      long c = coeff(rng);
      if (c != 0) t.add_term({e, x}, Rat(c));
    }
  }
  return t;
}

long long sl3_dim(long a, long b) { return weyl_dim(GroupShape({3}), IrrLabel::sl3(a, b)); }
}  // namespace

TEST_CASE("delta: single contractions") {
  CHECK(delta(qmono(0, {1, 0, 0})) == PolyTensor<QField>(Q, 3, 0, 0) + monomial(Q, 3, {0, 0, 0}, {0, 0, 0}));
  CHECK(delta(qmono(0, {0, 1, 0})).is_zero());
  CHECK_THROWS_AS(delta(PolyTensor<QField>(Q, 3, 0, 2)), std::invalid_argument);
}

TEST_CASE("realize_irreducible: kernel bases with the right dimensions") {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {0, 4}, {3, 1}, {1, 1}}) {
    auto basis = realize_irreducible(Q, 3, a, b);
    CHECK(static_cast<long long>(basis.size()) == sl3_dim(a, b));
    for (const auto& v : basis) {
      if (a >= 1 && b >= 1) CHECK(delta(v).is_zero());
    }
  }
  CHECK(realize_irreducible(Q, 3, 0, 3).size() == 10);  // all of Sym^3*

  PField P(101);
  auto basis_p = realize_irreducible(P, 3, 1, 2);
  CHECK(basis_p.size() == 15);
  for (const auto& v : basis_p) CHECK(delta(v).is_zero());
}

TEST_CASE("realize_irreducible: the heavy label (14,1)") {
  auto basis = realize_irreducible(Q, 3, 14, 1);
  CHECK(basis.size() == 255);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  for (int t = 0; t < 10; ++t) CHECK(delta(basis[pick(rng)]).is_zero());
}

TEST_CASE("omega: sign convention and bilinearity") {
  // omega(x2, x3) = e1 (0-based: x index 1 and 2 -> e index 0)
  auto r = qmono(-1, {0, 1, 0});
  auto s = qmono(-1, {0, 0, 1});
  auto w = omega(r, s);
  CHECK(w == qmono(0, {0, 0, 0}));

  // r constant in x is rejected by the degree precondition
  CHECK_THROWS_AS(omega(qmono(0, {0, 0, 0}), s), std::invalid_argument);

  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    auto f1 = random_tensor(1, 2, rng), f2 = random_tensor(1, 2, rng);
    auto g = random_tensor(0, 2, rng);
    CHECK(omega(f1 + f2, g) == omega(f1, g) + omega(f2, g));
    CHECK(omega(f1, g).a() == 2);
    CHECK(omega(f1, g).b() == 2);
  }
}

TEST_CASE("seven points: the special configuration") {
  auto data = seven_points_data(Q);
  CHECK(delta(data.f).is_zero());  // F lies in the V(1,2) model

  // H = psi(F, G2) = -32 e2
  PolyTensor<QField> expect_h(Q, 3, 1, 0);
  expect_h.add_term(Mono{{0, 1, 0}, {0, 0, 0}}, Rat(-32));
  CHECK(data.h == expect_h);

  // beta(F, (G1, G2)) = 0
  bool projected = false;
  CHECK(beta(data.f, data.g1, data.g2, &projected).is_zero());

  // beta(0, (g1, g2)) = 0
  PolyTensor<QField> zero_f(Q, 3, 1, 2);
  CHECK(beta(zero_f, data.g1, data.g2).is_zero());
}

TEST_CASE("seven points: kernel dimensions over Q and mod p") {
  auto dims = kernel_dims_seven_points(Q);
  CHECK(dims.k1 == 1);
  CHECK(dims.k2 == 7);
  CHECK(dims.k3 == 4);
  // rank-nullity
  CHECK(dims.rank1 == 9 - 1);
  CHECK(dims.rank2 == 15 - 7);

  for (std::uint64_t p : {10007ull, 131ull}) {
    auto dp = kernel_dims_seven_points(PField(p));
    CHECK(dp.k1 == 1);
    CHECK(dp.k2 == 7);
    CHECK(dp.k3 == 4);
  }
}

TEST_CASE("beta lands in the V(1,1) model without projection") {
  std::mt19937_64 rng(11);
  auto v12 = realize_irreducible(Q, 3, 1, 2);
  std::uniform_int_distribution<std::size_t> pick(0, v12.size() - 1);
  for (int t = 0; t < 10; ++t) {
    auto g1 = random_tensor(0, 2, rng);
    auto g2 = random_tensor(1, 0, rng);
    bool projected = true;
    auto out = beta(v12[pick(rng)], g1, g2, &projected);
    CHECK_FALSE(projected);
    if (!out.is_zero()) CHECK(delta(out).is_zero());
  }
}

TEST_CASE("iota: rank 14 witness and maximal-rank kappa") {
  SkewForm w = iota(omega_two_form_witness());
  CHECK(w.dim() == 15);
  CHECK(w.rank() == 14);

  for (int d : {5, 7, 9, 11}) {
    SkewForm k = iota(kappa_witness(d));
    CHECK(k.dim() == static_cast<std::size_t>(3 * d));
    CHECK(k.rank() == static_cast<std::size_t>(3 * d - 1));
    auto ker = k.kernel();
    REQUIRE(ker.size() == 1);
    // kernel spanned by m = sum e_a (x) f_a: proportional vectors
    auto m = kappa_kernel_vector(d);
    Rat scale;
    bool found = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) {
        scale = ker[0][i] / m[i];
        found = true;
        break;
      }
    }
    REQUIRE(found);
    CHECK(scale != 0);
    for (std::size_t i = 0; i < m.size(); ++i) CHECK(ker[0][i] == scale * m[i]);
  }

  Sym2Wedge2 zero;
  zero.d = 4;
  CHECK(iota(zero).rank() == 0);
}

TEST_CASE("modular consistency: skew ranks over Q match two primes > 1000") {
  for (int d : {5, 7}) {
    SkewForm k = iota(kappa_witness(d));
    std::size_t rank_q = k.rank();
    for (std::uint64_t p : {1009ull, 10007ull}) {
      PField P(p);
      Mat<PField> m(P, k.dim(), k.dim());
      for (std::size_t i = 0; i < k.dim(); ++i) {
        for (std::size_t j = 0; j < k.dim(); ++j) m.at(i, j) = P.from_rat(k.at(i, j));
      }
      CHECK(rank(m) == rank_q);
    }
  }
}

TEST_CASE("skew form ranks are even") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> coeff(-3, 3);
  std::uniform_int_distribution<int> dim(2, 8);
  for (int t = 0; t < 30; ++t) {
    std::size_t n = static_cast<std::size_t>(dim(rng));
    SkewForm w(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) w.add(i, j, Rat(coeff(rng)));
    }
    CHECK(w.rank() % 2 == 0);
  }
}

TEST_CASE("lie action basics and bracket identity") {
  // E_01 e_1 = e_0, E_01 x_0 = -x_1
  CHECK(lie_action(0, 1, qmono(1, {0, 0, 0})) == qmono(0, {0, 0, 0}));
  CHECK(lie_action(0, 1, qmono(-1, {1, 0, 0})) == qmono(-1, {0, 1, 0}).scaled(Rat(-1)));

  std::mt19937_64 rng(17);
  for (int t = 0; t < 20; ++t) {
    auto v = random_tensor(2, 1, rng);
    auto lhs = lie_action(0, 1, lie_action(1, 0, v)) - lie_action(1, 0, lie_action(0, 1, v));
    CHECK(lhs == lie_cartan(0, v));
  }
}

TEST_CASE("equivariance of delta, omega and mu") {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> idx(0, 2);
  for (int t = 0; t < 25; ++t) {
    int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    auto f = random_tensor(2, 2, rng);
    CHECK(delta(lie_action(i, j, f)) == lie_action(i, j, delta(f)));

    auto r = random_tensor(1, 2, rng);
    auto s = random_tensor(0, 2, rng);
    CHECK(omega(lie_action(i, j, r), s) + omega(r, lie_action(i, j, s)) ==
          lie_action(i, j, omega(r, s)));

    auto g = random_tensor(2, 1, rng);
    auto h = random_tensor(0, 3, rng);
    CHECK(mu_pairing(lie_action(i, j, g), h) + mu_pairing(g, lie_action(i, j, h)) ==
          lie_action(i, j, mu_pairing(g, h)));
  }
}

TEST_CASE("mu pairing small sanity") {
  // mu(g, 0) = 0
  auto g = qmono(0, {0, 2, 0});
  PolyTensor<QField> zero_f(Q, 3, 0, 3);
  CHECK(mu_pairing(g, zero_f).is_zero());

  // mu with g = e_0 x^v, f = x^m: Delta(g f) has the closed-form factor
  auto f = qmono(-1, {1, 0, 0});
  auto out = mu_pairing(qmono(0, {1, 0, 0}), f);  // Delta(e0 x0^2) = 2 x0
  PolyTensor<QField> expect(Q, 3, 0, 1);
  expect.add_term(Mono{{0, 0, 0}, {1, 0, 0}}, Rat(2));
  CHECK(out == expect);
}

TEST_CASE("stabilizer dimensions") {
  // annihilator of e_0 inside sl_3: first column zero, 8 - 3 = 5
  CHECK(stabilizer_dim(qmono(0, {0, 0, 0}), false) == 5);
  // line stabilizer of [e_0]: x_00 free again
  CHECK(stabilizer_dim(qmono(0, {0, 0, 0}), true) == 6);

  // generic element of the adjoint model: centralizer is a maximal torus
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> coeff(1, 9);
  auto v11 = realize_irreducible(Q, 3, 1, 1);
  REQUIRE(v11.size() == 8);
  PolyTensor<QField> generic(Q, 3, 1, 1);
  for (const auto& b : v11) generic = generic + b.scaled(Rat(coeff(rng)));
  CHECK(stabilizer_dim(generic, false) == 2);

  // generic point of the V(1,2) model: almost free on P(V)
  auto v12 = realize_irreducible(Q, 3, 1, 2);
  PolyTensor<QField> gen12(Q, 3, 1, 2);
  for (const auto& b : v12) gen12 = gen12 + b.scaled(Rat(coeff(rng)));
  CHECK(stabilizer_dim(gen12, false) == 0);
  CHECK(stabilizer_dim(gen12, true) == 0);
}

TEST_CASE("chern ledger for the twisted tangent bundle") {
  CHECK(chern_c2_tangent_twist(0) == 3);
  CHECK(chern_c2_tangent_twist(1) == 7);
  CHECK(chern_c2_tangent_twist(2) == 13);
}
