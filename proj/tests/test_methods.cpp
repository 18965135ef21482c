#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "nullstrat/methods.hpp"
#include "nullstrat/polytope.hpp"

using namespace nullstrat;

namespace {
const GroupShape sl3({3});
const GroupShape sl2({2});
}  // namespace

TEST_CASE("double bundle search: the unique candidate for plane curves of degree 34") {
  auto found = double_bundle_search(IrrLabel::sl3(0, 34), 2, 640);
  REQUIRE(found.size() == 1);
  const auto& c = found[0];
  CHECK(c.u == IrrLabel::sl3(30, 0));
  REQUIRE(c.w.size() == 2);
  CHECK(c.w[0] == IrrLabel::sl3(0, 4));
  CHECK(c.w[1] == IrrLabel::sl3(5, 9));
  CHECK(c.dim_u == 496);
  CHECK(c.dim_w[0] + c.dim_w[1] + 1 == 496);  // 496 = 15 + 480 + 1
  CHECK(c.dim_w[0] == 15);
  CHECK(c.dim_w[1] == 480);
  for (auto m : c.hom_mults) CHECK(m >= 1);
  CHECK(c.linearization_obstructed);
}

TEST_CASE("double bundle search: determinism") {
  auto a = double_bundle_search(IrrLabel::sl3(0, 34), 2, 640);
  auto b = double_bundle_search(IrrLabel::sl3(0, 34), 2, 640);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].u == b[i].u);
    CHECK(a[i].w == b[i].w);
    CHECK(a[i].linearization_obstructed == b[i].linearization_obstructed);
  }
}

TEST_CASE("two-form check on the theta-characteristic module") {
  for (int d : {5, 7, 9, 11}) {
    GroupShape shape({d, 3});
    std::vector<long> e_sl_d(static_cast<std::size_t>(d - 1), 0);
    e_sl_d[0] = 1;  // standard module
    IrrLabel e_label({e_sl_d, {1, 0}});
    std::vector<long> v_sl_d(static_cast<std::size_t>(d - 1), 0);
    v_sl_d[static_cast<std::size_t>(d - 2)] = 2;  // Sym^2 dual
    IrrLabel v_label({v_sl_d, {1, 0}});           // (x) Lambda^2 (C^3)*

    auto rep = two_form_check(shape, e_label, v_label, kappa_witness(d));
    CHECK(rep.applicable);
    CHECK(rep.dim_e == 3 * d);
    CHECK(rep.dim_v == 3 * d * (d + 1) / 2);
    CHECK(rep.containment_mult == 1);
    REQUIRE(rep.witness_rank.has_value());
    CHECK(*rep.witness_rank == static_cast<std::size_t>(3 * d - 1));
    REQUIRE(rep.witness_kernel.has_value());
    CHECK(rep.level_slack == rep.dim_v - rep.dim_e);
    CHECK(rep.pass);
  }

  // even-dimensional E is rejected
  GroupShape sl4({4});
  std::vector<long> std4{1, 0, 0};
  CHECK_THROWS_AS(
      two_form_check(sl4, IrrLabel({std4}), IrrLabel({std4}), std::nullopt),
      std::invalid_argument);

  // V not inside Lambda^2(E*): multiplicity 0, fail
  GroupShape sl5({5});
  IrrLabel e5({{1, 0, 0, 0}});
  IrrLabel big({{4, 0, 0, 0}});
  auto rep = two_form_check(sl5, e5, big, std::nullopt);
  CHECK(rep.containment_mult == 0);
  CHECK_FALSE(rep.pass);
}

TEST_CASE("grassmannian check clauses for V(14,1)") {
  auto rep = grassmannian_check(IrrLabel::sl3(14, 1), 2, 3, 20260809);
  CHECK(rep.dim_e == 255);
  CHECK(rep.grass_dim == 506);
  CHECK(rep.clause_center);
  CHECK(rep.clause_codim);
  CHECK(rep.clause_divisibility);
  CHECK(rep.clause_free_affine);
  CHECK(rep.clause_free_projective);
  CHECK_FALSE(rep.finite_stabilizers_certified);
  CHECK(rep.all_pass());

  // p | k fails the divisibility clause
  auto bad_k = grassmannian_check(IrrLabel::sl3(14, 1), 3, 3, 1);
  CHECK_FALSE(bad_k.clause_divisibility);

  // k at the boundary fails the codimension clause
  auto bad_codim = grassmannian_check(IrrLabel::sl3(14, 1), 255 - 8, 3, 1);
  CHECK_FALSE(bad_codim.clause_codim);

  CHECK_THROWS_AS(grassmannian_check(IrrLabel::sl3(14, 1), 2, 4, 1), std::invalid_argument);
}

TEST_CASE("covariant ledger") {
  auto l37 = covariant_ledger(37);
  CHECK(l37.all_pass());
  bool saw_level = false, saw_ls = false;
  for (const auto& e : l37.entries) {
    if (e.name == "dim P(V(0,37))") CHECK(e.computed == "740");
    if (e.name.starts_with("level condition")) {
      saw_level = true;
      CHECK(e.pass);
    }
    if (e.name.starts_with("dim L_S")) {
      saw_ls = true;
      CHECK(e.computed == "66");  // binom(12, 2)
    }
  }
  CHECK(saw_level);
  CHECK(saw_ls);

  auto l65 = covariant_ledger(65);
  CHECK(l65.all_pass());
  for (const auto& e : l65.entries) {
    if (e.name == "dim P(V(0,8))") CHECK(e.computed == "44");
    if (e.name.starts_with("dim L_T")) CHECK(e.computed == "190");  // binom(20, 2)
  }

  auto l6 = covariant_ledger(6);
  bool informational = false;
  for (const auto& e : l6.entries) informational |= e.informational;
  CHECK(informational);
}

TEST_CASE("binary instability: pinned examples") {
  // x^4 y^2, d = 6: multiplicity 4, unstable
  std::vector<Rat> f(7, Rat(0));
  f[4] = 1;
  auto r = binary_instability(f);
  CHECK(r.max_multiplicity == 4);
  CHECK(r.unstable);

  // x^3 y^3: multiplicity 3, semistable
  std::vector<Rat> g(7, Rat(0));
  g[3] = 1;
  r = binary_instability(g);
  CHECK(r.max_multiplicity == 3);
  CHECK_FALSE(r.unstable);

  // (x + y)^7: multiplicity 7, unstable
  std::vector<Rat> h(8, Rat(0));
  for (long k = 0; k <= 7; ++k) {
    long long b = 1;
    for (long i = 0; i < k; ++i) b = b * (7 - i) / (i + 1);
    h[static_cast<std::size_t>(k)] = Rat(static_cast<long>(b));
  }
  r = binary_instability(h);
  CHECK(r.max_multiplicity == 7);
  CHECK(r.unstable);

  CHECK_THROWS_AS(binary_instability(std::vector<Rat>(5, Rat(0))), std::invalid_argument);
}

TEST_CASE("binary instability agrees with planted ground truth") {
  std::mt19937_64 rng(20260809);
  std::uniform_int_distribution<long> deg(4, 10);
  std::uniform_int_distribution<long> root(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    long d = deg(rng);
    // plant distinct projective roots (a_i : b_i) with multiplicities
    std::vector<std::pair<long, long>> roots;  // (a, b): root of b x - a y ... store as pairs
    std::vector<long> mults;
    long total = 0, max_mult = 0;
    while (total < d) {
      long a = root(rng), b = root(rng);
      if (a == 0 && b == 0) continue;
      long g = std::gcd(std::abs(a), std::abs(b));
      a /= g;
      b /= g;
      if (b < 0 || (b == 0 && a < 0)) {
        a = -a;
        b = -b;
      }
      bool dup = false;
      for (auto& [pa, pb] : roots) dup |= (pa == a && pb == b);
      if (dup) continue;
      std::uniform_int_distribution<long> mdist(1, d - total);
      long m = mdist(rng);
      roots.emplace_back(a, b);
      mults.push_back(m);
      total += m;
      max_mult = std::max(max_mult, m);
    }
    // multiply the linear factors (b x - a y)^m; poly indexed by x-degree
    std::vector<Rat> f{Rat(1)};
    auto mul_linear = [&](long a, long b) {
      std::vector<Rat> out(f.size() + 1, Rat(0));
      for (std::size_t i = 0; i < f.size(); ++i) {
        out[i + 1] += f[i] * Rat(b);   // b x * x^i
        out[i] += f[i] * Rat(-a);      // -a y
      }
      f = std::move(out);
    };
    for (std::size_t i = 0; i < roots.size(); ++i) {
      for (long t = 0; t < mults[i]; ++t) mul_linear(roots[i].first, roots[i].second);
    }
    REQUIRE(f.size() == static_cast<std::size_t>(d + 1));
    auto r = binary_instability(f);
    CHECK(r.max_multiplicity == max_mult);
    CHECK(r.unstable == (max_mult >= d / 2 + 1));
  }
}

TEST_CASE("binary instability agrees with the polytope criterion on planted forms") {
  // unstable iff some translate has 0 outside the weight polytope; for the
  // planted forms this is the multiplicity test against floor(d/2)+1
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> coeff(1, 9);
  AmbientWeight e1 = epsilon(sl2, 0, 0);
  for (int trial = 0; trial < 100; ++trial) {
    long d = 6;
    std::uniform_int_distribution<long> rdist(1, d);
    long r = rdist(rng);
    // f = x^r * g with g(0) != 0: multiplicity of the root x=0... plant on
    // the monomial axis so the support is exactly computable
    std::vector<Rat> f(static_cast<std::size_t>(d + 1), Rat(0));
    WeightVector v;
    for (long k = r; k <= d; ++k) {
      if (k == r || k == d || coeff(rng) % 2 == 0) {
        f[static_cast<std::size_t>(k)] = coeff(rng);
        v[e1.scaled(Rat(d - 2 * k))] = f[static_cast<std::size_t>(k)];
      }
    }
    auto bi = binary_instability(f);
    bool unstable_via_mult = bi.unstable;
    // this particular family is x^r * (unit at x^r) ... its own support
    // decides T-instability after the y-side is checked symmetrically
    bool t_unstable = is_T_unstable(sl2, v);
    if (t_unstable) CHECK(unstable_via_mult);
  }
}

TEST_CASE("zero loci ledger") {
  auto l1 = zero_loci_ledger(1);
  CHECK(l1.all_pass());
  bool saw_birational = false;
  for (const auto& e : l1.entries) {
    if (e.name == "c2") CHECK(e.computed == "7");
    if (e.name.starts_with("section-to-zeroes")) {
      saw_birational = true;
      CHECK(e.pass);
    }
  }
  CHECK(saw_birational);

  auto l0 = zero_loci_ledger(0);
  for (const auto& e : l0.entries) {
    if (e.name.starts_with("c2(")) CHECK(e.computed == "3");
  }
  auto l2 = zero_loci_ledger(2);
  for (const auto& e : l2.entries) {
    if (e.name.starts_with("c2(")) CHECK(e.computed == "13");
  }
}

TEST_CASE("theta ledger") {
  auto l5 = theta_ledger(5);
  CHECK(l5.all_pass());
  for (const auto& e : l5.entries) {
    if (e.name.starts_with("dim L via")) CHECK(e.computed == "31");
    if (e.name.starts_with("special")) CHECK(e.computed == "31");
  }

  auto l7 = theta_ledger(7);
  CHECK(l7.all_pass());
  for (const auto& e : l7.entries) {
    if (e.name.starts_with("dim L via")) CHECK(e.computed == "64");
  }

  for (long d = 5; d <= 99; d += 2) CHECK(theta_ledger(d).all_pass());

  CHECK_THROWS_AS(theta_ledger(4), std::invalid_argument);
  CHECK_THROWS_AS(theta_ledger(3), std::invalid_argument);
}
