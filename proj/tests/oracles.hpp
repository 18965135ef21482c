#ifndef NULLSTRAT_TESTS_ORACLES_HPP
#define NULLSTRAT_TESTS_ORACLES_HPP

// Independent brute-force oracles used by the property and acceptance
// suites. These deliberately avoid the production code paths they check.

#include <optional>
#include <vector>

#include "nullstrat/linalg.hpp"
#include "nullstrat/polytope.hpp"

namespace nullstrat::oracles {

// Min-norm point of conv(S) by exhaustive affine-hull projection over all
// subsets: for every subset B, the closest point of aff(B) to the origin
// is kept when it has non-negative barycentric coordinates on B; the best
// point overall is the answer.
inline AmbientWeight min_norm_bruteforce(const SupportSet& s) {
  const auto& P = s.weights;
  std::size_t n = P.size();
  if (n == 0 || n > 20) throw std::invalid_argument("min_norm_bruteforce: size out of range");
  std::optional<AmbientWeight> best;
  for (std::size_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<AmbientWeight> pts;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) pts.push_back(P[i]);
    }
    // affinely dependent subsets are covered by their spanning subsets
    std::vector<std::vector<Rat>> dirs;
    for (std::size_t i = 1; i < pts.size(); ++i) dirs.push_back((pts[i] - pts[0]).coords());
    if (!dirs.empty()) {
      QField K;
      Mat<QField> m(K, dirs.size(), dirs[0].size());
      for (std::size_t a = 0; a < dirs.size(); ++a) {
        for (std::size_t b = 0; b < dirs[0].size(); ++b) m.at(a, b) = dirs[a][b];
      }
      if (rank(m) != dirs.size()) continue;
    }
    AffineMinResult aff = affine_min_norm(s.shape, pts);
    bool inside = true;
    for (const auto& c : aff.coeffs) {
      if (cmp(c, Rat(0)) < 0) {
        inside = false;
        break;
      }
    }
    if (!inside) continue;
    if (!best || cmp(norm2(aff.point), norm2(*best)) < 0) best = aff.point;
  }
  return *best;
}

// Exact rank of the Jacobian of (l, q) -> l^r q at a given point, for
// binary forms: l = l0 x + l1 y, q of degree d - r. Column order: dl0,
// dl1, dq_0..dq_{d-r}; rows are coefficients of x^k y^{d-k}.
inline std::size_t stratum_jacobian_rank(long d, long r, const std::vector<Rat>& l,
                                         const std::vector<Rat>& q) {
  long e = d - r;
  // binary poly helpers: index = degree in x
  auto mul = [](const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
  };
  auto pow = [&](const std::vector<Rat>& a, long k) {
    std::vector<Rat> out{Rat(1)};
    for (long i = 0; i < k; ++i) out = mul(out, a);
    return out;
  };
  std::vector<Rat> lv{l[1], l[0]};  // coefficient of x^1 is l0 -> store by x-degree: [y-coeff, x-coeff]
  std::vector<Rat> qv(q.rbegin(), q.rend());

  QField K;
  Mat<QField> jac(K, static_cast<std::size_t>(d + 1), static_cast<std::size_t>(2 + e + 1));
  // d/dl0: r l^(r-1) q * x ; d/dl1: r l^(r-1) q * y
  auto lr1q = mul(pow(lv, r - 1), qv);
  for (std::size_t i = 0; i < lr1q.size(); ++i) {
    jac.at(i + 1, 0) = Rat(r) * lr1q[i];  // multiply by x: x-degree + 1
    jac.at(i, 1) = Rat(r) * lr1q[i];      // multiply by y
  }
  // d/dq_j: l^r * x^j y^(e-j); q stored with q[j] the coefficient of x^j... use qv indexing
  auto lr = pow(lv, r);
  for (long j = 0; j <= e; ++j) {
    for (std::size_t i = 0; i < lr.size(); ++i) {
      jac.at(i + static_cast<std::size_t>(j), 2 + static_cast<std::size_t>(j)) += lr[i];
    }
  }
  return rank(jac);
}

}  // namespace nullstrat::oracles

#endif
