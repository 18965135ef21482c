#ifndef NULLSTRAT_LINALG_HPP
#define NULLSTRAT_LINALG_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nullstrat/scalar.hpp"

namespace nullstrat {

// Dense matrix over an exact field. Sizes here are desk scale; plain
// Gaussian elimination with first-nonzero pivoting is deterministic and
// fast enough.
template <class F>
struct Mat {
  using E = typename F::Elem;
  F fld;
  std::size_t rows = 0, cols = 0;
  std::vector<E> a;

  Mat(F f, std::size_t r, std::size_t c) : fld(f), rows(r), cols(c), a(r * c, f.zero()) {}

  E& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const E& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// In-place reduced row echelon form; returns the pivot columns in order.
template <class F>
std::vector<std::size_t> rref(Mat<F>& m) {
  const F& K = m.fld;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t sel = row;
    while (sel < m.rows && K.is_zero(m.at(sel, col))) ++sel;
    if (sel == m.rows) continue;
    if (sel != row) {
      for (std::size_t j = col; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
    }
    auto inv = K.div(K.one(), m.at(row, col));
    for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) = K.mul(m.at(row, j), inv);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || K.is_zero(m.at(i, col))) continue;
      auto factor = m.at(i, col);
      for (std::size_t j = col; j < m.cols; ++j) {
        m.at(i, j) = K.sub(m.at(i, j), K.mul(factor, m.at(row, j)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
std::size_t rank(Mat<F> m) {
  return rref(m).size();
}

// Basis of the right kernel, one vector per free column, in column order.
template <class F>
std::vector<std::vector<typename F::Elem>> kernel_basis(Mat<F> m) {
  const F& K = m.fld;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<typename F::Elem>> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::Elem> v(m.cols, K.zero());
    v[free] = K.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = K.neg(m.at(i, free));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// One solution of m x = rhs, or nullopt when inconsistent.
template <class F>
std::optional<std::vector<typename F::Elem>> solve(Mat<F> m, std::vector<typename F::Elem> rhs) {
  if (rhs.size() != m.rows) throw std::invalid_argument("solve: rhs size mismatch");
  const F& K = m.fld;
  Mat<F> aug(m.fld, m.rows, m.cols + 1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = rhs[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
  std::vector<typename F::Elem> x(m.cols, K.zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols);
  return x;
}

template <class F>
std::vector<typename F::Elem> mat_vec(const Mat<F>& m, const std::vector<typename F::Elem>& v) {
  if (v.size() != m.cols) throw std::invalid_argument("mat_vec: size mismatch");
  const F& K = m.fld;
  std::vector<typename F::Elem> out(m.rows, K.zero());
  for (std::size_t i = 0; i < m.rows; ++i) {
    auto acc = K.zero();
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (!K.is_zero(m.at(i, j))) acc = K.add(acc, K.mul(m.at(i, j), v[j]));
    }
    out[i] = acc;
  }
  return out;
}

// Column Hermite-style reduction over Z; returns a basis of the integer
// kernel of the r x m matrix given by rows.
inline std::vector<std::vector<Int>> integer_kernel(const std::vector<std::vector<Int>>& rows_in) {
  std::size_t r = rows_in.size();
  std::size_t m = r == 0 ? 0 : rows_in[0].size();
  for (const auto& row : rows_in) {
    if (row.size() != m) throw std::invalid_argument("integer_kernel: ragged input");
  }
  // work matrix stacked over identity; column operations only
  std::vector<std::vector<Int>> w(r + m, std::vector<Int>(m, 0));
  for (std::size_t i = 0; i < r; ++i) w[i] = rows_in[i];
  for (std::size_t j = 0; j < m; ++j) w[r + j][j] = 1;

  std::size_t lead = 0;
  for (std::size_t i = 0; i < r && lead < m; ++i) {
    // gcd-eliminate row i across columns lead..m-1
    while (true) {
      std::size_t nz = m;
      for (std::size_t j = lead; j < m; ++j) {
        if (w[i][j] != 0 && (nz == m || cmp(abs(w[i][j]), abs(w[i][nz])) < 0)) nz = j;
      }
      if (nz == m) break;
      if (nz != lead) {
        for (std::size_t k = 0; k < r + m; ++k) std::swap(w[k][nz], w[k][lead]);
      }
      bool done = true;
      for (std::size_t j = lead + 1; j < m; ++j) {
        if (w[i][j] == 0) continue;
        Int q = w[i][j] / w[i][lead];
        // round toward making the remainder small; exact division not required
        for (std::size_t k = 0; k < r + m; ++k) w[k][j] -= q * w[k][lead];
        if (w[i][j] != 0) done = false;
      }
      if (done) {
        ++lead;
        break;
      }
    }
  }
  std::vector<std::vector<Int>> basis;
  for (std::size_t j = lead; j < m; ++j) {
    bool zero_top = true;
    for (std::size_t i = 0; i < r; ++i) {
      if (w[i][j] != 0) {
        zero_top = false;
        break;
      }
    }
    if (!zero_top) throw std::logic_error("integer_kernel: reduction incomplete");
    std::vector<Int> v(m);
    for (std::size_t k = 0; k < m; ++k) v[k] = w[r + k][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace nullstrat

#endif
