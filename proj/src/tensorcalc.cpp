#include "nullstrat/tensorcalc.hpp"

#include <algorithm>
#include <functional>

namespace nullstrat {

std::vector<std::vector<std::uint8_t>> exponents_of_degree(int n, int d) {
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<std::uint8_t> cur(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int pos, int rem) {
    if (pos == n - 1) {
      cur[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(rem);
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      cur[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(v);
      rec(pos + 1, rem - v);
    }
  };
  rec(0, d);
  std::sort(out.begin(), out.end());
  return out;
}

void SkewForm::add(std::size_t i, std::size_t j, const Rat& c) {
  if (i >= dim_ || j >= dim_) throw std::out_of_range("SkewForm: index");
  if (i == j) {
    if (c != 0) throw std::invalid_argument("SkewForm: non-zero diagonal");
    return;
  }
  Rat v = i < j ? c : Rat(-c);
  auto key = i < j ? std::make_pair(i, j) : std::make_pair(j, i);
  auto [it, inserted] = upper_.emplace(key, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) upper_.erase(it);
  }
}

Rat SkewForm::at(std::size_t i, std::size_t j) const {
  if (i == j) return Rat(0);
  auto key = i < j ? std::make_pair(i, j) : std::make_pair(j, i);
  auto it = upper_.find(key);
  if (it == upper_.end()) return Rat(0);
  return i < j ? it->second : Rat(-it->second);
}

namespace {
Mat<QField> skew_matrix(const SkewForm& w) {
  QField K;
  Mat<QField> m(K, w.dim(), w.dim());
  for (std::size_t i = 0; i < w.dim(); ++i) {
    for (std::size_t j = 0; j < w.dim(); ++j) m.at(i, j) = w.at(i, j);
  }
  return m;
}
}  // namespace

std::size_t SkewForm::rank() const { return nullstrat::rank(skew_matrix(*this)); }

std::vector<std::vector<Rat>> SkewForm::kernel() const {
  return kernel_basis(skew_matrix(*this));
}

void Sym2Wedge2::add(int i, int j, int k, int l, const Rat& c) {
  if (i > j) std::swap(i, j);
  if (k > l) std::swap(k, l);
  if (i < 0 || j >= d || k < 0 || l >= 3 || k == l) throw std::invalid_argument("Sym2Wedge2: index");
  auto [it, inserted] = terms.emplace(std::array<int, 4>{i, j, k, l}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

SkewForm iota(const Sym2Wedge2& w) {
  SkewForm out(static_cast<std::size_t>(3 * w.d));
  auto flat = [&](int i, int k) { return static_cast<std::size_t>(3 * i + k); };
  for (const auto& [t, c] : w.terms) {
    auto [i, j, k, l] = t;
    out.add(flat(i, k), flat(j, l), c);
    out.add(flat(j, k), flat(i, l), c);
  }
  return out;
}

Sym2Wedge2 omega_two_form_witness() {
  // (x5^2 - 2 x1 x2)(y2^y3) + (x1^2 + x3^2 + x4^2)(y1^y3) + (2 x4 x5 - 2 x2 x3)(y1^y2)
  Sym2Wedge2 w;
  w.d = 5;
  w.add(4, 4, 1, 2, Rat(1));
  w.add(0, 1, 1, 2, Rat(-2));
  w.add(0, 0, 0, 2, Rat(1));
  w.add(2, 2, 0, 2, Rat(1));
  w.add(3, 3, 0, 2, Rat(1));
  w.add(3, 4, 0, 1, Rat(2));
  w.add(1, 2, 0, 1, Rat(-2));
  return w;
}

Sym2Wedge2 kappa_witness(int d) {
  if (d < 5 || d % 2 == 0) throw std::invalid_argument("kappa_witness: need odd d >= 5");
  Sym2Wedge2 w = omega_two_form_witness();
  w.d = d;
  // pi_j = x_j^2 (y1^y2) + x_j x_{j+1} (y1^y3) + x_{j+1}^2 (y2^y3),
  // j running over the even numbers between 6 and d-1 (1-based)
  for (int j = 6; j <= d - 1; j += 2) {
    int a = j - 1, b = j;  // 0-based
    w.add(a, a, 0, 1, Rat(1));
    w.add(a, b, 0, 2, Rat(1));
    w.add(b, b, 1, 2, Rat(1));
  }
  return w;
}

std::vector<Rat> kappa_kernel_vector(int d) {
  std::vector<Rat> m(static_cast<std::size_t>(3 * d), Rat(0));
  for (int a = 0; a < 3; ++a) m[static_cast<std::size_t>(3 * a + a)] = Rat(1);
  return m;
}

long chern_c2_tangent_twist(long k) { return 3 + 3 * k + k * k; }

}  // namespace nullstrat
