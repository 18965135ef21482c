#ifndef NULLSTRAT_TENSORCALC_HPP
#define NULLSTRAT_TENSORCALC_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nullstrat/linalg.hpp"
#include "nullstrat/scalar.hpp"

namespace nullstrat {

// Monomial pair: exponents of the Sym^a factor (e) and the Sym^b dual
// factor (x). Basis order everywhere is the lexicographic order on the
// concatenated exponent vectors.
struct Mono {
  std::vector<std::uint8_t> e, x;
  auto operator<=>(const Mono&) const = default;
};

inline int mono_total(const std::vector<std::uint8_t>& v) {
  int s = 0;
  for (auto c : v) s += c;
  return s;
}

// Element of Sym^a(C^n) (x) Sym^b(C^n)^* with sparse exact coefficients.
template <class F>
class PolyTensor {
 public:
  using E = typename F::Elem;

  PolyTensor(F fld, int n, int a, int b) : fld_(fld), n_(n), a_(a), b_(b) {
    if (n < 1 || a < 0 || b < 0) throw std::invalid_argument("PolyTensor: bad degrees");
  }

  const F& fld() const { return fld_; }
  int n() const { return n_; }
  int a() const { return a_; }
  int b() const { return b_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<Mono, E>& terms() const { return coeffs_; }

  void add_term(const Mono& m, const E& c) {
    if (fld_.is_zero(c)) return;
    if (static_cast<int>(m.e.size()) != n_ || static_cast<int>(m.x.size()) != n_ ||
        mono_total(m.e) != a_ || mono_total(m.x) != b_) {
      throw std::invalid_argument("PolyTensor: monomial degree mismatch");
    }
    auto [it, inserted] = coeffs_.emplace(m, c);
    if (!inserted) {
      it->second = fld_.add(it->second, c);
      if (fld_.is_zero(it->second)) coeffs_.erase(it);
    }
  }

  E coeff(const Mono& m) const {
    auto it = coeffs_.find(m);
    return it == coeffs_.end() ? fld_.zero() : it->second;
  }

  PolyTensor operator+(const PolyTensor& o) const {
    require_same(o);
    PolyTensor out = *this;
    for (const auto& [m, c] : o.coeffs_) out.add_term(m, c);
    return out;
  }

  PolyTensor operator-(const PolyTensor& o) const {
    require_same(o);
    PolyTensor out = *this;
    for (const auto& [m, c] : o.coeffs_) out.add_term(m, o.fld_.neg(c));
    return out;
  }

  PolyTensor scaled(const E& s) const {
    PolyTensor out(fld_, n_, a_, b_);
    if (fld_.is_zero(s)) return out;
    for (const auto& [m, c] : coeffs_) out.add_term(m, fld_.mul(c, s));
    return out;
  }

  bool operator==(const PolyTensor& o) const {
    return n_ == o.n_ && a_ == o.a_ && b_ == o.b_ && coeffs_ == o.coeffs_;
  }

  // sorted (e-exponents, x-exponents, coefficient) triples
  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [m, c] : coeffs_) {
      if (!first) s += ", ";
      first = false;
      s += "e[";
      for (std::size_t i = 0; i < m.e.size(); ++i) s += (i ? "," : "") + std::to_string(m.e[i]);
      s += "]x[";
      for (std::size_t i = 0; i < m.x.size(); ++i) s += (i ? "," : "") + std::to_string(m.x[i]);
      s += "]:" + fld_.str(c);
    }
    return s + "}";
  }

 private:
  void require_same(const PolyTensor& o) const {
    if (n_ != o.n_ || a_ != o.a_ || b_ != o.b_) {
      throw std::invalid_argument("PolyTensor: degree mismatch");
    }
  }

  F fld_;
  int n_, a_, b_;
  std::map<Mono, E> coeffs_;
};

// all exponent vectors of the given total degree, lexicographically sorted
std::vector<std::vector<std::uint8_t>> exponents_of_degree(int n, int d);

template <class F>
PolyTensor<F> monomial(F fld, int n, std::vector<std::uint8_t> e, std::vector<std::uint8_t> x) {
  PolyTensor<F> t(fld, n, mono_total(e), mono_total(x));
  t.add_term({std::move(e), std::move(x)}, fld.one());
  return t;
}

// ---- core operators -----------------------------------------------------

// Delta = sum_i d/de_i (x) d/dx_i; bidegree (a-1, b-1).
template <class F>
PolyTensor<F> delta(const PolyTensor<F>& t) {
  if (t.a() < 1 || t.b() < 1) throw std::invalid_argument("delta: degree underflow");
  const F& K = t.fld();
  PolyTensor<F> out(K, t.n(), t.a() - 1, t.b() - 1);
  for (const auto& [m, c] : t.terms()) {
    for (int i = 0; i < t.n(); ++i) {
      if (m.e[static_cast<std::size_t>(i)] == 0 || m.x[static_cast<std::size_t>(i)] == 0) continue;
      Mono nm = m;
      long factor = static_cast<long>(nm.e[static_cast<std::size_t>(i)]) *
                    static_cast<long>(nm.x[static_cast<std::size_t>(i)]);
      --nm.e[static_cast<std::size_t>(i)];
      --nm.x[static_cast<std::size_t>(i)];
      out.add_term(nm, K.mul(c, K.from_long(factor)));
    }
  }
  return out;
}

template <class F>
PolyTensor<F> delta_power(PolyTensor<F> t, int k) {
  for (int i = 0; i < k; ++i) t = delta(t);
  return t;
}

template <class F>
PolyTensor<F> multiply(const PolyTensor<F>& s, const PolyTensor<F>& t) {
  if (s.n() != t.n()) throw std::invalid_argument("multiply: ambient dimension mismatch");
  const F& K = s.fld();
  PolyTensor<F> out(K, s.n(), s.a() + t.a(), s.b() + t.b());
  for (const auto& [m1, c1] : s.terms()) {
    for (const auto& [m2, c2] : t.terms()) {
      Mono m = m1;
      for (std::size_t i = 0; i < m.e.size(); ++i) {
        m.e[i] = static_cast<std::uint8_t>(m.e[i] + m2.e[i]);
        m.x[i] = static_cast<std::uint8_t>(m.x[i] + m2.x[i]);
      }
      out.add_term(m, K.mul(c1, c2));
    }
  }
  return out;
}

// Explicit basis of ker Delta inside Sym^a (x) Sym^b*. The Delta matrix
// has a structurally triangular pivot set: the pivot column of the row
// monomial (u', v') is (u'+e_0, v'+e_0), and all other entries of that
// column sit at rows with larger u'_0 + v'_0. Kernel vectors follow by a
// sparse triangular solve, one per column with u_0 = 0 or x_0 = 0.
template <class F>
std::vector<PolyTensor<F>> realize_irreducible(F fld, int n, int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("realize_irreducible: negative degree");
  auto es = exponents_of_degree(n, a);
  auto xs = exponents_of_degree(n, b);
  std::vector<PolyTensor<F>> basis;
  if (a == 0 || b == 0) {
    for (const auto& e : es) {
      for (const auto& x : xs) basis.push_back(monomial(fld, n, e, x));
    }
    return basis;
  }
  for (const auto& eu : es) {
    for (const auto& xv : xs) {
      if (eu[0] != 0 && xv[0] != 0) continue;  // pivot column
      // pending triangular solve, rows ordered by u'_0 + v'_0 ascending
      std::map<std::pair<int, Mono>, typename F::Elem> pending;
      auto push = [&](const Mono& row, const typename F::Elem& val) {
        if (fld.is_zero(val)) return;
        std::pair<int, Mono> key{row.e[0] + row.x[0], row};
        auto [it, inserted] = pending.emplace(key, val);
        if (!inserted) {
          it->second = fld.add(it->second, val);
          if (fld.is_zero(it->second)) pending.erase(it);
        }
      };
      // entries of the free column
      for (int i = 0; i < n; ++i) {
        if (eu[static_cast<std::size_t>(i)] == 0 || xv[static_cast<std::size_t>(i)] == 0) continue;
        Mono row{eu, xv};
        long f = static_cast<long>(row.e[static_cast<std::size_t>(i)]) *
                 static_cast<long>(row.x[static_cast<std::size_t>(i)]);
        --row.e[static_cast<std::size_t>(i)];
        --row.x[static_cast<std::size_t>(i)];
        push(row, fld.from_long(f));
      }
      PolyTensor<F> vec(fld, n, a, b);
      vec.add_term({eu, xv}, fld.one());
      while (!pending.empty()) {
        auto it = pending.begin();
        Mono row = it->first.second;
        auto val = it->second;
        pending.erase(it);
        // pivot column of this row
        Mono piv = row;
        ++piv.e[0];
        ++piv.x[0];
        long diag = static_cast<long>(piv.e[0]) * static_cast<long>(piv.x[0]);
        auto x_r = fld.neg(fld.div(val, fld.from_long(diag)));
        vec.add_term(piv, x_r);
        // remaining entries of the pivot column (rows with key + 2)
        for (int i = 1; i < n; ++i) {
          if (piv.e[static_cast<std::size_t>(i)] == 0 || piv.x[static_cast<std::size_t>(i)] == 0)
            continue;
          Mono r2 = piv;
          long f = static_cast<long>(r2.e[static_cast<std::size_t>(i)]) *
                   static_cast<long>(r2.x[static_cast<std::size_t>(i)]);
          --r2.e[static_cast<std::size_t>(i)];
          --r2.x[static_cast<std::size_t>(i)];
          push(r2, fld.mul(x_r, fld.from_long(f)));
        }
      }
      basis.push_back(std::move(vec));
    }
  }
  return basis;
}

// omega(r, s) = sum_{sigma in S_3} sgn(sigma) e_{sigma(1)} dr/dx_{sigma(2)} ds/dx_{sigma(3)}
template <class F>
PolyTensor<F> omega(const PolyTensor<F>& r, const PolyTensor<F>& s) {
  if (r.n() != 3 || s.n() != 3) throw std::invalid_argument("omega: ambient dimension must be 3");
  if (r.b() < 1 || s.b() < 1) throw std::invalid_argument("omega: degree underflow");
  static const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2},
                                                        {1, 2, 0},
                                                        {2, 0, 1},
                                                        {0, 2, 1},
                                                        {2, 1, 0},
                                                        {1, 0, 2}}};
  const F& K = r.fld();
  PolyTensor<F> out(K, 3, r.a() + s.a() + 1, r.b() + s.b() - 2);
  for (std::size_t p = 0; p < 6; ++p) {
    int sgn = p < 3 ? 1 : -1;
    int i = perms[p][0], j = perms[p][1], k = perms[p][2];
    for (const auto& [mr, cr] : r.terms()) {
      if (mr.x[static_cast<std::size_t>(j)] == 0) continue;
      for (const auto& [ms, cs] : s.terms()) {
        if (ms.x[static_cast<std::size_t>(k)] == 0) continue;
        Mono m;
        m.e.resize(3);
        m.x.resize(3);
        for (std::size_t t = 0; t < 3; ++t) {
          m.e[t] = static_cast<std::uint8_t>(mr.e[t] + ms.e[t]);
          m.x[t] = static_cast<std::uint8_t>(mr.x[t] + ms.x[t]);
        }
        ++m.e[static_cast<std::size_t>(i)];
        long factor = static_cast<long>(mr.x[static_cast<std::size_t>(j)]) *
                      static_cast<long>(ms.x[static_cast<std::size_t>(k)]);
        --m.x[static_cast<std::size_t>(j)];
        --m.x[static_cast<std::size_t>(k)];
        auto c = K.mul(K.mul(cr, cs), K.from_long(sgn * factor));
        out.add_term(m, c);
      }
    }
  }
  return out;
}

// beta(f, (g1, g2)) = Delta(omega(f, g1)) + Delta(f g2), landing in the
// V(1,1) model; the projection off the trace summand is applied only when
// the raw value fails Delta = 0, and reported.
template <class F>
PolyTensor<F> beta(const PolyTensor<F>& f, const PolyTensor<F>& g1, const PolyTensor<F>& g2,
                   bool* projection_applied = nullptr) {
  if (f.a() != 1 || f.b() != 2) throw std::invalid_argument("beta: f must have bidegree (1,2)");
  if (g1.a() != 0 || g1.b() != 2) throw std::invalid_argument("beta: g1 must have bidegree (0,2)");
  if (g2.a() != 1 || g2.b() != 0) throw std::invalid_argument("beta: g2 must have bidegree (1,0)");
  const F& K = f.fld();
  PolyTensor<F> raw = delta(omega(f, g1)) + delta(multiply(f, g2));
  PolyTensor<F> tr = delta(raw);  // bidegree (0,0)
  if (projection_applied) *projection_applied = false;
  if (!tr.is_zero()) {
    if (projection_applied) *projection_applied = true;
    Mono unit{{0, 0, 0}, {0, 0, 0}};
    auto t = K.div(tr.coeff(unit), K.from_long(3));
    for (int i = 0; i < 3; ++i) {
      Mono m{{0, 0, 0}, {0, 0, 0}};
      m.e[static_cast<std::size_t>(i)] = 1;
      m.x[static_cast<std::size_t>(i)] = 1;
      raw.add_term(m, K.neg(t));
    }
  }
  return raw;
}

// psi(f, g2) = Delta^2(f g2^2), landing in the V(1,0) model C^3.
template <class F>
PolyTensor<F> psi(const PolyTensor<F>& f, const PolyTensor<F>& g2) {
  if (f.a() != 1 || f.b() != 2) throw std::invalid_argument("psi: f must have bidegree (1,2)");
  if (g2.a() != 1 || g2.b() != 0) throw std::invalid_argument("psi: g2 must have bidegree (1,0)");
  return delta_power(multiply(f, multiply(g2, g2)), 2);
}

// E_ij acts as e_i d/de_j - x_j d/dx_i.
template <class F>
PolyTensor<F> lie_action(int i, int j, const PolyTensor<F>& t) {
  if (i == j) throw std::invalid_argument("lie_action: use lie_cartan for diagonal elements");
  if (i < 0 || j < 0 || i >= t.n() || j >= t.n()) throw std::out_of_range("lie_action: index");
  const F& K = t.fld();
  PolyTensor<F> out(K, t.n(), t.a(), t.b());
  for (const auto& [m, c] : t.terms()) {
    if (m.e[static_cast<std::size_t>(j)] > 0) {
      Mono nm = m;
      long f = nm.e[static_cast<std::size_t>(j)];
      --nm.e[static_cast<std::size_t>(j)];
      ++nm.e[static_cast<std::size_t>(i)];
      out.add_term(nm, K.mul(c, K.from_long(f)));
    }
    if (m.x[static_cast<std::size_t>(i)] > 0) {
      Mono nm = m;
      long f = nm.x[static_cast<std::size_t>(i)];
      --nm.x[static_cast<std::size_t>(i)];
      ++nm.x[static_cast<std::size_t>(j)];
      out.add_term(nm, K.mul(c, K.from_long(-f)));
    }
  }
  return out;
}

// action of E_ii - E_{i+1,i+1}
template <class F>
PolyTensor<F> lie_cartan(int i, const PolyTensor<F>& t) {
  if (i < 0 || i + 1 >= t.n()) throw std::out_of_range("lie_cartan: index");
  const F& K = t.fld();
  PolyTensor<F> out(K, t.n(), t.a(), t.b());
  for (const auto& [m, c] : t.terms()) {
    long w = static_cast<long>(m.e[static_cast<std::size_t>(i)]) -
             static_cast<long>(m.e[static_cast<std::size_t>(i + 1)]) -
             static_cast<long>(m.x[static_cast<std::size_t>(i)]) +
             static_cast<long>(m.x[static_cast<std::size_t>(i + 1)]);
    if (w != 0) out.add_term(m, K.mul(c, K.from_long(w)));
  }
  return out;
}

// dim of the annihilator {X in sl_n : X v = 0} (affine) or
// {X : X v in C v} (projective), by exact kernel computation.
template <class F>
long stabilizer_dim(const PolyTensor<F>& v, bool projective) {
  if (v.is_zero()) throw std::invalid_argument("stabilizer_dim: zero vector");
  const F& K = v.fld();
  int n = v.n();
  std::vector<PolyTensor<F>> images;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) images.push_back(lie_action(i, j, v));
    }
  }
  for (int i = 0; i + 1 < n; ++i) images.push_back(lie_cartan(i, v));
  if (projective) images.push_back(v);

  std::map<Mono, std::size_t> row_of;
  for (const auto& img : images) {
    for (const auto& [m, c] : img.terms()) row_of.emplace(m, 0);
  }
  std::size_t r = 0;
  for (auto& [m, idx] : row_of) idx = r++;
  Mat<F> mat(K, row_of.size(), images.size());
  for (std::size_t col = 0; col < images.size(); ++col) {
    for (const auto& [m, c] : images[col].terms()) mat.at(row_of[m], col) = c;
  }
  auto ker = kernel_basis(mat);
  return static_cast<long>(ker.size());
}

// mu(g, f) = Delta^a(g f) for f of bidegree (0, b_f): every term
// contracts completely, coefficient a! * prod_i falling(w_i, u_i).
template <class F>
PolyTensor<F> mu_pairing(const PolyTensor<F>& g, const PolyTensor<F>& f) {
  if (f.a() != 0) throw std::invalid_argument("mu_pairing: f must have e-degree 0");
  if (g.n() != f.n()) throw std::invalid_argument("mu_pairing: dimension mismatch");
  const F& K = g.fld();
  int n = g.n();
  auto fact = K.one();
  for (int i = 2; i <= g.a(); ++i) fact = K.mul(fact, K.from_long(i));
  PolyTensor<F> out(K, n, 0, g.b() + f.b() - g.a());
  for (const auto& [mg, cg] : g.terms()) {
    for (const auto& [mf, cf] : f.terms()) {
      Mono m;
      m.e.assign(static_cast<std::size_t>(n), 0);
      m.x.resize(static_cast<std::size_t>(n));
      auto coef = K.mul(K.mul(cg, cf), fact);
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        int w = mg.x[static_cast<std::size_t>(i)] + mf.x[static_cast<std::size_t>(i)];
        int u = mg.e[static_cast<std::size_t>(i)];
        if (u > w) {
          ok = false;
          break;
        }
        for (int t = 0; t < u; ++t) coef = K.mul(coef, K.from_long(w - t));
        m.x[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(w - u);
      }
      if (ok) out.add_term(m, coef);
    }
  }
  return out;
}

// ---- skew forms and the theta-characteristic witnesses ------------------

// Antisymmetric form, upper-triangle sparse storage, exact rationals.
class SkewForm {
 public:
  explicit SkewForm(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }

  void add(std::size_t i, std::size_t j, const Rat& c);

  Rat at(std::size_t i, std::size_t j) const;

  std::size_t rank() const;
  std::vector<std::vector<Rat>> kernel() const;

 private:
  std::size_t dim_;
  std::map<std::pair<std::size_t, std::size_t>, Rat> upper_;
};

// Element of Sym^2(C^d)^* (x) Lambda^2(C^3)^*: terms (x_i x_j) (x) (y_k ^ y_l)
// with 0-based i <= j < d and k < l < 3.
struct Sym2Wedge2 {
  int d = 0;
  std::map<std::array<int, 4>, Rat> terms;

  void add(int i, int j, int k, int l, const Rat& c);
};

// iota((x_i x_j) (x) (y_k ^ y_l)) = (x_i (x) y_k) ^ (x_j (x) y_l)
//                                 + (x_j (x) y_k) ^ (x_i (x) y_l)
SkewForm iota(const Sym2Wedge2& w);

// the rank-14 generator on C^5 (x) C^3
Sym2Wedge2 omega_two_form_witness();
// omega padded by the pi_j blocks: maximal-rank witness for odd d >= 5
Sym2Wedge2 kappa_witness(int d);
// the kernel line generator m = e_1 (x) f_1 + e_2 (x) f_2 + e_3 (x) f_3
std::vector<Rat> kappa_kernel_vector(int d);

// ---- the seven-points configuration ------------------------------------

template <class F>
struct SevenPointsData {
  PolyTensor<F> f, g1, g2, h;  // the special points
  SevenPointsData(F K)
      : f(K, 3, 1, 2), g1(K, 3, 0, 2), g2(K, 3, 1, 0), h(K, 3, 1, 0) {}
};

// F = 3 e2 x1 x3 - 2 e1 x1 x2 + 6 e3 x3 x2 - 2 e2 x2^2, G1 = x1 x3 - x2^2,
// G2 = 2 e2, H = psi(F, G2)
template <class F>
SevenPointsData<F> seven_points_data(F K) {
  SevenPointsData<F> d(K);
  auto mono = [&](int e_idx, std::vector<std::uint8_t> x) {
    Mono m;
    m.e.assign(3, 0);
    if (e_idx >= 0) m.e[static_cast<std::size_t>(e_idx)] = 1;
    m.x = std::move(x);
    return m;
  };
  d.f.add_term(mono(1, {1, 0, 1}), K.from_long(3));
  d.f.add_term(mono(0, {1, 1, 0}), K.from_long(-2));
  d.f.add_term(mono(2, {0, 1, 1}), K.from_long(6));
  d.f.add_term(mono(1, {0, 2, 0}), K.from_long(-2));
  d.g1.add_term(Mono{{0, 0, 0}, {1, 0, 1}}, K.one());
  d.g1.add_term(Mono{{0, 0, 0}, {0, 2, 0}}, K.from_long(-1));
  d.g2.add_term(Mono{{0, 1, 0}, {0, 0, 0}}, K.from_long(2));
  d.h = psi(d.f, d.g2);
  return d;
}

struct SevenPointsKernelDims {
  long k1 = 0;  // dim ker beta(F, .) on V(0,2) + V(1,0)
  long k2 = 0;  // dim ker beta(., (G1,G2)) on V(1,2)
  long k3 = 0;  // dim of the intersection with ker psi(., G2)
  std::size_t rank1 = 0, rank2 = 0;
};

template <class F>
SevenPointsKernelDims kernel_dims_seven_points(F K) {
  SevenPointsData<F> data = seven_points_data(K);
  auto v12 = realize_irreducible(K, 3, 1, 2);
  auto v02 = realize_irreducible(K, 3, 0, 2);
  auto v10 = realize_irreducible(K, 3, 1, 0);

  auto index_rows = [](const std::vector<PolyTensor<F>>& cols) {
    std::map<Mono, std::size_t> rows;
    for (const auto& c : cols) {
      for (const auto& [m, v] : c.terms()) rows.emplace(m, 0);
    }
    std::size_t r = 0;
    for (auto& [m, i] : rows) i = r++;
    return rows;
  };

  // beta(F, .): columns over the 9-dim space V(0,2) + V(1,0)
  std::vector<PolyTensor<F>> cols1;
  PolyTensor<F> zero_g2(K, 3, 1, 0), zero_g1(K, 3, 0, 2);
  for (const auto& b : v02) cols1.push_back(beta(data.f, b, zero_g2));
  for (const auto& b : v10) cols1.push_back(beta(data.f, zero_g1, b));
  auto rows1 = index_rows(cols1);
  Mat<F> m1(K, std::max<std::size_t>(rows1.size(), 1), cols1.size());
  for (std::size_t c = 0; c < cols1.size(); ++c) {
    for (const auto& [m, v] : cols1[c].terms()) m1.at(rows1[m], c) = v;
  }
  SevenPointsKernelDims out;
  out.rank1 = rank(m1);
  out.k1 = static_cast<long>(cols1.size() - out.rank1);

  // beta(., (G1, G2)) and psi(., G2): columns over V(1,2)
  std::vector<PolyTensor<F>> cols2, cols3;
  for (const auto& b : v12) {
    cols2.push_back(beta(b, data.g1, data.g2));
    cols3.push_back(psi(b, data.g2));
  }
  auto rows2 = index_rows(cols2);
  Mat<F> m2(K, std::max<std::size_t>(rows2.size(), 1), cols2.size());
  for (std::size_t c = 0; c < cols2.size(); ++c) {
    for (const auto& [m, v] : cols2[c].terms()) m2.at(rows2[m], c) = v;
  }
  out.rank2 = rank(m2);
  out.k2 = static_cast<long>(cols2.size() - out.rank2);

  auto rows3 = index_rows(cols3);
  Mat<F> m23(K, rows2.size() + rows3.size(), cols2.size());
  for (std::size_t c = 0; c < cols2.size(); ++c) {
    for (const auto& [m, v] : cols2[c].terms()) m23.at(rows2[m], c) = v;
    for (const auto& [m, v] : cols3[c].terms()) m23.at(rows2.size() + rows3[m], c) = v;
  }
  out.k3 = static_cast<long>(cols2.size() - rank(m23));
  return out;
}

// c_2(T_P2(k)) = 3 + 3k + k^2 from c(T_P2) = (1+h)^3
long chern_c2_tangent_twist(long k);

}  // namespace nullstrat

#endif
