#include "nullstrat/repchar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "nullstrat/linalg.hpp"

namespace nullstrat {

std::string IrrLabel::str() const {
  std::ostringstream os;
  os << "V(";
  for (std::size_t k = 0; k < per_factor.size(); ++k) {
    if (k) os << ";";
    for (std::size_t i = 0; i < per_factor[k].size(); ++i) {
      if (i) os << ",";
      os << per_factor[k][i];
    }
  }
  os << ")";
  return os.str();
}

void check_label(const GroupShape& shape, const IrrLabel& label) {
  if (label.per_factor.size() != shape.num_factors()) {
    throw std::invalid_argument("label: factor count mismatch");
  }
  for (std::size_t k = 0; k < shape.num_factors(); ++k) {
    if (label.per_factor[k].size() != static_cast<std::size_t>(shape.factors[k] - 1)) {
      throw std::invalid_argument("label: wrong number of entries for " + shape.str());
    }
    for (long a : label.per_factor[k]) {
      if (a < 0) throw std::invalid_argument("label: negative entry");
    }
  }
}

IrrLabel dual_label(const GroupShape& shape, const IrrLabel& label) {
  check_label(shape, label);
  IrrLabel d = label;
  for (auto& f : d.per_factor) std::reverse(f.begin(), f.end());
  return d;
}

AmbientWeight highest_weight(const GroupShape& shape, const IrrLabel& label) {
  check_label(shape, label);
  AmbientWeight w = AmbientWeight::zero(shape);
  for (std::size_t k = 0; k < shape.num_factors(); ++k) {
    // omega_i = eps_0 + ... + eps_{i-1}
    AmbientWeight omega = AmbientWeight::zero(shape);
    for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(shape.factors[k]); ++i) {
      omega = omega + epsilon(shape, k, i);
      w = w + omega.scaled(Rat(label.per_factor[k][i]));
    }
  }
  return w;
}

IrrLabel label_of_dominant(const AmbientWeight& w) {
  const GroupShape& shape = w.shape();
  IrrLabel label;
  for (std::size_t k = 0; k < shape.num_factors(); ++k) {
    std::size_t off = shape.block_offset(k);
    int n = shape.factors[k];
    std::vector<long> lab;
    for (int i = 0; i + 1 < n; ++i) {
      Rat d = (w[off + i] - w[off + i + 1]) / Rat(n);
      if (d.get_den() != 1 || d < 0) {
        throw std::invalid_argument("label_of_dominant: weight not dominant integral");
      }
      lab.push_back(static_cast<long>(d.get_num().get_si()));
    }
    label.per_factor.push_back(std::move(lab));
  }
  return label;
}

long long weyl_dim(const GroupShape& shape, const IrrLabel& label) {
  check_label(shape, label);
  Rat dim(1);
  for (std::size_t k = 0; k < shape.num_factors(); ++k) {
    int n = shape.factors[k];
    const auto& lab = label.per_factor[k];
    // lambda + rho in "partition" coordinates p_i = sum_{j>=i} (lab_j + 1)
    std::vector<long> p(static_cast<std::size_t>(n), 0);
    for (int i = n - 2; i >= 0; --i) p[i] = p[i + 1] + lab[i] + 1;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        dim *= rat_of(p[i] - p[j], j - i);
      }
    }
  }
  if (dim.get_den() != 1) throw std::logic_error("weyl_dim: non-integer result");
  return static_cast<long long>(dim.get_num().get_si());
}

long long CharacterMultiset::dim() const {
  long long d = 0;
  for (const auto& [w, m] : m_) d += m;
  return d;
}

long long CharacterMultiset::mult(const AmbientWeight& w) const {
  auto it = m_.find(w);
  return it == m_.end() ? 0 : it->second;
}

void CharacterMultiset::add(const AmbientWeight& w, long long k) {
  if (k == 0) return;
  auto [it, inserted] = m_.emplace(w, k);
  if (!inserted) {
    it->second += k;
    if (it->second == 0) m_.erase(it);
  }
}

bool CharacterMultiset::is_effective() const {
  for (const auto& [w, m] : m_) {
    if (m < 0) return false;
  }
  return true;
}

std::string CharacterMultiset::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [w, m] : m_) {
    if (!first) os << ", ";
    first = false;
    os << w.str() << ":" << m;
  }
  os << "}";
  return os.str();
}

CharacterMultiset trivial_character(const GroupShape& shape) {
  CharacterMultiset c(shape);
  c.add(AmbientWeight::zero(shape), 1);
  return c;
}

CharacterMultiset standard_character(const GroupShape& shape, std::size_t factor) {
  CharacterMultiset c(shape);
  for (int i = 0; i < shape.factors[factor]; ++i) {
    c.add(epsilon(shape, factor, i), 1);
  }
  return c;
}

namespace {

// ---- single-factor Freudenthal ----------------------------------------

// Partition coordinates: lambda_hat_i = sum_{j >= i} lab_j, last part 0.
std::vector<long> label_partition(const std::vector<long>& lab) {
  std::vector<long> p(lab.size() + 1, 0);
  for (std::size_t i = lab.size(); i-- > 0;) p[i] = p[i + 1] + lab[i];
  return p;
}

// All partitions mu of |lambda_hat| into <= n parts dominated by
// lambda_hat (pointwise partial-sum inequality).
void dominated_partitions(const std::vector<long>& lam, std::vector<long>& cur, long remaining,
                          long prev, std::size_t depth, long lam_psum,
                          std::vector<std::vector<long>>& out) {
  std::size_t n = lam.size();
  if (depth == n) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  long lam_ps = lam_psum + lam[depth];
  long total = 0;
  for (std::size_t i = 0; i < depth; ++i) total += cur[i];
  // mu_depth <= prev, partial sums dominated by lambda, and the rest must fit
  for (long v = std::min(prev, remaining); v >= 0; --v) {
    if (total + v > lam_ps) continue;
    if (v * static_cast<long>(n - depth) < remaining) break;
    cur[depth] = v;
    dominated_partitions(lam, cur, remaining - v, v, depth + 1, lam_ps, out);
  }
  cur[depth] = 0;
}

struct FactorCharacter {
  // dominant weight (as sorted ambient coords of the single factor) -> mult
  std::map<std::vector<long>, long long> dominant;
};

long dot(const std::vector<long>& a, const std::vector<long>& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Freudenthal recursion for one SL_n factor; weights in ambient
// coordinates v_i = n*mu_i - |mu|.
FactorCharacter freudenthal_factor(int n, const std::vector<long>& lab) {
  std::vector<long> lam = label_partition(lab);
  long N = 0;
  for (long x : lam) N += x;

  std::vector<std::vector<long>> parts;
  std::vector<long> cur(static_cast<std::size_t>(n), 0);
  dominated_partitions(lam, cur, N, N, 0, 0, parts);

  // sort by partial-sum tuple, descending: a linear extension of dominance
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
    long pa = 0, pb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      pa += a[i];
      pb += b[i];
      if (pa != pb) return pa > pb;
    }
    return false;
  });

  auto ambient = [&](const std::vector<long>& mu) {
    std::vector<long> v(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) v[i] = static_cast<long>(mu.size()) * mu[i] - N;
    return v;
  };

  // delta = n*(n-1, n-2, ..., 0) agrees with rho up to a multiple of (1,..,1)
  std::vector<long> delta(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) delta[static_cast<std::size_t>(i)] = static_cast<long>(n) * (n - 1 - i);

  std::vector<std::vector<long>> alphas;  // positive roots, ambient coords
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::vector<long> a(static_cast<std::size_t>(n), 0);
      a[static_cast<std::size_t>(i)] = n;
      a[static_cast<std::size_t>(j)] = -n;
      alphas.push_back(std::move(a));
    }
  }

  std::vector<long> lam_amb = ambient(lam);
  std::vector<long> lam_shift(lam_amb);
  for (int i = 0; i < n; ++i) lam_shift[static_cast<std::size_t>(i)] += delta[static_cast<std::size_t>(i)];
  long lam_norm = dot(lam_shift, lam_shift);

  FactorCharacter out;
  for (const auto& mu_part : parts) {
    std::vector<long> mu = ambient(mu_part);
    if (mu == lam_amb) {
      out.dominant[mu] = 1;
      continue;
    }
    long long rhs = 0;
    for (const auto& alpha : alphas) {
      std::vector<long> w = mu;
      for (long k = 1;; ++k) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] += alpha[i];
        std::vector<long> sorted = w;
        std::sort(sorted.begin(), sorted.end(), std::greater<long>());
        auto it = out.dominant.find(sorted);
        if (it == out.dominant.end()) break;  // weight strings are contiguous
        rhs += it->second * static_cast<long long>(dot(w, alpha));
      }
    }
    std::vector<long> mu_shift(mu);
    for (int i = 0; i < n; ++i) mu_shift[static_cast<std::size_t>(i)] += delta[static_cast<std::size_t>(i)];
    long denom = lam_norm - dot(mu_shift, mu_shift);
    if (denom <= 0) throw std::logic_error("freudenthal: non-positive denominator");
    long long num = 2 * rhs;
    if (num % denom != 0) throw std::logic_error("freudenthal: non-integer multiplicity");
    long long m = num / denom;
    if (m > 0) out.dominant[ambient(mu_part)] = m;
  }
  return out;
}

// expand a dominant table into the full W-orbit weight list of one factor
std::vector<std::pair<std::vector<Rat>, long long>> expand_factor(const FactorCharacter& fc, int n) {
  std::vector<std::pair<std::vector<Rat>, long long>> out;
  for (const auto& [dom, m] : fc.dominant) {
    std::vector<long> v = dom;
    std::sort(v.begin(), v.end());  // ascending for next_permutation
    do {
      std::vector<Rat> coords(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) coords[static_cast<std::size_t>(i)] = Rat(v[static_cast<std::size_t>(i)]);
      out.emplace_back(std::move(coords), m);
    } while (std::next_permutation(v.begin(), v.end()));
  }
  return out;
}

}  // namespace

CharacterMultiset irr_character(const GroupShape& shape, const IrrLabel& label) {
  check_label(shape, label);

  static std::mutex cache_mutex;
  static std::map<std::pair<std::vector<int>, std::vector<std::vector<long>>>, CharacterMultiset>
      cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({shape.factors, label.per_factor});
    if (it != cache.end()) return it->second;
  }

  std::vector<std::vector<std::pair<std::vector<Rat>, long long>>> per_factor;
  for (std::size_t k = 0; k < shape.num_factors(); ++k) {
    FactorCharacter fc = freudenthal_factor(shape.factors[k], label.per_factor[k]);
    per_factor.push_back(expand_factor(fc, shape.factors[k]));
  }

  CharacterMultiset result(shape);
  std::vector<std::size_t> idx(shape.num_factors(), 0);
  while (true) {
    std::vector<Rat> coords;
    coords.reserve(shape.ambient_dim());
    long long m = 1;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const auto& [c, mk] = per_factor[k][idx[k]];
      coords.insert(coords.end(), c.begin(), c.end());
      m *= mk;
    }
    result.add(AmbientWeight(shape, std::move(coords)), m);
    std::size_t k = 0;
    while (k < idx.size()) {
      if (++idx[k] < per_factor[k].size()) break;
      idx[k] = 0;
      ++k;
    }
    if (k == idx.size()) break;
  }
  long long expect = weyl_dim(shape, label);
  if (result.dim() != expect) throw std::logic_error("irr_character: dimension mismatch");

  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(std::make_pair(shape.factors, label.per_factor), result);
  return result;
}

CharacterMultiset tensor(const CharacterMultiset& a, const CharacterMultiset& b) {
  if (a.shape() != b.shape()) throw std::invalid_argument("tensor: shape mismatch");
  CharacterMultiset out(a.shape());
  for (const auto& [wa, ma] : a.entries()) {
    for (const auto& [wb, mb] : b.entries()) {
      out.add(wa + wb, ma * mb);
    }
  }
  return out;
}

CharacterMultiset dual_character(const CharacterMultiset& a) {
  CharacterMultiset out(a.shape());
  for (const auto& [w, m] : a.entries()) out.add(-w, m);
  return out;
}

namespace {

CharacterMultiset adams(const CharacterMultiset& a, long k) {
  CharacterMultiset out(a.shape());
  for (const auto& [w, m] : a.entries()) out.add(w.scaled(Rat(k)), m);
  return out;
}

CharacterMultiset power_by_newton(const CharacterMultiset& a, long d, bool exterior) {
  if (d < 0) throw std::invalid_argument("power: negative degree");
  std::vector<CharacterMultiset> table;
  table.push_back(trivial_character(a.shape()));
  for (long dd = 1; dd <= d; ++dd) {
    CharacterMultiset acc(a.shape());
    for (long k = 1; k <= dd; ++k) {
      long long sign = (exterior && k % 2 == 0) ? -1 : 1;
      CharacterMultiset term = tensor(adams(a, k), table[static_cast<std::size_t>(dd - k)]);
      for (const auto& [w, m] : term.entries()) acc.add(w, sign * m);
    }
    CharacterMultiset next(a.shape());
    for (const auto& [w, m] : acc.entries()) {
      if (m % dd != 0) throw std::logic_error("power_by_newton: non-integral multiplicity");
      next.add(w, m / dd);
    }
    table.push_back(std::move(next));
  }
  return table[static_cast<std::size_t>(d)];
}

}  // namespace

CharacterMultiset sym_power(const CharacterMultiset& a, long d) {
  auto out = power_by_newton(a, d, false);
  if (!out.is_effective()) throw std::logic_error("sym_power: negative multiplicity");
  return out;
}

CharacterMultiset ext_power(const CharacterMultiset& a, long d) {
  auto out = power_by_newton(a, d, true);
  if (!out.is_effective()) throw std::logic_error("ext_power: negative multiplicity");
  return out;
}

namespace {

constexpr long kWeylSumLimit = 100000;

AmbientWeight delta_shift(const GroupShape& shape) {
  // blockwise n*(n-1, n-2, ..., 0), projected to sum zero
  std::vector<Rat> c(shape.ambient_dim());
  for (std::size_t k = 0; k < shape.num_factors(); ++k) {
    int n = shape.factors[k];
    std::size_t off = shape.block_offset(k);
    Rat mean = rat_of(static_cast<long>(n) * (n - 1), 2);
    for (int i = 0; i < n; ++i) {
      c[off + static_cast<std::size_t>(i)] = Rat(static_cast<long>(n) * (n - 1 - i)) - mean;
    }
  }
  return AmbientWeight(shape, std::move(c));
}

bool is_dominant(const AmbientWeight& w) {
  const GroupShape& shape = w.shape();
  for (std::size_t k = 0; k < shape.num_factors(); ++k) {
    std::size_t off = shape.block_offset(k);
    for (int i = 0; i + 1 < shape.factors[k]; ++i) {
      if (cmp(w[off + static_cast<std::size_t>(i)], w[off + static_cast<std::size_t>(i) + 1]) < 0)
        return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::pair<IrrLabel, long long>> decompose(const CharacterMultiset& m) {
  const GroupShape& shape = m.shape();
  AmbientWeight delta = delta_shift(shape);
  CharacterMultiset rest = m;
  std::vector<std::pair<IrrLabel, long long>> out;
  while (!rest.empty()) {
    // largest dominant weight: maximal |mu+delta|^2, ties by weight order
    const AmbientWeight* best = nullptr;
    Rat best_norm;
    for (const auto& [w, mult] : rest.entries()) {
      if (mult == 0 || !is_dominant(w)) continue;
      Rat nn = norm2(w + delta);
      if (!best || cmp(nn, best_norm) > 0 || (nn == best_norm && *best < w)) {
        best = &w;
        best_norm = nn;
      }
    }
    if (!best) throw std::invalid_argument("decompose: not a character (no dominant weight left)");
    long long c = rest.mult(*best);
    if (c < 0) throw std::invalid_argument("decompose: not a character (negative extraction)");
    IrrLabel label = label_of_dominant(*best);
    CharacterMultiset irr = irr_character(shape, label);
    for (const auto& [w, mult] : irr.entries()) rest.add(w, -c * mult);
    out.emplace_back(std::move(label), c);
  }
  return out;
}

long long mult_in(const IrrLabel& label, const CharacterMultiset& m) {
  const GroupShape& shape = m.shape();
  check_label(shape, label);
  if (shape.weyl_order() <= kWeylSumLimit) {
    AmbientWeight delta = delta_shift(shape);
    AmbientWeight target = highest_weight(shape, label) + delta;
    long long total = 0;
    for (const auto& w : WeylElement::all(shape)) {
      total += w.sign() * m.mult(w.apply(target) - delta);
    }
    if (total < 0) throw std::logic_error("mult_in: negative multiplicity");
    return total;
  }
  for (const auto& [lab, c] : decompose(m)) {
    if (lab == label) return c;
  }
  return 0;
}

long long mult_in_tensor(const IrrLabel& label, const CharacterMultiset& a,
                         const CharacterMultiset& b) {
  if (a.shape() != b.shape()) throw std::invalid_argument("mult_in_tensor: shape mismatch");
  const GroupShape& shape = a.shape();
  check_label(shape, label);
  if (shape.weyl_order() > kWeylSumLimit) return mult_in(label, tensor(a, b));
  AmbientWeight delta = delta_shift(shape);
  AmbientWeight target = highest_weight(shape, label) + delta;
  long long total = 0;
  for (const auto& w : WeylElement::all(shape)) {
    AmbientWeight mu = w.apply(target) - delta;
    long long conv = 0;
    for (const auto& [wa, ma] : a.entries()) conv += ma * b.mult(mu - wa);
    total += w.sign() * conv;
  }
  if (total < 0) throw std::logic_error("mult_in_tensor: negative multiplicity");
  return total;
}

long long invariant_dim(const CharacterMultiset& m, long d) {
  if (d < 1) throw std::invalid_argument("invariant_dim: degree must be >= 1");
  IrrLabel triv;
  for (int n : m.shape().factors) triv.per_factor.emplace_back(static_cast<std::size_t>(n - 1), 0);
  return mult_in(triv, sym_power(m, d));
}

std::vector<long> center_character(const GroupShape& shape, const IrrLabel& label) {
  check_label(shape, label);
  std::vector<long> out;
  for (std::size_t k = 0; k < shape.num_factors(); ++k) {
    long n = shape.factors[k];
    long c = 0;
    for (std::size_t i = 0; i < label.per_factor[k].size(); ++i) {
      c = (c + static_cast<long>(i + 1) * (label.per_factor[k][i] % n)) % n;
    }
    out.push_back(((c % n) + n) % n);
  }
  return out;
}

TorusInvariantBasis diagonal_torus_invariants(const std::vector<std::vector<Int>>& weights) {
  if (weights.empty()) return {};
  std::size_t r = weights[0].size();
  for (const auto& w : weights) {
    if (w.size() != r) throw std::invalid_argument("diagonal_torus_invariants: ragged weights");
  }
  std::vector<std::vector<Int>> rows(r, std::vector<Int>(weights.size(), 0));
  for (std::size_t i = 0; i < weights.size(); ++i) {
    for (std::size_t j = 0; j < r; ++j) rows[j][i] = weights[i][j];
  }
  TorusInvariantBasis out;
  out.exponents = integer_kernel(rows);
  out.transcendence_degree = static_cast<long>(out.exponents.size());
  return out;
}

}  // namespace nullstrat
