#include "nullstrat/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nullstrat {

GroupShape::GroupShape(std::vector<int> f) : factors(std::move(f)) {
  if (factors.empty()) throw std::invalid_argument("GroupShape: need at least one factor");
  for (int n : factors) {
    if (n < 2) throw std::invalid_argument("GroupShape: every factor must be SL_n with n >= 2");
  }
}

int GroupShape::rank() const {
  int r = 0;
  for (int n : factors) r += n - 1;
  return r;
}

std::size_t GroupShape::ambient_dim() const {
  std::size_t d = 0;
  for (int n : factors) d += static_cast<std::size_t>(n);
  return d;
}

std::size_t GroupShape::block_offset(std::size_t k) const {
  if (k >= factors.size()) throw std::out_of_range("GroupShape: factor index");
  std::size_t off = 0;
  for (std::size_t i = 0; i < k; ++i) off += static_cast<std::size_t>(factors[i]);
  return off;
}

long GroupShape::weyl_order() const {
  long w = 1;
  for (int n : factors) {
    for (int i = 2; i <= n; ++i) w *= i;
  }
  return w;
}

std::string GroupShape::str() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k) os << " x ";
    os << "SL" << factors[k];
  }
  return os.str();
}

GroupShape parse_group(const std::string& text) {
  std::vector<int> factors;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  while (true) {
    skip_ws();
    if (i + 2 > text.size() || (text[i] != 'S' && text[i] != 's') ||
        (text[i + 1] != 'L' && text[i + 1] != 'l')) {
      throw std::invalid_argument("parse_group: expected 'SL<n>' in '" + text + "'");
    }
    i += 2;
    std::size_t start = i;
    while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw std::invalid_argument("parse_group: missing rank in '" + text + "'");
    factors.push_back(std::stoi(text.substr(start, i - start)));
    skip_ws();
    if (i == text.size()) break;
    if (text[i] == 'x' || text[i] == 'X') {
      ++i;
      continue;
    }
    throw std::invalid_argument("parse_group: unexpected character in '" + text + "'");
  }
  return GroupShape(factors);
}

AmbientWeight::AmbientWeight(GroupShape shape, std::vector<Rat> coords)
    : shape_(std::move(shape)), c_(std::move(coords)) {
  if (c_.size() != shape_.ambient_dim()) {
    throw std::invalid_argument("AmbientWeight: coordinate count does not match shape");
  }
  for (auto& x : c_) x.canonicalize();  // callers may pass unreduced fractions
  for (std::size_t k = 0; k < shape_.num_factors(); ++k) {
    std::size_t off = shape_.block_offset(k);
    Rat s(0);
    for (int i = 0; i < shape_.factors[k]; ++i) s += c_[off + i];
    if (s != 0) throw std::invalid_argument("AmbientWeight: block coordinates must sum to zero");
  }
}

AmbientWeight AmbientWeight::zero(const GroupShape& shape) {
  return AmbientWeight(shape, std::vector<Rat>(shape.ambient_dim(), Rat(0)));
}

bool AmbientWeight::is_zero() const {
  for (const auto& x : c_) {
    if (x != 0) return false;
  }
  return true;
}

AmbientWeight AmbientWeight::operator+(const AmbientWeight& o) const {
  if (shape_ != o.shape_) throw std::invalid_argument("AmbientWeight: shape mismatch");
  std::vector<Rat> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] + o.c_[i];
  AmbientWeight w;
  w.shape_ = shape_;
  w.c_ = std::move(out);
  return w;
}

AmbientWeight AmbientWeight::operator-(const AmbientWeight& o) const {
  if (shape_ != o.shape_) throw std::invalid_argument("AmbientWeight: shape mismatch");
  std::vector<Rat> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] - o.c_[i];
  AmbientWeight w;
  w.shape_ = shape_;
  w.c_ = std::move(out);
  return w;
}

AmbientWeight AmbientWeight::operator-() const { return scaled(Rat(-1)); }

AmbientWeight AmbientWeight::scaled(const Rat& s) const {
  std::vector<Rat> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * s;
  AmbientWeight w;
  w.shape_ = shape_;
  w.c_ = std::move(out);
  return w;
}

bool AmbientWeight::operator<(const AmbientWeight& o) const {
  for (std::size_t i = 0; i < c_.size() && i < o.c_.size(); ++i) {
    int c = cmp(c_[i], o.c_[i]);
    if (c != 0) return c < 0;
  }
  return c_.size() < o.c_.size();
}

std::string AmbientWeight::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < shape_.num_factors(); ++k) {
    if (k) os << ",";
    os << "(";
    std::size_t off = shape_.block_offset(k);
    for (int i = 0; i < shape_.factors[k]; ++i) {
      if (i) os << ",";
      os << c_[off + i].get_str();
    }
    os << ")";
  }
  os << "]";
  return os.str();
}

AmbientWeight epsilon(const GroupShape& shape, std::size_t factor, std::size_t i) {
  if (factor >= shape.num_factors()) throw std::out_of_range("epsilon: factor index");
  int n = shape.factors[factor];
  if (i >= static_cast<std::size_t>(n)) throw std::out_of_range("epsilon: coordinate index");
  std::vector<Rat> c(shape.ambient_dim(), Rat(0));
  std::size_t off = shape.block_offset(factor);
  for (int j = 0; j < n; ++j) c[off + j] = Rat(-1);
  c[off + i] += Rat(n);
  return AmbientWeight(shape, std::move(c));
}

Rat pair(const AmbientWeight& a, const AmbientWeight& b) {
  if (a.shape() != b.shape()) throw std::invalid_argument("pair: shape mismatch");
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat norm2(const AmbientWeight& a) { return pair(a, a); }

std::vector<AmbientWeight> roots(const GroupShape& shape) {
  std::vector<AmbientWeight> out;
  for (std::size_t k = 0; k < shape.num_factors(); ++k) {
    int n = shape.factors[k];
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        out.push_back(epsilon(shape, k, i) - epsilon(shape, k, j));
      }
    }
  }
  return out;
}

AmbientWeight weyl_canonical(const AmbientWeight& a) {
  std::vector<Rat> c = a.coords();
  const GroupShape& shape = a.shape();
  for (std::size_t k = 0; k < shape.num_factors(); ++k) {
    std::size_t off = shape.block_offset(k);
    std::sort(c.begin() + off, c.begin() + off + shape.factors[k],
              [](const Rat& x, const Rat& y) { return cmp(x, y) > 0; });
  }
  return AmbientWeight(shape, std::move(c));
}

int WeylElement::sign() const {
  int s = 1;
  for (const auto& p : perms) {
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0, j = i;
      while (!seen[j]) {
        seen[j] = true;
        j = static_cast<std::size_t>(p[j]);
        ++len;
      }
      if (len % 2 == 0) s = -s;
    }
  }
  return s;
}

AmbientWeight WeylElement::apply(const AmbientWeight& a) const {
  const GroupShape& shape = a.shape();
  if (perms.size() != shape.num_factors()) throw std::invalid_argument("WeylElement: shape mismatch");
  std::vector<Rat> c(a.size());
  for (std::size_t k = 0; k < perms.size(); ++k) {
    std::size_t off = shape.block_offset(k);
    const auto& p = perms[k];
    if (p.size() != static_cast<std::size_t>(shape.factors[k])) {
      throw std::invalid_argument("WeylElement: permutation size mismatch");
    }
    for (std::size_t i = 0; i < p.size(); ++i) c[off + static_cast<std::size_t>(p[i])] = a[off + i];
  }
  return AmbientWeight(shape, std::move(c));
}

WeylElement WeylElement::identity(const GroupShape& shape) {
  WeylElement w;
  for (int n : shape.factors) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    w.perms.push_back(std::move(p));
  }
  return w;
}

std::vector<WeylElement> WeylElement::all(const GroupShape& shape) {
  std::vector<std::vector<std::vector<int>>> factor_perms;
  for (int n : shape.factors) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> ps;
    do {
      ps.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    factor_perms.push_back(std::move(ps));
  }
  std::vector<WeylElement> out;
  std::vector<std::size_t> idx(shape.num_factors(), 0);
  while (true) {
    WeylElement w;
    for (std::size_t k = 0; k < idx.size(); ++k) w.perms.push_back(factor_perms[k][idx[k]]);
    out.push_back(std::move(w));
    std::size_t k = 0;
    while (k < idx.size()) {
      if (++idx[k] < factor_perms[k].size()) break;
      idx[k] = 0;
      ++k;
    }
    if (k == idx.size()) break;
  }
  return out;
}

WeylElement WeylElement::random(const GroupShape& shape, std::mt19937_64& rng) {
  WeylElement w = identity(shape);
  for (auto& p : w.perms) {
    for (std::size_t i = p.size(); i > 1; --i) {
      std::uniform_int_distribution<std::size_t> dist(0, i - 1);
      std::swap(p[i - 1], p[dist(rng)]);
    }
  }
  return w;
}

AmbientWeight root_weight(const GroupShape& shape, const RootIndex& r) {
  return epsilon(shape, r.factor, static_cast<std::size_t>(r.i)) -
         epsilon(shape, r.factor, static_cast<std::size_t>(r.j));
}

std::vector<RootIndex> root_indices(const GroupShape& shape) {
  std::vector<RootIndex> out;
  for (std::size_t k = 0; k < shape.num_factors(); ++k) {
    for (int i = 0; i < shape.factors[k]; ++i) {
      for (int j = 0; j < shape.factors[k]; ++j) {
        if (i != j) out.push_back({k, i, j});
      }
    }
  }
  return out;
}

bool is_integral(const AmbientWeight& a) {
  const GroupShape& shape = a.shape();
  for (std::size_t k = 0; k < shape.num_factors(); ++k) {
    std::size_t off = shape.block_offset(k);
    int n = shape.factors[k];
    Int first_mod;
    for (int i = 0; i < n; ++i) {
      const Rat& x = a[off + i];
      if (x.get_den() != 1) return false;
      Int m = x.get_num() % Int(n);
      if (m < 0) m += Int(n);
      if (i == 0) {
        first_mod = m;
      } else if (m != first_mod) {
        return false;
      }
    }
  }
  return true;
}

long n_min_integral(const AmbientWeight& a) {
  Int den_lcm(1);
  for (const auto& x : a.coords()) {
    Int d = x.get_den();
    den_lcm = lcm(den_lcm, d);
  }
  long base = static_cast<long>(den_lcm.get_si());
  long block_lcm = 1;
  for (int n : a.shape().factors) block_lcm = std::lcm(block_lcm, static_cast<long>(n));
  for (long t = 1; t <= block_lcm; ++t) {
    if (is_integral(a.scaled(Rat(base * t)))) return base * t;
  }
  throw std::logic_error("n_min_integral: no multiple found");  // unreachable
}

}  // namespace nullstrat
