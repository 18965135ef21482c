#ifndef NULLSTRAT_LATTICE_HPP
#define NULLSTRAT_LATTICE_HPP

#include <compare>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "nullstrat/scalar.hpp"

namespace nullstrat {

// A product of SL_n factors. Weights live in the concatenation of the
// sum-zero hyperplanes of the factors, one block of length n_k each.
struct GroupShape {
  std::vector<int> factors;

  GroupShape() = default;
  explicit GroupShape(std::vector<int> f);

  std::size_t num_factors() const { return factors.size(); }
  int rank() const;                 // sum of (n_k - 1)
  std::size_t ambient_dim() const;  // sum of n_k
  std::size_t block_offset(std::size_t k) const;
  long weyl_order() const;  // product of n_k!

  bool operator==(const GroupShape& o) const { return factors == o.factors; }
  bool operator!=(const GroupShape& o) const { return !(*this == o); }
  std::string str() const;  // e.g. "SL5 x SL3"
};

GroupShape parse_group(const std::string& text);  // "SL3", "SL5 x SL3", "SL5xSL3"

// Rational vector with per-block coordinate sum zero.
class AmbientWeight {
 public:
  AmbientWeight() = default;
  AmbientWeight(GroupShape shape, std::vector<Rat> coords);

  static AmbientWeight zero(const GroupShape& shape);

  const GroupShape& shape() const { return shape_; }
  const std::vector<Rat>& coords() const { return c_; }
  const Rat& operator[](std::size_t i) const { return c_[i]; }
  std::size_t size() const { return c_.size(); }
  bool is_zero() const;

  AmbientWeight operator+(const AmbientWeight& o) const;
  AmbientWeight operator-(const AmbientWeight& o) const;
  AmbientWeight operator-() const;
  AmbientWeight scaled(const Rat& s) const;

  bool operator==(const AmbientWeight& o) const { return c_ == o.c_; }
  bool operator!=(const AmbientWeight& o) const { return !(*this == o); }
  bool operator<(const AmbientWeight& o) const;  // lex on coordinates

  // per-block tuple text, e.g. "[(2,-1,-1)]"
  std::string str() const;

 private:
  GroupShape shape_;
  std::vector<Rat> c_;
};

// i-th basis character of factor k in sum-zero coordinates:
// n e_i - (1,...,1) in its block, zero elsewhere. Indices are 0-based.
AmbientWeight epsilon(const GroupShape& shape, std::size_t factor, std::size_t i);

// W-invariant inner product: the blockwise standard dot product.
Rat pair(const AmbientWeight& a, const AmbientWeight& b);

Rat norm2(const AmbientWeight& a);

// All roots e_i - e_j, i != j, within each block.
std::vector<AmbientWeight> roots(const GroupShape& shape);

// Unique W-orbit representative: each block sorted non-increasing.
AmbientWeight weyl_canonical(const AmbientWeight& a);

// One permutation per factor; acts by permuting block coordinates.
struct WeylElement {
  std::vector<std::vector<int>> perms;  // perms[k][i] = image of position i

  int sign() const;
  AmbientWeight apply(const AmbientWeight& a) const;

  static WeylElement identity(const GroupShape& shape);
  static std::vector<WeylElement> all(const GroupShape& shape);
  static WeylElement random(const GroupShape& shape, std::mt19937_64& rng);
};

// Root alpha_{ij} = eps_i - eps_j of one factor, by index.
struct RootIndex {
  std::size_t factor = 0;
  int i = 0, j = 0;  // i != j, 0-based

  bool operator==(const RootIndex& o) const {
    return factor == o.factor && i == o.i && j == o.j;
  }
  bool operator<(const RootIndex& o) const {
    if (factor != o.factor) return factor < o.factor;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

AmbientWeight root_weight(const GroupShape& shape, const RootIndex& r);
std::vector<RootIndex> root_indices(const GroupShape& shape);

// Membership in the Z-span of the epsilon vectors: integer coordinates,
// pairwise congruent mod n within each block.
bool is_integral(const AmbientWeight& a);

// Least positive n with n*a integral; a must be non-zero or the result is 1.
long n_min_integral(const AmbientWeight& a);

}  // namespace nullstrat

#endif
