#ifndef NULLSTRAT_REPCHAR_HPP
#define NULLSTRAT_REPCHAR_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nullstrat/lattice.hpp"

namespace nullstrat {

// Dominant labels, one vector of n_k - 1 non-negative integers per factor.
// Convention for an SL3 factor: (a, b) labels the module with highest
// weight a*omega_1 + b*omega_2, so (1,0) is the standard module C^3 and
// (0,1) its dual; duality is label reversal.
struct IrrLabel {
  std::vector<std::vector<long>> per_factor;

  IrrLabel() = default;
  explicit IrrLabel(std::vector<std::vector<long>> l) : per_factor(std::move(l)) {}
  static IrrLabel sl2(long a) { return IrrLabel(std::vector<std::vector<long>>{{a}}); }
  static IrrLabel sl3(long a, long b) { return IrrLabel(std::vector<std::vector<long>>{{a, b}}); }
  static IrrLabel single(std::vector<long> l) {
    return IrrLabel(std::vector<std::vector<long>>{std::move(l)});
  }

  bool operator==(const IrrLabel& o) const { return per_factor == o.per_factor; }
  bool operator<(const IrrLabel& o) const { return per_factor < o.per_factor; }
  std::string str() const;
};

void check_label(const GroupShape& shape, const IrrLabel& label);
IrrLabel dual_label(const GroupShape& shape, const IrrLabel& label);
AmbientWeight highest_weight(const GroupShape& shape, const IrrLabel& label);
// Inverse of highest_weight on dominant integral weights.
IrrLabel label_of_dominant(const AmbientWeight& w);

// Exact dimension by the Weyl product formula.
long long weyl_dim(const GroupShape& shape, const IrrLabel& label);

// Finite weight multiset with integer multiplicities. Genuine characters
// have all multiplicities positive; intermediate virtual characters from
// the Adams recursion may not.
class CharacterMultiset {
 public:
  explicit CharacterMultiset(GroupShape shape) : shape_(std::move(shape)) {}

  const GroupShape& shape() const { return shape_; }
  const std::map<AmbientWeight, long long>& entries() const { return m_; }
  bool empty() const { return m_.empty(); }
  std::size_t support_size() const { return m_.size(); }

  long long dim() const;
  long long mult(const AmbientWeight& w) const;
  void add(const AmbientWeight& w, long long k);
  bool is_effective() const;  // all multiplicities > 0

  bool operator==(const CharacterMultiset& o) const { return m_ == o.m_; }

  // sorted (weight, multiplicity) list for reproducible output
  std::string str() const;

 private:
  GroupShape shape_;
  std::map<AmbientWeight, long long> m_;
};

CharacterMultiset trivial_character(const GroupShape& shape);
// Standard module of one factor, trivial on the others.
CharacterMultiset standard_character(const GroupShape& shape, std::size_t factor);

// Full weight multiset of the irreducible module, via Freudenthal
// recursion per factor. Total dimension equals weyl_dim.
CharacterMultiset irr_character(const GroupShape& shape, const IrrLabel& label);

CharacterMultiset tensor(const CharacterMultiset& a, const CharacterMultiset& b);
CharacterMultiset dual_character(const CharacterMultiset& a);

// Adams/Newton recursion; multiplicities are asserted integral.
CharacterMultiset sym_power(const CharacterMultiset& a, long d);
CharacterMultiset ext_power(const CharacterMultiset& a, long d);

// Multiplicity of the irreducible V(label) in the character. Uses the
// alternating Weyl sum when the Weyl group is small and falls back to
// iterated highest-weight extraction otherwise.
long long mult_in(const IrrLabel& label, const CharacterMultiset& m);

// Multiplicity of V(label) in tensor(a, b) without materializing the
// product character.
long long mult_in_tensor(const IrrLabel& label, const CharacterMultiset& a,
                         const CharacterMultiset& b);

// Deterministic full decomposition by iterated extraction, largest
// constituent first (|mu+rho|^2 then label order).
std::vector<std::pair<IrrLabel, long long>> decompose(const CharacterMultiset& m);

// dim of degree-d invariants: mult of the trivial module in Sym^d.
long long invariant_dim(const CharacterMultiset& m, long d);

// Class of the highest weight in X*(T)/(root lattice) = Z/n_k, one
// residue per factor; for SL3 label (a,b) this is (a+2b) mod 3.
std::vector<long> center_character(const GroupShape& shape, const IrrLabel& label);

struct TorusInvariantBasis {
  std::vector<std::vector<Int>> exponents;  // lattice basis of invariant Laurent monomials
  long transcendence_degree = 0;
};

// Invariant Laurent monomials of a diagonal torus action with the given
// integer weight vectors (one per coordinate, each of length = torus rank).
TorusInvariantBasis diagonal_torus_invariants(const std::vector<std::vector<Int>>& weights);

}  // namespace nullstrat

#endif
