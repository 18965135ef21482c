#ifndef NULLSTRAT_STRATA_HPP
#define NULLSTRAT_STRATA_HPP

#include <optional>
#include <string>
#include <vector>

#include "nullstrat/polytope.hpp"
#include "nullstrat/repchar.hpp"

namespace nullstrat {

// A candidate stratum label c with its parabolic/Levi/unipotent root data
// and the half-space weight subsets of the module.
struct StratumCandidate {
  GroupShape shape;
  AmbientWeight c;  // non-zero; canonical representative when enumerated
  long n_min = 1;   // least n with n*c in the character lattice

  CharacterMultiset plus_weights;  // <w,c> >= <c,c>, with multiplicities
  CharacterMultiset zero_weights;  // <w,c> == <c,c>, with multiplicities

  std::vector<RootIndex> roots_P;  // <alpha,c> >= 0
  std::vector<RootIndex> roots_L;  // <alpha,c> == 0  (the roots of Z_c)
  std::vector<RootIndex> roots_U;  // <alpha,c> > 0
  int tprime_rank = 0;             // rank of T' = (ker(n c) cap T)^0

  StratumCandidate() : plus_weights(GroupShape({2})), zero_weights(GroupShape({2})) {}

  const std::vector<RootIndex>& zc_root_system() const { return roots_L; }
  // |roots_U| + dim V_{H+(c)} with weight multiplicities
  long long closure_dim() const;
};

// Partition the roots by the sign of <alpha, c> and slice the module
// weights by the half-space at c. The given c is used verbatim (not
// canonicalized), so explicitly supplied vectors keep their indexing.
StratumCandidate parabolic_data(const GroupShape& shape, const CharacterMultiset& module,
                                const AmbientWeight& c);

// Every candidate min-norm point: closest points of affine hulls of weight
// subsets that are non-zero and lie in the hull of their subset, W-deduped
// and re-verified as min-norm points of their plus-weight polytopes.
std::vector<StratumCandidate> enumerate_candidates(const GroupShape& shape,
                                                   const CharacterMultiset& module);

enum class Stratifying { yes, undetermined };

struct StratumVerdict {
  StratumCandidate candidate;
  Stratifying stratifying = Stratifying::undetermined;
  std::optional<long> witness_degree;  // degree of a non-zero Z_c-invariant
  long long closure_dim = 0;
  bool degenerate = false;  // empty zero-weight set; flagged, not decided
};

// Dimension of the degree-d Z_c-invariants on V_{H^0(c)}: the zero
// weights are restricted to X*(T') (projection along c) and the trivial
// multiplicity is taken by the alternating sum over the Levi Weyl group.
long long levi_invariant_dim(const StratumCandidate& cand, long d);

// Search d = 1..max_degree for a non-zero invariant; yes with the first
// witness degree, undetermined on exhaustion ("no" is not certifiable).
StratumVerdict is_stratifying(const StratumCandidate& cand, long max_degree);

struct NullconeReport {
  std::vector<StratumVerdict> verdicts;       // all candidates, deterministic order
  std::vector<long long> component_dims;      // maximal stratifying closures, ascending
  std::vector<std::size_t> component_indices; // indices of maximal candidates
};

NullconeReport nullcone_report(const GroupShape& shape, const CharacterMultiset& module,
                               long max_degree);

}  // namespace nullstrat

#endif
