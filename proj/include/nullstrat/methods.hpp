#ifndef NULLSTRAT_METHODS_HPP
#define NULLSTRAT_METHODS_HPP

#include <optional>
#include <string>
#include <vector>

#include "nullstrat/repchar.hpp"
#include "nullstrat/tensorcalc.hpp"

namespace nullstrat {

// Exact named identity with verdict; ledger entries never carry tolerances.
struct LedgerEntry {
  std::string name;
  std::string expected, computed;
  bool pass = false;
  bool informational = false;
};

struct LedgerReport {
  std::string title;
  std::vector<LedgerEntry> entries;

  bool all_pass() const {
    for (const auto& e : entries) {
      if (!e.informational && !e.pass) return false;
    }
    return true;
  }
  void add(std::string name, std::string expected, std::string computed);
  void info(std::string name, std::string note);
};

// ---- double bundle search -----------------------------------------------

struct DoubleBundleCandidate {
  IrrLabel u;                        // dim U = dim W + 1
  std::vector<IrrLabel> w;           // multiset, sorted
  long long dim_u = 0;
  std::vector<long long> dim_w;
  std::vector<long long> hom_mults;  // mult of V in U* (x) W_i, each >= 1
  bool linearization_obstructed = false;
};

// All (U, W) with dim U = dim W + 1, dim P(V) > dim P(U), V contained in
// Hom(U, W_i) for every summand, with the center-character verdict for an
// equivariant O(1) x O(k) on P(V) x P(U).
std::vector<DoubleBundleCandidate> double_bundle_search(const IrrLabel& v, int w_max,
                                                        long long dim_cap);

// ---- 2-form trick -------------------------------------------------------

struct TwoFormReport {
  bool applicable = false;  // dim E odd
  long long dim_e = 0, dim_v = 0;
  long long containment_mult = 0;         // mult of V in Lambda^2(E*)
  std::optional<std::size_t> witness_rank; // rank of the supplied skew form
  std::optional<std::vector<Rat>> witness_kernel;
  long long level_slack = 0;               // dim V - dim E
  bool pass = false;
};

TwoFormReport two_form_check(const GroupShape& shape, const IrrLabel& e_label,
                             const IrrLabel& v_label, const std::optional<Sym2Wedge2>& witness);

// ---- Grassmannian stable rationality ------------------------------------

struct GrassmannianReport {
  bool clause_center = false;      // center character generates Z/p
  bool clause_codim = false;       // k <= dim E - dim G - 1
  bool clause_divisibility = false;  // p does not divide k
  bool clause_free_affine = false;   // Lie-algebra stabilizer 0 at a random point
  bool clause_free_projective = false;
  bool finite_stabilizers_certified = false;  // always false: one linear probe cannot decide
  long long dim_e = 0;
  long long grass_dim = 0;  // k (dim E - k)
  bool all_pass() const {
    return clause_center && clause_codim && clause_divisibility && clause_free_affine &&
           clause_free_projective;
  }
};

// p must be prime; the freeness probes need an SL3 kernel model and are
// seeded. k-subspaces of E under SL_p.
GrassmannianReport grassmannian_check(const IrrLabel& e_label, long k, long p,
                                      std::uint64_t seed);

// ---- covariant method ledger ---------------------------------------------

LedgerReport covariant_ledger(long d);

// ---- binary instability ---------------------------------------------------

struct BinaryInstability {
  bool unstable = false;
  long max_multiplicity = 0;
};

// coeffs[k] is the coefficient of x^k y^(d-k); max root multiplicity over
// P^1 by iterated gcd with derivatives, the point at infinity by the
// degree drop of f(x, 1).
BinaryInstability binary_instability(const std::vector<Rat>& coeffs);

// ---- zero loci of sections ------------------------------------------------

LedgerReport zero_loci_ledger(long k);

// ---- theta characteristic reduction ---------------------------------------

LedgerReport theta_ledger(long d);

}  // namespace nullstrat

#endif
