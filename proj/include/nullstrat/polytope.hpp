#ifndef NULLSTRAT_POLYTOPE_HPP
#define NULLSTRAT_POLYTOPE_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "nullstrat/lattice.hpp"

namespace nullstrat {

// Finite weight set without multiplicities, kept sorted for determinism.
struct SupportSet {
  GroupShape shape;
  std::vector<AmbientWeight> weights;

  SupportSet() = default;
  SupportSet(GroupShape s, std::vector<AmbientWeight> w);

  std::size_t size() const { return weights.size(); }
  bool contains(const AmbientWeight& w) const;
  bool operator==(const SupportSet& o) const { return weights == o.weights; }
};

// Sparse vector in a weight-space basis.
using WeightVector = std::map<AmbientWeight, Rat>;

// Weights with non-zero coefficient; v must be non-zero.
SupportSet support(const GroupShape& shape, const WeightVector& v);

// Exact min-norm point of conv(S) with a convexity certificate.
struct MinNormResult {
  AmbientWeight point;
  // barycentric coefficients, aligned with S.weights; all >= 0, sum 1,
  // and sum_i coeff_i * S.weights[i] == point
  std::vector<Rat> barycentric;

  bool is_zero() const { return point.is_zero(); }
};

MinNormResult min_norm_point(const SupportSet& s);

// True iff the origin is not in the weight polytope of v.
bool is_T_unstable(const GroupShape& shape, const WeightVector& v);

enum class FaceMode { polytope, cone };

struct FaceDescriptor {
  AmbientWeight functional;  // supporting linear functional (zero for the whole body)
  Rat offset;                // members satisfy <w, functional> == offset,
                             // non-members <w, functional> < offset
  std::vector<std::size_t> members;  // indices into the SupportSet, sorted
  int dim = 0;                       // affine dim (polytope) / cone dim; apex has -1/0 markers

  bool operator==(const FaceDescriptor& o) const { return members == o.members; }
};

// All faces of conv(S) (polytope mode) or of the closed cone generated by
// S (cone mode). The improper face (the whole body) is included; the empty
// face is not; the apex {0} is included in cone mode when the cone is
// pointed. Sorted by (dim, members).
std::vector<FaceDescriptor> faces(const SupportSet& s, FaceMode mode);

// Inclusion edges of the face lattice: pairs (i, j) with face i a maximal
// proper subface of face j.
std::vector<std::pair<std::size_t, std::size_t>> face_inclusions(
    const std::vector<FaceDescriptor>& fs);

enum class HalfspaceSel { plus, zero };

// Subset with <w, c> >= <c, c> (plus) or == <c, c> (zero); c must be nonzero.
SupportSet weights_in_halfspace(const SupportSet& s, const AmbientWeight& c, HalfspaceSel which);

// Closest point of the affine hull of the given points to the origin,
// with its (unique when the points are affinely independent) affine
// coordinates. Shared by the min-norm inner loop and used directly by the
// candidate enumeration in the strata module.
struct AffineMinResult {
  AmbientWeight point;
  std::vector<Rat> coeffs;  // affine coefficients, sum 1
};
AffineMinResult affine_min_norm(const GroupShape& shape, const std::vector<AmbientWeight>& pts);

}  // namespace nullstrat

#endif
