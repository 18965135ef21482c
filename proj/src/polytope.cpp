#include "nullstrat/polytope.hpp"

#include <algorithm>
#include <stdexcept>

#include "nullstrat/linalg.hpp"

namespace nullstrat {

SupportSet::SupportSet(GroupShape s, std::vector<AmbientWeight> w)
    : shape(std::move(s)), weights(std::move(w)) {
  for (const auto& x : weights) {
    if (x.shape() != shape) throw std::invalid_argument("SupportSet: weight shape mismatch");
  }
  std::sort(weights.begin(), weights.end());
  weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
}

bool SupportSet::contains(const AmbientWeight& w) const {
  return std::binary_search(weights.begin(), weights.end(), w);
}

SupportSet support(const GroupShape& shape, const WeightVector& v) {
  std::vector<AmbientWeight> ws;
  for (const auto& [w, c] : v) {
    if (c != 0) ws.push_back(w);
  }
  if (ws.empty()) throw std::invalid_argument("support: zero vector");
  return SupportSet(shape, std::move(ws));
}

AffineMinResult affine_min_norm(const GroupShape& shape, const std::vector<AmbientWeight>& pts) {
  if (pts.empty()) throw std::invalid_argument("affine_min_norm: empty point set");
  std::size_t k = pts.size();
  // KKT system: G lambda = mu * 1, sum lambda = 1
  QField K;
  Mat<QField> m(K, k + 1, k + 2);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) m.at(i, j) = pair(pts[i], pts[j]);
    m.at(i, k) = Rat(-1);  // -mu column
    m.at(i, k + 1) = Rat(0);
  }
  for (std::size_t j = 0; j < k; ++j) m.at(k, j) = Rat(1);
  m.at(k, k) = Rat(0);
  m.at(k, k + 1) = Rat(1);

  Mat<QField> lhs(K, k + 1, k + 1);
  std::vector<Rat> rhs(k + 1);
  for (std::size_t i = 0; i <= k; ++i) {
    for (std::size_t j = 0; j <= k; ++j) lhs.at(i, j) = m.at(i, j);
    rhs[i] = m.at(i, k + 1);
  }
  auto sol = solve(lhs, rhs);
  if (!sol) throw std::logic_error("affine_min_norm: inconsistent KKT system");
  std::vector<Rat> coeffs(sol->begin(), sol->begin() + static_cast<long>(k));
  AmbientWeight point = AmbientWeight::zero(shape);
  for (std::size_t i = 0; i < k; ++i) point = point + pts[i].scaled(coeffs[i]);
  return {std::move(point), std::move(coeffs)};
}

MinNormResult min_norm_point(const SupportSet& s) {
  if (s.size() == 0) throw std::invalid_argument("min_norm_point: empty support");
  const auto& P = s.weights;

  // Wolfe's method with exact rational arithmetic. The corral stays
  // affinely independent; ties in the linear minimization broken by the
  // fixed weight order.
  std::size_t start = 0;
  for (std::size_t i = 1; i < P.size(); ++i) {
    if (cmp(norm2(P[i]), norm2(P[start])) < 0) start = i;
  }
  std::vector<std::size_t> corral{start};
  std::vector<Rat> lambda{Rat(1)};
  AmbientWeight x = P[start];

  for (long guard = 0; guard < 100000; ++guard) {
    // linear minimization oracle
    std::size_t q = 0;
    Rat best;
    for (std::size_t i = 0; i < P.size(); ++i) {
      Rat v = pair(x, P[i]);
      if (i == 0 || cmp(v, best) < 0) {
        best = v;
        q = i;
      }
    }
    if (cmp(best, norm2(x)) >= 0) break;  // exact optimality
    if (std::find(corral.begin(), corral.end(), q) != corral.end()) {
      throw std::logic_error("min_norm_point: corral re-entry");
    }
    corral.push_back(q);
    lambda.push_back(Rat(0));

    while (true) {
      std::vector<AmbientWeight> pts;
      pts.reserve(corral.size());
      for (auto i : corral) pts.push_back(P[i]);
      AffineMinResult aff = affine_min_norm(s.shape, pts);
      bool nonneg = true;
      for (const auto& c : aff.coeffs) {
        if (cmp(c, Rat(0)) < 0) {
          nonneg = false;
          break;
        }
      }
      if (nonneg) {
        // accept; drop members with exactly zero coefficient
        x = aff.point;
        std::vector<std::size_t> keep_c;
        std::vector<Rat> keep_l;
        for (std::size_t i = 0; i < corral.size(); ++i) {
          if (aff.coeffs[i] != 0) {
            keep_c.push_back(corral[i]);
            keep_l.push_back(aff.coeffs[i]);
          }
        }
        corral = std::move(keep_c);
        lambda = std::move(keep_l);
        break;
      }
      // step to the boundary of the simplex along lambda -> mu
      Rat t(1);
      bool have_t = false;
      for (std::size_t i = 0; i < corral.size(); ++i) {
        if (cmp(aff.coeffs[i], Rat(0)) < 0) {
          Rat ti = lambda[i] / (lambda[i] - aff.coeffs[i]);
          if (!have_t || cmp(ti, t) < 0) {
            t = ti;
            have_t = true;
          }
        }
      }
      if (!have_t) throw std::logic_error("min_norm_point: no blocking coefficient");
      std::vector<std::size_t> next_corral;
      std::vector<Rat> next_lambda;
      for (std::size_t i = 0; i < corral.size(); ++i) {
        Rat li = lambda[i] * (Rat(1) - t) + aff.coeffs[i] * t;
        if (li != 0) {
          next_corral.push_back(corral[i]);
          next_lambda.push_back(li);
        }
      }
      if (next_corral.size() == corral.size()) {
        throw std::logic_error("min_norm_point: line search removed nothing");
      }
      corral = std::move(next_corral);
      lambda = std::move(next_lambda);
      x = AmbientWeight::zero(s.shape);
      for (std::size_t i = 0; i < corral.size(); ++i) x = x + P[corral[i]].scaled(lambda[i]);
    }
  }

  MinNormResult out;
  out.point = x;
  out.barycentric.assign(P.size(), Rat(0));
  for (std::size_t i = 0; i < corral.size(); ++i) out.barycentric[corral[i]] = lambda[i];
  return out;
}

bool is_T_unstable(const GroupShape& shape, const WeightVector& v) {
  return !min_norm_point(support(shape, v)).is_zero();
}

namespace {

// orthonormal-free row basis of the span of dirs, via rref pivot rows
std::vector<std::vector<Rat>> row_space_basis(const std::vector<std::vector<Rat>>& dirs) {
  if (dirs.empty()) return {};
  QField K;
  Mat<QField> m(K, dirs.size(), dirs[0].size());
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    for (std::size_t j = 0; j < dirs[0].size(); ++j) m.at(i, j) = dirs[i][j];
  }
  auto pivots = rref(m);
  std::vector<std::vector<Rat>> basis;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    std::vector<Rat> row(m.cols);
    for (std::size_t j = 0; j < m.cols; ++j) row[j] = m.at(i, j);
    basis.push_back(std::move(row));
  }
  return basis;
}

std::vector<Rat> as_vec(const AmbientWeight& w) { return w.coords(); }

int affine_dim(const std::vector<AmbientWeight>& pts) {
  if (pts.empty()) return -1;
  std::vector<std::vector<Rat>> dirs;
  for (std::size_t i = 1; i < pts.size(); ++i) dirs.push_back(as_vec(pts[i] - pts[0]));
  return static_cast<int>(row_space_basis(dirs).size());
}

int linear_dim(const std::vector<AmbientWeight>& pts) {
  std::vector<std::vector<Rat>> dirs;
  for (const auto& p : pts) dirs.push_back(as_vec(p));
  return static_cast<int>(row_space_basis(dirs).size());
}

struct FaceCollector {
  const SupportSet& S;
  std::map<std::vector<std::size_t>, FaceDescriptor> found;
};

// Combine an outer supporting functional with one valid inside the outer
// face: u_outer + delta * u_inner supports the inner member set globally
// for a small enough exact delta > 0.
std::pair<AmbientWeight, Rat> combine_functionals(const SupportSet& S, const AmbientWeight& u_out,
                                                  const Rat& b_out,
                                                  const std::vector<std::size_t>& outer_members,
                                                  const AmbientWeight& u_in, const Rat& b_in) {
  Rat delta(1);
  bool bounded = false;
  std::vector<bool> in_outer(S.size(), false);
  for (auto i : outer_members) in_outer[i] = true;
  for (std::size_t i = 0; i < S.size(); ++i) {
    if (in_outer[i]) continue;
    Rat slack = b_out - pair(S.weights[i], u_out);  // > 0
    Rat d = pair(S.weights[i], u_in) - b_in;
    if (d > 0) {
      Rat cand = slack / (2 * d);
      if (!bounded || cmp(cand, delta) < 0) {
        delta = cand;
        bounded = true;
      }
    }
  }
  AmbientWeight u = u_out + u_in.scaled(delta);
  Rat b = b_out + delta * b_in;
  return {u, b};
}

// facets of the sub-polytope (or sub-cone) spanned by the given member
// indices; each as (member subset, local functional, local offset)
struct LocalFacet {
  std::vector<std::size_t> members;
  AmbientWeight functional;
  Rat offset;
};

std::vector<LocalFacet> local_facets(const SupportSet& S, const std::vector<std::size_t>& members,
                                     FaceMode mode) {
  std::vector<AmbientWeight> pts;
  for (auto i : members) pts.push_back(S.weights[i]);
  int d = mode == FaceMode::polytope ? affine_dim(pts) : linear_dim(pts);
  if (d < 1) return {};

  // direction-space basis of the current body
  std::vector<std::vector<Rat>> dirs;
  if (mode == FaceMode::polytope) {
    for (std::size_t i = 1; i < pts.size(); ++i) dirs.push_back(as_vec(pts[i] - pts[0]));
  } else {
    for (const auto& p : pts) dirs.push_back(as_vec(p));
  }
  auto basis = row_space_basis(dirs);  // size d

  std::size_t need = static_cast<std::size_t>(d) - (mode == FaceMode::polytope ? 0 : 1);
  // polytope mode: choose d points spanning a hyperplane of the affine hull
  // cone mode: choose d-1 generators spanning a hyperplane through 0
  std::vector<LocalFacet> out;
  std::map<std::vector<std::size_t>, bool> seen;

  std::vector<std::size_t> pick(need ? need : 0);
  std::size_t npts = pts.size();
  QField K;

  auto try_subset = [&](const std::vector<std::size_t>& sub) {
    // constraints on u = sum c_l basis_l
    std::vector<std::vector<Rat>> cons;
    if (mode == FaceMode::polytope) {
      for (std::size_t t = 1; t < sub.size(); ++t) {
        cons.push_back(as_vec(pts[sub[t]] - pts[sub[0]]));
      }
    } else {
      for (auto t : sub) cons.push_back(as_vec(pts[t]));
    }
    Mat<QField> m(K, cons.size(), basis.size());
    for (std::size_t i = 0; i < cons.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        Rat acc(0);
        for (std::size_t t = 0; t < cons[i].size(); ++t) acc += cons[i][t] * basis[j][t];
        m.at(i, j) = acc;
      }
    }
    auto ker = kernel_basis(m);
    if (ker.size() != 1) return;  // subset does not span a hyperplane
    std::vector<Rat> u_coords(S.shape.ambient_dim(), Rat(0));
    for (std::size_t j = 0; j < basis.size(); ++j) {
      for (std::size_t t = 0; t < u_coords.size(); ++t) u_coords[t] += ker[0][j] * basis[j][t];
    }
    // the functional need not be sum-zero per block; project it (pairing
    // with sum-zero weights is unchanged by the all-ones components)
    for (std::size_t k = 0; k < S.shape.num_factors(); ++k) {
      std::size_t off = S.shape.block_offset(k);
      int n = S.shape.factors[k];
      Rat mean(0);
      for (int i = 0; i < n; ++i) mean += u_coords[off + static_cast<std::size_t>(i)];
      mean /= n;
      for (int i = 0; i < n; ++i) u_coords[off + static_cast<std::size_t>(i)] -= mean;
    }
    AmbientWeight u(S.shape, std::move(u_coords));
    if (u.is_zero()) return;
    Rat beta = mode == FaceMode::polytope ? pair(pts[sub[0]], u) : Rat(0);
    int side = 0;
    for (const auto& p : pts) {
      int c = cmp(pair(p, u), beta);
      if (c == 0) continue;
      if (side == 0) {
        side = c;
      } else if (side != c) {
        return;  // not supporting
      }
    }
    if (side == 0) return;  // everything on the hyperplane; not proper
    if (side > 0) {
      u = -u;
      beta = -beta;
    }
    LocalFacet f;
    f.functional = u;
    f.offset = beta;
    for (std::size_t i = 0; i < npts; ++i) {
      if (pair(pts[i], u) == beta) f.members.push_back(members[i]);
    }
    if (!seen.emplace(f.members, true).second) return;
    out.push_back(std::move(f));
  };

  // iterate over all `need`-subsets of the local points
  if (need == 0) return out;
  std::vector<std::size_t> idx(need);
  for (std::size_t i = 0; i < need; ++i) idx[i] = i;
  if (need > npts) return out;
  while (true) {
    try_subset(idx);
    std::size_t k = need;
    while (k > 0) {
      --k;
      if (idx[k] + (need - k) < npts) {
        ++idx[k];
        for (std::size_t j = k + 1; j < need; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (k == 0) return out;
    }
  }
}

void explore_faces(FaceCollector& ctx, const std::vector<std::size_t>& members,
                   const AmbientWeight& u, const Rat& beta, FaceMode mode) {
  if (ctx.found.count(members)) return;
  std::vector<AmbientWeight> pts;
  for (auto i : members) pts.push_back(ctx.S.weights[i]);
  FaceDescriptor fd;
  fd.functional = u;
  fd.offset = beta;
  fd.members = members;
  fd.dim = mode == FaceMode::polytope ? affine_dim(pts) : linear_dim(pts);
  ctx.found.emplace(members, fd);
  for (const auto& lf : local_facets(ctx.S, members, mode)) {
    auto [gu, gb] = combine_functionals(ctx.S, u, beta, members, lf.functional, lf.offset);
    explore_faces(ctx, lf.members, gu, gb, mode);
  }
}

}  // namespace

std::vector<FaceDescriptor> faces(const SupportSet& s, FaceMode mode) {
  if (s.size() == 0) throw std::invalid_argument("faces: empty support");
  FaceCollector ctx{s, {}};
  std::vector<std::size_t> all(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) all[i] = i;
  explore_faces(ctx, all, AmbientWeight::zero(s.shape), Rat(0), mode);

  std::vector<FaceDescriptor> out;
  for (auto& [mem, fd] : ctx.found) out.push_back(fd);

  if (mode == FaceMode::cone) {
    // apex face when the cone is pointed (0 outside the hull of generators)
    bool has_zero_gen = false;
    for (const auto& w : s.weights) has_zero_gen |= w.is_zero();
    if (!has_zero_gen && !min_norm_point(s).is_zero()) {
      // a strictly separating functional exists; reuse the min-norm point
      AmbientWeight c = min_norm_point(s).point;
      FaceDescriptor apex;
      apex.functional = -c;
      apex.offset = Rat(0);
      apex.dim = 0;
      out.push_back(apex);
    }
  }
  std::sort(out.begin(), out.end(), [](const FaceDescriptor& a, const FaceDescriptor& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.members < b.members;
  });
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> face_inclusions(
    const std::vector<FaceDescriptor>& fs) {
  auto subset = [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = 0; j < fs.size(); ++j) {
      if (i == j || !subset(fs[i].members, fs[j].members)) continue;
      bool covered = false;
      for (std::size_t k = 0; k < fs.size() && !covered; ++k) {
        if (k == i || k == j) continue;
        covered = subset(fs[i].members, fs[k].members) && subset(fs[k].members, fs[j].members);
      }
      if (!covered) edges.emplace_back(i, j);
    }
  }
  return edges;
}

SupportSet weights_in_halfspace(const SupportSet& s, const AmbientWeight& c, HalfspaceSel which) {
  if (c.is_zero()) throw std::invalid_argument("weights_in_halfspace: c must be non-zero");
  Rat cc = norm2(c);
  std::vector<AmbientWeight> sel;
  for (const auto& w : s.weights) {
    int cmp_v = cmp(pair(w, c), cc);
    if (which == HalfspaceSel::plus ? cmp_v >= 0 : cmp_v == 0) sel.push_back(w);
  }
  return SupportSet(s.shape, std::move(sel));
}

}  // namespace nullstrat
