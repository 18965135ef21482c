#include "nullstrat/strata.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "nullstrat/linalg.hpp"
#include "nullstrat/parallel.hpp"

namespace nullstrat {

long long StratumCandidate::closure_dim() const {
  return static_cast<long long>(roots_U.size()) + plus_weights.dim();
}

StratumCandidate parabolic_data(const GroupShape& shape, const CharacterMultiset& module,
                                const AmbientWeight& c) {
  if (c.is_zero()) throw std::invalid_argument("parabolic_data: c must be non-zero");
  if (module.shape() != shape) throw std::invalid_argument("parabolic_data: shape mismatch");

  StratumCandidate cand;
  cand.shape = shape;
  cand.c = c;
  cand.n_min = n_min_integral(c);
  cand.tprime_rank = shape.rank() - 1;

  for (const auto& r : root_indices(shape)) {
    int sign = cmp(pair(root_weight(shape, r), c), Rat(0));
    if (sign >= 0) cand.roots_P.push_back(r);
    if (sign == 0) cand.roots_L.push_back(r);
    if (sign > 0) cand.roots_U.push_back(r);
  }

  Rat cc = norm2(c);
  CharacterMultiset plus(shape), zero(shape);
  for (const auto& [w, m] : module.entries()) {
    int v = cmp(pair(w, c), cc);
    if (v >= 0) plus.add(w, m);
    if (v == 0) zero.add(w, m);
  }
  cand.plus_weights = std::move(plus);
  cand.zero_weights = std::move(zero);
  return cand;
}

namespace {

SupportSet char_support(const CharacterMultiset& m) {
  std::vector<AmbientWeight> ws;
  for (const auto& [w, k] : m.entries()) ws.push_back(w);
  return SupportSet(m.shape(), std::move(ws));
}

void candidate_subsets(const GroupShape& shape, const std::vector<AmbientWeight>& pts,
                       std::vector<std::size_t>& chosen, std::size_t start, std::size_t max_size,
                       std::set<AmbientWeight>& found) {
  if (!chosen.empty()) {
    std::vector<AmbientWeight> sel;
    for (auto i : chosen) sel.push_back(pts[i]);
    AffineMinResult aff = affine_min_norm(shape, sel);
    bool convex = true;
    for (const auto& t : aff.coeffs) {
      if (cmp(t, Rat(0)) < 0) {
        convex = false;
        break;
      }
    }
    if (convex && !aff.point.is_zero()) found.insert(weyl_canonical(aff.point));
  }
  if (chosen.size() == max_size) return;
  for (std::size_t i = start; i < pts.size(); ++i) {
    // keep the chosen set affinely independent: the affine hulls (and
    // hence the closest points) of all subsets are already covered by
    // their independent spanning subsets
    std::vector<std::vector<Rat>> dirs;
    for (std::size_t t = 1; t < chosen.size(); ++t) {
      dirs.push_back((pts[chosen[t]] - pts[chosen[0]]).coords());
    }
    if (!chosen.empty()) {
      dirs.push_back((pts[i] - pts[chosen[0]]).coords());
      QField K;
      Mat<QField> m(K, dirs.size(), dirs[0].size());
      for (std::size_t a = 0; a < dirs.size(); ++a) {
        for (std::size_t b = 0; b < dirs[0].size(); ++b) m.at(a, b) = dirs[a][b];
      }
      if (rank(m) != dirs.size()) continue;
    }
    chosen.push_back(i);
    candidate_subsets(shape, pts, chosen, i + 1, max_size, found);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<StratumCandidate> enumerate_candidates(const GroupShape& shape,
                                                   const CharacterMultiset& module) {
  SupportSet supp = char_support(module);
  std::set<AmbientWeight> raw;
  std::vector<std::size_t> chosen;
  std::size_t max_size = static_cast<std::size_t>(shape.rank()) + 1;
  candidate_subsets(shape, supp.weights, chosen, 0, max_size, raw);

  std::vector<StratumCandidate> out;
  for (const auto& c : raw) {
    StratumCandidate cand = parabolic_data(shape, module, c);
    if (cand.plus_weights.empty()) continue;
    MinNormResult mn = min_norm_point(char_support(cand.plus_weights));
    if (mn.point != c) continue;  // not realizable as a stratum label
    out.push_back(std::move(cand));
  }
  std::sort(out.begin(), out.end(), [](const StratumCandidate& a, const StratumCandidate& b) {
    int v = cmp(norm2(a.c), norm2(b.c));
    if (v != 0) return v < 0;
    return a.c < b.c;
  });
  return out;
}

namespace {

// permutations of each Levi component, as full Weyl elements
std::vector<WeylElement> levi_weyl_group(const StratumCandidate& cand) {
  const GroupShape& shape = cand.shape;
  // connected components of the roots_L graph per factor
  std::vector<std::vector<int>> comp_id;  // per factor, position -> component
  std::vector<std::vector<std::vector<int>>> comps;  // factor -> list of components
  for (std::size_t k = 0; k < shape.num_factors(); ++k) {
    int n = shape.factors[k];
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    std::function<int(int)> find = [&](int a) {
      while (parent[static_cast<std::size_t>(a)] != a) {
        parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
        a = parent[static_cast<std::size_t>(a)];
      }
      return a;
    };
    for (const auto& r : cand.roots_L) {
      if (r.factor != k) continue;
      int a = find(r.i), b = find(r.j);
      if (a != b) parent[static_cast<std::size_t>(a)] = b;
    }
    std::vector<std::vector<int>> cs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cs[static_cast<std::size_t>(find(i))].push_back(i);
    std::vector<std::vector<int>> nonempty;
    for (auto& c : cs) {
      if (!c.empty()) nonempty.push_back(std::move(c));
    }
    comps.push_back(std::move(nonempty));
    (void)comp_id;
  }

  // cross product of per-component permutation choices
  std::vector<WeylElement> result{WeylElement::identity(shape)};
  for (std::size_t k = 0; k < shape.num_factors(); ++k) {
    for (const auto& comp : comps[k]) {
      if (comp.size() < 2) continue;
      std::vector<int> perm(comp.size());
      for (std::size_t i = 0; i < comp.size(); ++i) perm[i] = static_cast<int>(i);
      std::vector<std::vector<int>> perms;
      do {
        perms.push_back(perm);
      } while (std::next_permutation(perm.begin(), perm.end()));

      std::vector<WeylElement> next;
      next.reserve(result.size() * perms.size());
      for (const auto& base : result) {
        for (const auto& p : perms) {
          WeylElement w = base;
          for (std::size_t i = 0; i < comp.size(); ++i) {
            w.perms[k][static_cast<std::size_t>(comp[i])] = comp[static_cast<std::size_t>(p[i])];
          }
          next.push_back(std::move(w));
        }
      }
      result = std::move(next);
    }
  }
  return result;
}

// half-sum of the positive Levi roots, in ambient coordinates
AmbientWeight levi_rho(const StratumCandidate& cand) {
  const GroupShape& shape = cand.shape;
  std::vector<Rat> coords(shape.ambient_dim(), Rat(0));
  for (const auto& r : cand.roots_L) {
    if (r.i < r.j) {
      // positive root eps_i - eps_j ... choose i < j as positive; ambient
      // coords of eps_i - eps_j are n(e_i - e_j)
      std::size_t off = shape.block_offset(r.factor);
      int n = shape.factors[r.factor];
      coords[off + static_cast<std::size_t>(r.i)] += rat_of(n, 2);
      coords[off + static_cast<std::size_t>(r.j)] -= rat_of(n, 2);
    }
  }
  return AmbientWeight(shape, std::move(coords));
}

}  // namespace

long long levi_invariant_dim(const StratumCandidate& cand, long d) {
  if (d < 1) throw std::invalid_argument("levi_invariant_dim: degree must be >= 1");
  if (cand.zero_weights.empty()) return 0;

  // restrict to X*(T'): H^0(c) -> c-perp is w -> w - c
  CharacterMultiset m0(cand.shape);
  for (const auto& [w, k] : cand.zero_weights.entries()) m0.add(w - cand.c, k);

  CharacterMultiset symd = sym_power(m0, d);
  AmbientWeight rho = levi_rho(cand);
  long long total = 0;
  for (const auto& w : levi_weyl_group(cand)) {
    total += w.sign() * symd.mult(w.apply(rho) - rho);
  }
  if (total < 0) throw std::logic_error("levi_invariant_dim: negative multiplicity");
  return total;
}

StratumVerdict is_stratifying(const StratumCandidate& cand, long max_degree) {
  if (max_degree < 1) throw std::invalid_argument("is_stratifying: max_degree must be >= 1");
  StratumVerdict v;
  v.candidate = cand;
  v.closure_dim = cand.closure_dim();
  if (cand.zero_weights.empty()) {
    v.degenerate = true;
    v.stratifying = Stratifying::undetermined;
    return v;
  }
  for (long d = 1; d <= max_degree; ++d) {
    if (levi_invariant_dim(cand, d) >= 1) {
      v.stratifying = Stratifying::yes;
      v.witness_degree = d;
      return v;
    }
  }
  v.stratifying = Stratifying::undetermined;
  return v;
}

namespace {

std::set<AmbientWeight> plus_set(const StratumCandidate& c) {
  std::set<AmbientWeight> s;
  for (const auto& [w, m] : c.plus_weights.entries()) s.insert(w);
  return s;
}

// closure containment surrogate: some Weyl translate of the plus set of a
// sits inside the plus set of b
bool plus_contained(const GroupShape& shape, const std::set<AmbientWeight>& a,
                    const std::set<AmbientWeight>& b) {
  if (a.size() > b.size()) return false;
  for (const auto& w : WeylElement::all(shape)) {
    bool ok = true;
    for (const auto& x : a) {
      if (!b.count(w.apply(x))) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

NullconeReport nullcone_report(const GroupShape& shape, const CharacterMultiset& module,
                               long max_degree) {
  NullconeReport report;
  auto candidates = enumerate_candidates(shape, module);
  report.verdicts = parallel_map<StratumVerdict>(candidates.size(), [&](std::size_t i) {
    return is_stratifying(candidates[i], max_degree);
  });

  std::vector<std::size_t> strat;
  for (std::size_t i = 0; i < report.verdicts.size(); ++i) {
    if (report.verdicts[i].stratifying == Stratifying::yes) strat.push_back(i);
  }
  std::vector<std::set<AmbientWeight>> plus;
  for (auto i : strat) plus.push_back(plus_set(report.verdicts[i].candidate));

  for (std::size_t a = 0; a < strat.size(); ++a) {
    bool maximal = true;
    for (std::size_t b = 0; b < strat.size() && maximal; ++b) {
      if (a == b) continue;
      if (plus[a] == plus[b]) continue;
      if (plus_contained(shape, plus[a], plus[b])) maximal = false;
    }
    if (maximal) {
      report.component_indices.push_back(strat[a]);
      report.component_dims.push_back(report.verdicts[strat[a]].closure_dim);
    }
  }
  std::sort(report.component_dims.begin(), report.component_dims.end());
  report.component_dims.erase(
      std::unique(report.component_dims.begin(), report.component_dims.end()),
      report.component_dims.end());
  return report;
}

}  // namespace nullstrat
