#include "nullstrat/methods.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace nullstrat {

void LedgerReport::add(std::string name, std::string expected, std::string computed) {
  LedgerEntry e;
  e.name = std::move(name);
  e.pass = expected == computed;
  e.expected = std::move(expected);
  e.computed = std::move(computed);
  entries.push_back(std::move(e));
}

void LedgerReport::info(std::string name, std::string note) {
  LedgerEntry e;
  e.name = std::move(name);
  e.computed = std::move(note);
  e.informational = true;
  e.pass = true;
  entries.push_back(std::move(e));
}

namespace {

const GroupShape kSl3({3});

std::vector<IrrLabel> sl3_labels_up_to(long long dim_cap) {
  std::vector<IrrLabel> out;
  for (long a = 0;; ++a) {
    if (weyl_dim(kSl3, IrrLabel::sl3(a, 0)) > dim_cap) break;
    for (long b = 0;; ++b) {
      IrrLabel lab = IrrLabel::sl3(a, b);
      if (weyl_dim(kSl3, lab) > dim_cap) break;
      out.push_back(lab);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

long sl3_center(const IrrLabel& l) { return center_character(kSl3, l)[0]; }

}  // namespace

std::vector<DoubleBundleCandidate> double_bundle_search(const IrrLabel& v, int w_max,
                                                        long long dim_cap) {
  if (w_max < 1) throw std::invalid_argument("double_bundle_search: w_max must be >= 1");
  long long dim_v = weyl_dim(kSl3, v);
  long v_center = sl3_center(v);

  auto labels = sl3_labels_up_to(dim_cap);
  std::map<long long, std::vector<IrrLabel>> by_dim;
  std::map<std::vector<std::vector<long>>, CharacterMultiset> chars;
  auto char_of = [&](const IrrLabel& l) -> const CharacterMultiset& {
    auto it = chars.find(l.per_factor);
    if (it == chars.end()) it = chars.emplace(l.per_factor, irr_character(kSl3, l)).first;
    return it->second;
  };
  for (const auto& l : labels) by_dim[weyl_dim(kSl3, l)].push_back(l);

  std::vector<DoubleBundleCandidate> found;
  for (const auto& u : labels) {
    long long dim_u = weyl_dim(kSl3, u);
    if (dim_v - 1 <= dim_u - 1) continue;  // dim P(V) > dim P(U)
    IrrLabel u_dual = dual_label(kSl3, u);
    const CharacterMultiset& u_dual_char = char_of(u_dual);
    long udual_center = sl3_center(u_dual);

    // V in U* (x) W_i forces the center character of W_i
    long w_center_needed = ((v_center - udual_center) % 3 + 3) % 3;

    // W multisets, non-decreasing in label order, dims summing to dim U - 1
    std::vector<IrrLabel> w_stack;
    std::vector<long long> wdims;
    std::function<void(std::size_t, long long, int)> rec = [&](std::size_t start, long long remaining,
                                                               int slots) {
      if (remaining == 0) {
        if (w_stack.empty()) return;
        DoubleBundleCandidate cand;
        cand.u = u;
        cand.w = w_stack;
        cand.dim_u = dim_u;
        cand.dim_w = wdims;
        for (const auto& wl : w_stack) {
          long long m = mult_in_tensor(v, u_dual_char, char_of(wl));
          if (m < 1) return;
          cand.hom_mults.push_back(m);
        }
        // an equivariant O(1) x O(k) needs center: chi(V*) + k chi(U*) = 0 mod 3
        long vstar = sl3_center(dual_label(kSl3, v));
        long ustar = sl3_center(dual_label(kSl3, u));
        bool solvable = false;
        for (long kk = 0; kk < 3; ++kk) {
          if (((vstar + kk * ustar) % 3 + 3) % 3 == 0) solvable = true;
        }
        cand.linearization_obstructed = !solvable;
        found.push_back(std::move(cand));
        return;
      }
      if (slots == 0) return;
      for (std::size_t i = start; i < labels.size(); ++i) {
        long long dw = weyl_dim(kSl3, labels[i]);
        if (dw > remaining) continue;
        // center prefilter: every summand needs the forced class
        if (sl3_center(labels[i]) != w_center_needed) continue;
        w_stack.push_back(labels[i]);
        wdims.push_back(dw);
        rec(i, remaining - dw, slots - 1);
        w_stack.pop_back();
        wdims.pop_back();
      }
    };
    rec(0, dim_u - 1, w_max);
  }
  return found;
}

TwoFormReport two_form_check(const GroupShape& shape, const IrrLabel& e_label,
                             const IrrLabel& v_label, const std::optional<Sym2Wedge2>& witness) {
  TwoFormReport rep;
  rep.dim_e = weyl_dim(shape, e_label);
  rep.dim_v = weyl_dim(shape, v_label);
  if (rep.dim_e % 2 == 0) {
    throw std::invalid_argument("two_form_check: dim E must be odd");
  }
  rep.applicable = true;
  CharacterMultiset e_dual = dual_character(irr_character(shape, e_label));
  rep.containment_mult = mult_in(v_label, ext_power(e_dual, 2));
  rep.level_slack = rep.dim_v - rep.dim_e;
  rep.pass = rep.containment_mult >= 1;
  if (witness) {
    SkewForm f = iota(*witness);
    if (static_cast<long long>(f.dim()) != rep.dim_e) {
      throw std::invalid_argument("two_form_check: witness dimension mismatch");
    }
    rep.witness_rank = f.rank();
    if (*rep.witness_rank == f.dim() - 1) {
      auto ker = f.kernel();
      if (ker.size() == 1) rep.witness_kernel = ker[0];
    } else {
      rep.pass = false;
    }
  }
  return rep;
}

GrassmannianReport grassmannian_check(const IrrLabel& e_label, long k, long p,
                                      std::uint64_t seed) {
  if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p))) {
    throw std::invalid_argument("grassmannian_check: p must be prime");
  }
  GroupShape shape({static_cast<int>(p)});
  GrassmannianReport rep;
  rep.dim_e = weyl_dim(shape, e_label);
  rep.grass_dim = k * (rep.dim_e - k);
  long cls = center_character(shape, e_label)[0];
  rep.clause_center = cls % p != 0;
  long long dim_g = p * p - 1;
  rep.clause_codim = k <= rep.dim_e - dim_g - 1;
  rep.clause_divisibility = k % p != 0;
  rep.finite_stabilizers_certified = false;

  if (p == 3 && e_label.per_factor.size() == 1 && e_label.per_factor[0].size() == 2) {
    // Lie-algebra freeness probe at a seeded random point of the kernel model
    QField Q;
    auto basis = realize_irreducible(Q, 3, static_cast<int>(e_label.per_factor[0][0]),
                                     static_cast<int>(e_label.per_factor[0][1]));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coeff(1, 97);
    PolyTensor<QField> v(Q, 3, static_cast<int>(e_label.per_factor[0][0]),
                         static_cast<int>(e_label.per_factor[0][1]));
    for (const auto& b : basis) v = v + b.scaled(Rat(coeff(rng)));
    rep.clause_free_affine = stabilizer_dim(v, false) == 0;
    rep.clause_free_projective = stabilizer_dim(v, true) == 0;
  }
  return rep;
}

LedgerReport covariant_ledger(long d) {
  LedgerReport rep;
  rep.title = "covariant method dimension ledger, d = " + std::to_string(d);
  auto binom = [](long n, long r) -> long long {
    if (n < 0 || r < 0 || r > n) return 0;
    long long v = 1;
    for (long i = 0; i < r; ++i) v = v * (n - i) / (i + 1);
    return v;
  };
  static const std::vector<long> unresolved{6, 7, 8, 11, 12, 14, 15, 16, 18, 20, 23, 24, 26, 32, 48};

  long long dim_pv = binom(d + 2, 2) - 1;
  rep.add("dim P(V(0," + std::to_string(d) + "))", std::to_string(dim_pv), std::to_string(dim_pv));

  bool in_range = (d % 3 == 1 && d >= 37) || (d % 3 == 2 && d >= 65);
  if (!in_range) {
    std::string note = "outside the covariant-method range";
    if (std::find(unresolved.begin(), unresolved.end(), d) != unresolved.end()) {
      note += "; rationality unresolved for this degree";
    } else if (d % 3 == 0) {
      note += "; degree divisible by 3 is handled by the double bundle method (d >= 210)";
    }
    rep.info("applicability", note);
    return rep;
  }

  if (d % 3 == 1) {
    long n = (d - 1) / 3;
    long long dim_ls = binom(n, 2);
    rep.add("dim L_S = dim x1^(2n+3) C[x]_{n-2}", std::to_string(binom(n - 2 + 2, 2)),
            std::to_string(dim_ls));
    rep.add("dim P(V(0,4))", "14", std::to_string(weyl_dim(kSl3, IrrLabel::sl3(0, 4)) - 1));
    long long slack = dim_pv - 14;
    rep.add("level condition: slack >= 8", "1", slack >= 8 ? "1" : "0");
  } else {
    long n = (d - 2) / 3;
    long long dim_lt = binom(n - 1, 2);
    rep.add("dim L_T = dim x1^(2n+5) C[x]_{n-3}", std::to_string(binom(n - 3 + 2, 2)),
            std::to_string(dim_lt));
    rep.add("dim P(V(0,8))", "44", std::to_string(weyl_dim(kSl3, IrrLabel::sl3(0, 8)) - 1));
    long long slack = dim_pv - 44;
    rep.add("level condition: slack >= 8", "1", slack >= 8 ? "1" : "0");
  }
  return rep;
}

namespace {

using Poly = std::vector<Rat>;  // coefficient of x^i at index i

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly derivative(const Poly& p) {
  Poly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * Rat(static_cast<long>(i)));
  trim(out);
  return out;
}

Poly poly_rem(Poly a, const Poly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    trim(a);
    if (!a.empty() && a.size() >= b.size() && a.back() == 0) trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rat lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

}  // namespace

BinaryInstability binary_instability(const std::vector<Rat>& coeffs) {
  bool nonzero = false;
  for (const auto& c : coeffs) nonzero |= (c != 0);
  if (coeffs.empty() || !nonzero) throw std::invalid_argument("binary_instability: zero form");
  long d = static_cast<long>(coeffs.size()) - 1;

  Poly f = coeffs;
  trim(f);
  long mult_infinity = d - (static_cast<long>(f.size()) - 1);  // multiplicity of [1:0]

  long finite_mult = 0;
  if (f.size() > 1) {
    // multiplicity >= m iff gcd(f, f', ..., f^(m-1)) is non-constant
    Poly g = f;
    Poly der = f;
    finite_mult = 1;
    while (true) {
      der = derivative(der);
      if (der.empty()) break;
      g = poly_gcd(g, der);
      if (g.size() <= 1) break;
      ++finite_mult;
    }
  }

  BinaryInstability out;
  out.max_multiplicity = std::max(mult_infinity, finite_mult);
  out.unstable = out.max_multiplicity >= d / 2 + 1;
  return out;
}

LedgerReport zero_loci_ledger(long k) {
  if (k < 0) throw std::invalid_argument("zero_loci_ledger: k must be >= 0");
  LedgerReport rep;
  rep.title = "zero loci of sections of T_P2(" + std::to_string(k) + ")";
  long c2 = chern_c2_tangent_twist(k);
  rep.add("c2(T_P2(k)) = 3 + 3k + k^2", std::to_string(3 + 3 * k + k * k), std::to_string(c2));
  if (k == 0) rep.add("c2 equals the Euler characteristic of P2", "3", std::to_string(c2));
  if (k == 1) {
    long long h0 = weyl_dim(kSl3, IrrLabel::sl3(1, 2));
    rep.add("dim H0(T_P2(1)) = dim V(1,2)", "15", std::to_string(h0));
    rep.add("c2", "7", std::to_string(c2));
    long long slack = h0 - 2 * c2;
    rep.add("slack dim H0 - 2 c2", "1", std::to_string(slack));
    rep.add("section-to-zeroes map birational (slack 1)", "1", slack == 1 ? "1" : "0");
  }
  return rep;
}

LedgerReport theta_ledger(long d) {
  if (d < 5 || d % 2 == 0) throw std::invalid_argument("theta_ledger: need odd d >= 5");
  LedgerReport rep;
  rep.title = "theta-characteristic reduction ledger, d = " + std::to_string(d);
  auto binom3 = [](long n) -> long long {
    if (n < 3) return 0;
    return static_cast<long long>(n) * (n - 1) * (n - 2) / 6;
  };
  long long via_section = 3 * (d + 1) * d / 2 - (3 * d - 1);
  long long via_quotient = binom3(d + 2) - binom3(d - 1);
  long long closed_form = (3 * d * d - 3 * d + 2) / 2;  // (3/2)d^2 - (3/2)d + 1
  rep.add("dim L via section count", std::to_string(closed_form), std::to_string(via_section));
  rep.add("dim L via Sym^3 quotient", std::to_string(closed_form), std::to_string(via_quotient));

  long long s1 = 3 * (d - 2) * (d - 3) / 2;  // Sym^2(F) (x) E
  long long s2 = 3 * (d - 3);                // F (x) Lambda^2(E)
  long long s3 = 6 * (d - 3);                // F (x) Sym^2(E)
  long long s4 = 10;                         // Sym^3(E)
  long long s5 = 8;                          // mixed Schur summand
  rep.add("summand dims", "[" + std::to_string(s1) + "," + std::to_string(s2) + "," +
                              std::to_string(s3) + "," + std::to_string(s4) + "," +
                              std::to_string(s5) + "]",
          "[" + std::to_string(s1) + "," + std::to_string(s2) + "," + std::to_string(s3) + "," +
              std::to_string(s4) + "," + std::to_string(s5) + "]");
  rep.add("selection: s1 + s3 + s4 = dim L", std::to_string(closed_form),
          std::to_string(s1 + s3 + s4));
  if (d >= 7) {
    long long margin = closed_form - (s2 + s3 + s4 + s5);  // (3/2)d^2 - (21/2)d + 10
    rep.add("margin (3/2)d^2 - (21/2)d + 10 > 0", "1", margin > 0 ? "1" : "0");
    rep.add("3(d-3) + 10 + 8 < 6d - 8", "1", 3 * (d - 3) + 18 < 6 * d - 8 ? "1" : "0");
  } else {
    rep.add("special d = 5 selection (9, 12, 10)", "31", std::to_string(s1 + s3 + s4));
  }
  return rep;
}

}  // namespace nullstrat
