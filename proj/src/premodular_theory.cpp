#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "braidforge/error.hpp"
#include "braidforge/premodular.hpp"

namespace braidforge {

namespace {

const CycloNum kOne(1);

std::string indices_str(const FusionSubring& k) {
  std::string s = "{";
  for (size_t i = 0; i < k.indices.size(); ++i) s += (i ? "," : "") + std::to_string(k.indices[i]);
  return s + "}";
}

FusionSubring meet_of(const FusionSubring& a, const FusionSubring& b) {
  FusionSubring out;
  std::set_intersection(a.indices.begin(), a.indices.end(), b.indices.begin(), b.indices.end(),
                        std::back_inserter(out.indices));
  return out;
}

FusionSubring join_of(const FusionRing& r, const FusionSubring& a, const FusionSubring& b) {
  std::vector<size_t> gens = a.indices;
  gens.insert(gens.end(), b.indices.begin(), b.indices.end());
  return subring_generated(r, gens);
}

std::string eq_witness(const CycloNum& lhs, const CycloNum& rhs) { return lhs.str() + " vs " + rhs.str(); }

Check exact_check(std::string name, std::string anchor, const CycloNum& lhs, const CycloNum& rhs) {
  return make_check(std::move(name), std::move(anchor), lhs == rhs, eq_witness(lhs, rhs));
}

struct UnionFind {
  std::vector<size_t> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  size_t find(size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(size_t a, size_t b) {
    a = find(a), b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

Matrix restricted_s_tilde(const PreModularDatum& d, const FusionSubring& k) {
  Matrix m;
  for (size_t i : k.indices) m.push_back(d.S_tilde()[i]);
  return m;
}

}  // namespace

FusionSubring centralizer_of(const PreModularDatum& d, const FusionSubring& k) {
  FusionSubring out;
  for (size_t v = 0; v < d.rank(); ++v) {
    bool central = true;
    for (size_t y : k.indices)
      if (!(d.s_tilde(y, v) == kOne)) {
        central = false;
        break;
      }
    if (central) out.indices.push_back(v);
  }
  return out;
}

CentralizerReport centralizer(const PreModularDatum& d, const FusionSubring& k) {
  CentralizerReport rep;
  rep.subring = k;
  rep.centralizer = centralizer_of(d, k);
  const FusionRing& r = d.ring();
  if (!(subring_generated(r, rep.centralizer.indices) == rep.centralizer))
    fail(ErrorKind::ClassificationBug, "centralizer of " + indices_str(k) + " is not a subring");
  UnionFind uf(d.rank());
  for (size_t z = 0; z < d.rank(); ++z)
    for (size_t w : rep.centralizer.indices)
      for (auto [y, mult] : r.product(z, w)) uf.unite(y, z);
  std::vector<std::vector<size_t>> comps(d.rank());
  for (size_t x = 0; x < d.rank(); ++x) comps[uf.find(x)].push_back(x);
  for (auto& c : comps)
    if (!c.empty()) rep.components.push_back(std::move(c));
  rep.rank_s_tilde = matrix_rank(restricted_s_tilde(d, k));
  if (rep.rank_s_tilde != static_cast<int64_t>(rep.components.size()))
    fail(ErrorKind::ClassificationBug, "rank of the restricted S~ is " + std::to_string(rep.rank_s_tilde) + " but there are " +
                                           std::to_string(rep.components.size()) + " centralizer components");
  return rep;
}

bool is_nondegenerate(const PreModularDatum& d) {
  const bool by_rank = matrix_rank(d.S_tilde()) == static_cast<int64_t>(d.rank());
  const bool by_centralizer = centralizer_of(d, whole_ring(d.ring())).size() == 1;
  if (by_rank != by_centralizer)
    fail(ErrorKind::ClassificationBug, "S~ rank test and centralizer test disagree on non-degeneracy");
  return by_rank;
}

std::vector<DichotomyEntry> dichotomy_check(const PreModularDatum& d, const FusionSubring& k) {
  std::vector<DichotomyEntry> out;
  for (size_t v = 0; v < d.rank(); ++v) {
    bool first = true;
    CycloNum sum;
    for (size_t y : k.indices) {
      first = first && d.s_tilde(y, v) == kOne;
      sum += d.dim(y) * d.dim(y) * d.s_tilde(y, v);
    }
    out.push_back({v, first ? 1 : sum.is_zero() ? 2 : 0});
  }
  return out;
}

std::vector<Check> mueger_report(const PreModularDatum& d, const FusionSubring& k, const FusionSubring& b,
                                 double tolerance) {
  const FusionRing& r = d.ring();
  const FusionSubring c = whole_ring(r);
  const FusionSubring kp = centralizer_of(d, k), bp = centralizer_of(d, b), cp = centralizer_of(d, c);
  auto dim = [&d](const FusionSubring& s) { return categorical_dim(d, s); };
  const std::string tag = " [D=" + indices_str(k) + ",B=" + indices_str(b) + "]";
  std::vector<Check> out;

  out.push_back(exact_check("dim(B^D')dim(D) = dim(D^B')dim(B)" + tag, "centralizer-dimension-balance",
                            dim(meet_of(b, kp)) * dim(k), dim(meet_of(k, bp)) * dim(b)));
  out.push_back(exact_check("dim(D)dim(D') = dim(C)dim(D^C')" + tag, "centralizer-dimension-product", dim(k) * dim(kp),
                            dim(c) * dim(meet_of(k, cp))));
  {
    FusionSubring kpp = centralizer_of(d, kp), expect = join_of(r, k, cp);
    out.push_back(make_check("D'' = D v C'" + tag, "double-centralizer", kpp == expect,
                             indices_str(kpp) + " vs " + indices_str(expect)));
  }
  out.push_back(exact_check("dim(D)dim(B) = dim(D v B)dim(D^B)" + tag, "diamond", dim(k) * dim(b),
                            dim(join_of(r, k, b)) * dim(meet_of(k, b))));
  {
    FPData fp = fp_dims(r, tolerance);
    double lhs = fp_dim(fp, k) * fp_dim(fp, kp), rhs = fp_dim(fp, c) * fp_dim(fp, meet_of(k, cp));
    std::ostringstream w;
    w.precision(12);
    w << lhs << " vs " << rhs;
    out.push_back(make_check("FPdim(D)FPdim(D') = FPdim(C)FPdim(D^C')" + tag, "fp-centralizer-dimension-product",
                             std::abs(lhs - rhs) <= tolerance * std::max(1.0, std::abs(rhs)), w.str()));
  }
  const std::string split_name = "D non-degenerate => dim(D)dim(D') = dim(C)" + tag;
  if (meet_of(k, kp).size() == 1)
    out.push_back(exact_check(split_name, "nondegenerate-splitting", dim(k) * dim(kp), dim(c)));
  else
    out.push_back(skipped_check(split_name, "nondegenerate-splitting", "D meets D' nontrivially"));
  return out;
}

FusionSubring adjoint_of(const FusionRing& r, const FusionSubring& k) {
  std::vector<size_t> gens;
  for (size_t y : k.indices)
    for (auto [z, mult] : r.product(y, r.dual(y))) gens.push_back(z);
  return subring_generated(r, gens);
}

FusionSubring commutator(const FusionRing& r, const FusionSubring& k) {
  std::vector<size_t> gens;
  for (size_t x = 0; x < r.rank(); ++x) {
    bool inside = true;
    for (auto [z, mult] : r.product(x, r.dual(x))) inside = inside && k.contains(z);
    if (inside) gens.push_back(x);
  }
  return subring_generated(r, gens);
}

FusionSubring projective_centralizer(const PreModularDatum& d, const FusionSubring& k) {
  const FusionRing& r = d.ring();
  FusionSubring direct;
  for (size_t x = 0; x < r.rank(); ++x) {
    bool ok = true;
    for (size_t y : k.indices)
      for (auto [z, mult] : r.product(y, r.dual(y))) ok = ok && d.s_tilde(z, x) == kOne;
    if (ok) direct.indices.push_back(x);
  }
  const FusionSubring via_adjoint = centralizer_of(d, adjoint_of(r, k));
  const FusionSubring via_commutator = commutator(r, centralizer_of(d, k));
  if (!(direct == via_adjoint) || !(direct == via_commutator))
    fail(ErrorKind::ClassificationBug, "projective centralizer of " + indices_str(k) + ": " + indices_str(direct) + ", " +
                                           indices_str(via_adjoint) + " and " + indices_str(via_commutator) + " differ");
  return direct;
}

SymmetryReport symmetric_and_isotropic(const PreModularDatum& d, const FusionSubring& k, const Limits& limits) {
  SymmetryReport out;
  out.symmetric = true;
  for (size_t x : k.indices)
    for (size_t y : k.indices) out.symmetric = out.symmetric && d.s_tilde(x, y) == kOne;
  out.isotropic = out.symmetric;
  for (size_t x : k.indices) out.isotropic = out.isotropic && d.theta(x).is_zero();
  if (const auto& po = d.pointed_origin()) {
    out.lagrangian = out.isotropic && centralizer_of(d, k) == k;
    for (const auto& s : isotropic_subgroups(po->form, limits))
      if (s.lagrangian) out.lagrangians.push_back(s.subgroup);
  }
  return out;
}

CycloNum gauss_sum(const PreModularDatum& d, const FusionSubring& k, int sign) {
  CycloNum acc;
  for (size_t i : k.indices) acc += CycloNum::root(d.theta(i).scaled(sign)) * d.dim(i) * d.dim(i);
  return acc;
}

GfpInvariants gfp_invariants(const PreModularDatum& d, double tolerance) {
  if (!is_nondegenerate(d)) fail(ErrorKind::Degenerate, "GFP invariants need a non-degenerate datum");
  const FusionRing& r = d.ring();
  FPSquareGrading sq = fp_square_grading(r, tolerance);  // throws NotWeaklyIntegral
  const Grading& gr = sq.grading;
  const FusionSubring integral{gr.component(gr.group.zero())};
  const FusionSubring a = centralizer_of(d, integral);

  std::vector<int> chi;
  for (size_t x : a.indices) {
    CycloNum v = CycloNum::root(d.theta(x)) * d.dim(x);
    if (v == kOne)
      chi.push_back(1);
    else if (v == CycloNum(-1))
      chi.push_back(-1);
    else
      fail(ErrorKind::ClassificationBug, "theta d of " + r.labels()[x] + " is " + v.str() + ", not +-1");
  }

  std::set<Element> image(gr.deg.begin(), gr.deg.end());
  std::vector<Element> solutions;
  for (const Element& x : image) {
    const std::vector<size_t> comp = gr.component(x);
    bool ok = true;
    for (size_t i = 0; i < a.indices.size() && ok; ++i) {
      const CycloNum& pairing = d.s_tilde(a.indices[i], comp.front());
      for (size_t y : comp)
        if (!(d.s_tilde(a.indices[i], y) == pairing))
          fail(ErrorKind::ClassificationBug, "pairing is not constant on a grading component");
      ok = pairing == CycloNum(static_cast<int64_t>(chi[i]));
    }
    if (ok) solutions.push_back(x);
  }
  if (solutions.size() != 1)
    fail(ErrorKind::ClassificationBug, std::to_string(solutions.size()) + " solutions for the class x");

  GfpInvariants out;
  for (size_t i = 0; i < sq.primes.size(); ++i)
    if (solutions[0][i]) out.x_class *= sq.primes[i];
  const double root_n = std::sqrt(static_cast<double>(out.x_class));
  const FPData fp = fp_dims(r, tolerance);
  for (size_t x : gr.component(solutions[0])) {
    double w = fp.fpdim[x] / root_n;
    double rounded = std::round(w);
    if (std::abs(w - rounded) > tolerance)
      fail(ErrorKind::NumericalFail, "FPdim(" + r.labels()[x] + ")/sqrt(n) is not an integer");
    CycloNum weight(static_cast<int64_t>(rounded));
    out.t_plus += weight * CycloNum::root(d.theta(x)) * d.dim(x);
    out.t_minus += weight * CycloNum::root(-d.theta(x)) * d.dim(x);
  }
  if (!(out.t_minus == out.t_plus.conj())) fail(ErrorKind::ClassificationBug, "T- is not the conjugate of T+");
  return out;
}

InvariantReport gauss_and_charge(const PreModularDatum& d, const Limits& limits, double tolerance) {
  InvariantReport rep;
  const FusionRing& r = d.ring();
  const FusionSubring c = whole_ring(r);
  rep.tau_plus = gauss_sum(d, c, 1);
  rep.tau_minus = gauss_sum(d, c, -1);
  rep.dim_total = categorical_dim(d, c);
  auto& checks = rep.checks;
  checks.push_back(exact_check("tau- = conj(tau+)", "gauss-conjugate", rep.tau_minus, rep.tau_plus.conj()));
  if (!rep.tau_minus.is_zero()) rep.charge_sq = rep.tau_plus / rep.tau_minus;

  for (size_t y = 0; y < d.rank(); ++y) {
    CycloNum lhs;
    for (size_t x = 0; x < d.rank(); ++x) lhs += CycloNum::root(d.theta(x)) * d.dim(x) * d.s(x, y);
    checks.push_back(exact_check("sum theta d s_XY = d(Y) theta_Y^-1 tau+ [Y=" + r.labels()[y] + "]", "december",
                                 lhs, d.dim(y) * CycloNum::root(-d.theta(y)) * rep.tau_plus));
  }

  const bool nondeg = is_nondegenerate(d);
  if (nondeg) {
    checks.push_back(exact_check("tau+ tau- = dim C", "gauss-modulus", rep.tau_plus * rep.tau_minus, rep.dim_total));
    checks.push_back(make_check("tau+/tau- is a root of unity", "charge-root-of-unity",
                                rep.charge_sq && rep.charge_sq->as_root_of_unity().has_value(),
                                rep.charge_sq ? rep.charge_sq->str() : "tau- = 0"));

    // Invertibles pair perfectly with the universal grading classes.
    const Grading ug = universal_grading(r, limits);
    const FusionSubring pt = pointed_part(r);
    std::set<std::vector<std::string>> rows;
    bool constant = true;
    for (size_t a : pt.indices) {
      std::vector<std::string> row;
      for (const Element& g : ug.group.elements()) {
        auto comp = ug.component(g);
        if (comp.empty()) continue;
        for (size_t y : comp) constant = constant && d.s_tilde(a, y) == d.s_tilde(a, comp.front());
        row.push_back(d.s_tilde(a, comp.front()).str());
      }
      rows.insert(std::move(row));
    }
    checks.push_back(make_check("invertibles pair perfectly with grading classes", "pairing-perfection",
                                constant && rows.size() == pt.size(),
                                std::to_string(rows.size()) + " distinct rows for " + std::to_string(pt.size()) +
                                    " invertibles"));
  }

  if (static_cast<int64_t>(r.rank()) > limits.rank_guard) {
    checks.push_back(skipped_check("tau(C) tau(D) = dim(D) tau(D') for all D", "generalized-multiplicativity",
                                   "rank exceeds rank_guard"));
  } else {
    for (const FusionSubring& k : all_subrings(r, limits).subrings) {
      const FusionSubring kp = centralizer_of(d, k);
      const std::string tag = " [D=" + indices_str(k) + "]";
      for (int sign : {1, -1})
        checks.push_back(exact_check(std::string("tau") + (sign > 0 ? "+" : "-") + "(C) tau" + (sign > 0 ? "-" : "+") +
                                         "(D) = dim(D) tau" + (sign > 0 ? "+" : "-") + "(D')" + tag,
                                     "generalized-multiplicativity", gauss_sum(d, c, sign) * gauss_sum(d, k, -sign),
                                     categorical_dim(d, k) * gauss_sum(d, kp, sign)));
      if (nondeg) {
        FusionSubring kpp = centralizer_of(d, kp);
        checks.push_back(make_check("D'' = D" + tag, "double-centralizer", kpp == k, indices_str(kpp)));
        if (symmetric_and_isotropic(d, k, limits).isotropic)
          for (int sign : {1, -1})
            checks.push_back(exact_check(std::string("tau") + (sign > 0 ? "+" : "-") + "(E') = tau(C)" + tag,
                                         "orthogonal-isotropic", gauss_sum(d, kp, sign), gauss_sum(d, c, sign)));
      }
    }
  }

  if (nondeg && is_weakly_integral(r, tolerance)) {
    rep.gfp = gfp_invariants(d, tolerance);
    checks.push_back(exact_check("T- = conj(T+)", "gfp-conjugate", rep.gfp->t_minus, rep.gfp->t_plus.conj()));
  }
  return rep;
}

std::vector<Check> full_report(const PreModularDatum& d, const Limits& limits, double tolerance) {
  std::vector<Check> out;
  out.push_back(make_check("datum identities (unit, duality, symmetry, Verlinde)", "datum-validity", true,
                           "rank " + std::to_string(d.rank())));
  const FusionRing& r = d.ring();
  if (static_cast<int64_t>(r.rank()) > limits.rank_guard) {
    out.push_back(skipped_check("subring lattice identities", "centralizer-rank", "rank exceeds rank_guard"));
  } else {
    const auto subrings = all_subrings(r, limits).subrings;
    for (const FusionSubring& k : subrings) {
      const std::string tag = " [D=" + indices_str(k) + "]";
      CentralizerReport cr = centralizer(d, k);
      out.push_back(make_check("rank S~_D = number of D'-components" + tag, "centralizer-rank", true,
                               std::to_string(cr.rank_s_tilde)));
      int bad = 0;
      for (const auto& e : dichotomy_check(d, k)) bad += e.branch == 0;
      out.push_back(make_check("centralizer dichotomy" + tag, "dichotomy", bad == 0, std::to_string(bad) + " violations"));
      FusionSubring pc = projective_centralizer(d, k);
      out.push_back(make_check("(D_ad)' = (D')^co" + tag, "projective-centralizer", true, indices_str(pc)));
      for (const FusionSubring& b : subrings)
        for (auto& c : mueger_report(d, k, b, tolerance)) out.push_back(std::move(c));
    }
  }
  for (auto& c : gauss_and_charge(d, limits, tolerance).checks) out.push_back(std::move(c));
  return out;
}

}  // namespace braidforge
