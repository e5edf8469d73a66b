#include "braidforge/qform.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "braidforge/error.hpp"
#include "numtheory.hpp"

namespace braidforge {

PreMetricGroup PreMetricGroup::unchecked(FinAbGroup group, std::vector<RootExp> values) {
  PreMetricGroup m;
  m.group_ = std::move(group);
  m.values_ = std::move(values);
  return m;
}

PreMetricGroup PreMetricGroup::validate(FinAbGroup group, std::vector<RootExp> values) {
  const int64_t n = group.order();
  if (static_cast<int64_t>(values.size()) != n)
    fail(ErrorKind::SchemaError,
         "value table has " + std::to_string(values.size()) + " entries, expected " + std::to_string(n));
  PreMetricGroup m = unchecked(std::move(group), std::move(values));
  const FinAbGroup& g = m.group_;
  if (!m.values_[0].is_zero()) fail(ErrorKind::NotNormalized, "q(0) = " + m.values_[0].str());
  for (int64_t x = 0; x < n; ++x)
    if (m.values_[g.neg_index(x)] != m.values_[x])
      fail(ErrorKind::NotEven, "q(-g) != q(g) at g = " + to_string(g.element_at(x)) + ": " +
                                   m.values_[g.neg_index(x)].str() + " vs " + m.values_[x].str());
  // Additivity of b in the first argument along each generator implies biadditivity.
  for (size_t i = 0; i < g.rank(); ++i) {
    int64_t e = g.index_of(g.generator(i));
    for (int64_t x = 0; x < n; ++x)
      for (int64_t y = 0; y < n; ++y)
        if (m.b(g.add_index(x, e), y) != m.b(x, y) + m.b(e, y))
          fail(ErrorKind::NotQuadratic, "polarization not additive at g = " + to_string(g.element_at(x)) +
                                            ", h = " + to_string(g.element_at(y)) + ", generator " +
                                            std::to_string(i));
  }
  return m;
}

Bicharacter::Bicharacter(const PreMetricGroup& m) : group_(m.group()) {
  const int64_t n = group_.order();
  table_.resize(n * n);
  for (int64_t x = 0; x < n; ++x)
    for (int64_t y = 0; y < n; ++y) table_[x * n + y] = m.b(x, y);
}

Bicharacter bicharacter(const PreMetricGroup& m) { return Bicharacter(m); }

const char* to_string(Degeneracy d) {
  switch (d) {
    case Degeneracy::nondegenerate: return "nondegenerate";
    case Degeneracy::slightly_degenerate: return "slightly_degenerate";
    case Degeneracy::degenerate_other: return "degenerate_other";
  }
  return "?";
}

namespace {

std::vector<int64_t> generator_indices(const FinAbGroup& g) {
  std::vector<int64_t> out;
  for (size_t i = 0; i < g.rank(); ++i) out.push_back(g.index_of(g.generator(i)));
  return out;
}

std::vector<int64_t> generator_indices(const Subgroup& h) {
  std::vector<int64_t> out;
  for (const Element& e : h.generators()) out.push_back(h.parent().index_of(e));
  return out;
}

Subgroup orthogonal_to(const PreMetricGroup& m, const std::vector<int64_t>& gens) {
  std::vector<int64_t> out;
  for (int64_t x = 0; x < m.order(); ++x) {
    bool ok = true;
    for (int64_t g : gens)
      if (!m.b(x, g).is_zero()) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return Subgroup(m.group(), std::move(out));
}

struct QuotientData {
  PreMetricGroup form;
  Identified id;
  std::vector<int64_t> coset_index;  // ambient index -> quotient index, -1 outside H^perp
};

QuotientData quotient_data(const PreMetricGroup& m, const Subgroup& h) {
  if (!(h.parent() == m.group())) fail(ErrorKind::NotASubgroup, "subgroup of a different group");
  if (!is_isotropic(m, h)) fail(ErrorKind::NotIsotropic, "quotient_form needs an isotropic subgroup");
  Subgroup perp = orthogonal_complement(m, h);
  QuotientData out;
  out.id = identify_quotient(m.group(), perp, h);
  out.coset_index.assign(m.order(), -1);
  std::vector<RootExp> values(out.id.group.order());
  for (int64_t i = 0; i < out.id.group.order(); ++i) {
    int64_t rep = out.id.element_images[i];
    values[i] = m.q(rep);
    for (int64_t x : h.members()) {
      int64_t y = m.group().add_index(rep, x);
      out.coset_index[y] = i;
      if (m.q(y) != values[i]) fail(ErrorKind::ClassificationBug, "form not constant on a coset of H");
    }
  }
  out.form = PreMetricGroup::unchecked(out.id.group, std::move(values));
  return out;
}

}  // namespace

DegeneracyClass degeneracy(const PreMetricGroup& m) {
  Subgroup rad = orthogonal_to(m, generator_indices(m.group()));
  Degeneracy tag = Degeneracy::degenerate_other;
  if (rad.is_trivial())
    tag = Degeneracy::nondegenerate;
  else if (rad.size() == 2 && m.q(rad.members()[1]) == RootExp(1, 2))
    tag = Degeneracy::slightly_degenerate;
  return {tag, rad};
}

bool is_metric(const PreMetricGroup& m) { return degeneracy(m).tag == Degeneracy::nondegenerate; }

bool is_anisotropic(const PreMetricGroup& m) {
  for (int64_t x = 1; x < m.order(); ++x)
    if (m.q(x).is_zero()) return false;
  return true;
}

bool is_isotropic(const PreMetricGroup& m, const Subgroup& h) {
  for (int64_t x : h.members())
    if (!m.q(x).is_zero()) return false;
  return true;
}

Subgroup orthogonal_complement(const PreMetricGroup& m, const Subgroup& h) {
  return orthogonal_to(m, generator_indices(h));
}

std::vector<IsotropicSubgroup> isotropic_subgroups(const PreMetricGroup& m, const Limits& limits) {
  const FinAbGroup& g = m.group();
  if (g.order() > limits.enum_guard)
    fail(ErrorKind::EnumerationLimit, "|G| = " + std::to_string(g.order()) + " exceeds enumeration guard");
  std::vector<int64_t> isotropic_elements;
  for (int64_t x = 1; x < g.order(); ++x)
    if (m.q(x).is_zero()) isotropic_elements.push_back(x);

  struct Node {
    Subgroup h;
    std::vector<int64_t> gens;
    bool maximal = true;
  };
  std::vector<Node> nodes{{trivial_subgroup(g), {}, true}};
  std::set<std::vector<int64_t>> seen{{0}};
  for (size_t i = 0; i < nodes.size(); ++i) {
    for (int64_t x : isotropic_elements) {
      if (nodes[i].h.contains_index(x)) continue;
      bool orthogonal = true;
      for (int64_t gen : nodes[i].gens)
        if (!m.b(x, gen).is_zero()) {
          orthogonal = false;
          break;
        }
      if (!orthogonal) continue;
      nodes[i].maximal = false;
      std::vector<int64_t> gens = nodes[i].gens;
      gens.push_back(x);
      Subgroup j = join(nodes[i].h, span_indices(g, {x}));
      if (seen.insert(j.members()).second) {
        nodes.push_back({std::move(j), std::move(gens), true});
        if (static_cast<int64_t>(nodes.size()) > limits.max_subgroups)
          fail(ErrorKind::EnumerationLimit, "isotropic subgroup count exceeds cap");
      }
    }
  }
  std::vector<IsotropicSubgroup> out;
  for (auto& n : nodes) {
    bool lagrangian = orthogonal_to(m, n.gens).size() == n.h.size();
    out.push_back({std::move(n.h), n.maximal, lagrangian});
  }
  std::sort(out.begin(), out.end(),
            [](const IsotropicSubgroup& a, const IsotropicSubgroup& b) { return subgroup_less(a.subgroup, b.subgroup); });
  return out;
}

Subgroup greedy_maximal_isotropic(const PreMetricGroup& m) {
  const FinAbGroup& g = m.group();
  std::vector<int64_t> members{0}, gens;
  std::vector<char> mask(g.order(), 0);
  mask[0] = 1;
  for (int64_t x = 1; x < g.order(); ++x) {
    if (mask[x] || !m.q(x).is_zero()) continue;
    bool orthogonal = true;
    for (int64_t gen : gens)
      if (!m.b(x, gen).is_zero()) {
        orthogonal = false;
        break;
      }
    if (!orthogonal) continue;
    gens.push_back(x);
    Subgroup j = span_indices(g, gens);
    members = j.members();
    std::fill(mask.begin(), mask.end(), 0);
    for (int64_t y : members) mask[y] = 1;
  }
  return Subgroup(g, std::move(members));
}

PreMetricGroup quotient_form(const PreMetricGroup& m, const Subgroup& h) { return quotient_data(m, h).form; }

PreMetricGroup anisotropic_reduction(const PreMetricGroup& m) {
  return quotient_form(m, greedy_maximal_isotropic(m));
}

Core core(const PreMetricGroup& m, const Limits& limits, bool with_gamma) {
  const Subgroup* best = nullptr;
  auto iso = isotropic_subgroups(m, limits);
  for (const auto& s : iso)
    if (s.maximal && (!best || s.subgroup.members() < best->members())) best = &s.subgroup;
  Core out;
  out.used = *best;
  QuotientData qd = quotient_data(m, out.used);
  out.form = qd.form;
  if (!with_gamma || m.order() > limits.aut_guard) return out;
  out.gamma_computed = true;
  std::vector<int64_t> hgens = generator_indices(out.used);
  for (const GroupHom& s : form_automorphisms(m, limits)) {
    bool stabilizes = true;
    for (int64_t x : hgens)
      if (!out.used.contains_index(s.apply_index(x))) {
        stabilizes = false;
        break;
      }
    if (!stabilizes) continue;
    std::vector<Element> imgs;
    for (int64_t rep : qd.id.generator_images)
      imgs.push_back(out.form.group().element_at(qd.coset_index.at(s.apply_index(rep))));
    GroupHom induced(out.form.group(), out.form.group(), std::move(imgs));
    if (std::find(out.gamma.begin(), out.gamma.end(), induced) == out.gamma.end()) out.gamma.push_back(induced);
  }
  return out;
}

namespace {

void check_aut_guard(const PreMetricGroup& m, const Limits& limits) {
  if (m.order() > limits.aut_guard)
    fail(ErrorKind::EnumerationLimit, "|G| = " + std::to_string(m.order()) + " exceeds automorphism guard");
}

IsoConstraints form_constraints(const PreMetricGroup& a, const PreMetricGroup& b, const std::vector<int64_t>& gens) {
  IsoConstraints c;
  c.allowed = [&a, &b, &gens](size_t i, int64_t y) { return b.q(y) == a.q(gens[i]); };
  c.compatible = [&a, &b, &gens](size_t i, int64_t y, size_t j, int64_t x) {
    return b.b(y, x) == a.b(gens[i], gens[j]);
  };
  return c;
}

GroupHom hom_from_indices(const FinAbGroup& src, const FinAbGroup& dst, const std::vector<int64_t>& imgs) {
  std::vector<Element> e;
  for (int64_t y : imgs) e.push_back(dst.element_at(y));
  return GroupHom(src, dst, std::move(e));
}

}  // namespace

std::optional<GroupHom> isomorphic(const PreMetricGroup& a, const PreMetricGroup& b, const Limits& limits) {
  check_aut_guard(a, limits);
  check_aut_guard(b, limits);
  if (!(a.group() == b.group())) return std::nullopt;
  std::vector<int64_t> gens = generator_indices(a.group());
  std::optional<GroupHom> found;
  search_isomorphisms(a.group(), b.group(), form_constraints(a, b, gens), [&](const std::vector<int64_t>& imgs) {
    found = hom_from_indices(a.group(), b.group(), imgs);
    return false;
  });
  return found;
}

std::vector<GroupHom> form_automorphisms(const PreMetricGroup& m, const Limits& limits) {
  check_aut_guard(m, limits);
  std::vector<int64_t> gens = generator_indices(m.group());
  std::vector<GroupHom> out;
  search_isomorphisms(m.group(), m.group(), form_constraints(m, m, gens), [&](const std::vector<int64_t>& imgs) {
    out.push_back(hom_from_indices(m.group(), m.group(), imgs));
    if (static_cast<int64_t>(out.size()) > limits.max_automorphisms)
      fail(ErrorKind::EnumerationLimit, "automorphism count exceeds cap");
    return true;
  });
  return out;
}

bool preserves_form(const PreMetricGroup& m, const GroupHom& f) {
  for (int64_t x = 0; x < m.order(); ++x)
    if (m.q(f.apply_index(x)) != m.q(x)) return false;
  return true;
}

PreMetricGroup direct_sum(const PreMetricGroup& a, const PreMetricGroup& b) {
  std::vector<int64_t> orders = a.group().orders();
  orders.insert(orders.end(), b.group().orders().begin(), b.group().orders().end());
  CanonicalForm cf = canonical_form(orders);
  const FinAbGroup& src = cf.iso.source();
  const size_t ka = a.group().rank();
  std::vector<RootExp> values(cf.group.order());
  for (int64_t idx = 0; idx < src.order(); ++idx) {
    Element x = src.element_at(idx);
    Element xa(x.begin(), x.begin() + ka), xb(x.begin() + ka, x.end());
    values[cf.group.index_of(cf.iso.apply(x))] = a.q(xa) + b.q(xb);
  }
  return PreMetricGroup::unchecked(cf.group, std::move(values));
}

PreMetricGroup restrict(const PreMetricGroup& m, const Subgroup& h) {
  Identified id = identify(h);
  std::vector<RootExp> values;
  values.reserve(id.element_images.size());
  for (int64_t x : id.element_images) values.push_back(m.q(x));
  return PreMetricGroup::unchecked(id.group, std::move(values));
}

PreMetricGroup negate(const PreMetricGroup& m) {
  std::vector<RootExp> values;
  for (const auto& v : m.values()) values.push_back(-v);
  return PreMetricGroup::unchecked(m.group(), std::move(values));
}

PreMetricGroup sylow_component(const PreMetricGroup& m, int64_t p) { return restrict(m, sylow(m.group(), p)); }

// ---------------------------------------------------------------- construction

PreMetricGroup form_from_parameters(const FinAbGroup& g, const std::vector<RootExp>& c, const std::vector<RootExp>& b) {
  const size_t k = g.rank();
  if (c.size() != k || b.size() != k * (k - (k ? 1 : 0)) / 2)
    fail(ErrorKind::BadParameter, "wrong number of form parameters");
  int64_t den = 1;
  for (const auto& r : c) den = std::lcm(den, r.den());
  for (const auto& r : b) den = std::lcm(den, r.den());
  for (size_t i = 0; i < k; ++i) {
    int64_t n = g.orders()[i];
    if (!c[i].scaled(n * n).is_zero() || !c[i].scaled(2 * n).is_zero())
      fail(ErrorKind::BadParameter, "generator value incompatible with its order");
  }
  std::vector<int64_t> cn(k), bn(b.size());
  for (size_t i = 0; i < k; ++i) cn[i] = c[i].num() * (den / c[i].den());
  for (size_t t = 0; t < b.size(); ++t) bn[t] = b[t].num() * (den / b[t].den());
  {
    size_t t = 0;
    for (size_t i = 0; i < k; ++i)
      for (size_t j = i + 1; j < k; ++j, ++t)
        if (!b[t].scaled(std::gcd(g.orders()[i], g.orders()[j])).is_zero())
          fail(ErrorKind::BadParameter, "pairing value incompatible with generator orders");
  }
  std::vector<RootExp> values(g.order());
  for (int64_t idx = 0; idx < g.order(); ++idx) {
    Element x = g.element_at(idx);
    int64_t acc = 0;
    size_t t = 0;
    for (size_t i = 0; i < k; ++i) acc = nt::mod(acc + x[i] * x[i] % den * cn[i], den);
    for (size_t i = 0; i < k; ++i)
      for (size_t j = i + 1; j < k; ++j, ++t) acc = nt::mod(acc + x[i] * x[j] % den * bn[t], den);
    values[idx] = RootExp(acc, den);
  }
  return PreMetricGroup::unchecked(g, std::move(values));
}

namespace {

// Number of admissible values for each parameter, in the order c_0..c_{k-1},
// then b_ij for i < j row-major.
std::vector<int64_t> parameter_ranges(const FinAbGroup& g) {
  std::vector<int64_t> r;
  for (int64_t n : g.orders()) r.push_back(std::gcd(n * n, 2 * n));
  for (size_t i = 0; i < g.rank(); ++i)
    for (size_t j = i + 1; j < g.rank(); ++j) r.push_back(std::gcd(g.orders()[i], g.orders()[j]));
  return r;
}

}  // namespace

int64_t count_forms(const FinAbGroup& g) {
  int64_t total = 1;
  for (int64_t r : parameter_ranges(g)) total *= r;
  return total;
}

PreMetricGroup form_at(const FinAbGroup& g, int64_t index) {
  std::vector<int64_t> ranges = parameter_ranges(g);
  std::vector<RootExp> c, b;
  for (size_t t = 0; t < ranges.size(); ++t) {
    RootExp r(index % ranges[t], ranges[t]);
    index /= ranges[t];
    (t < g.rank() ? c : b).push_back(r);
  }
  return form_from_parameters(g, c, b);
}

std::vector<PreMetricGroup> all_forms(const FinAbGroup& g) {
  std::vector<PreMetricGroup> out;
  int64_t n = count_forms(g);
  out.reserve(n);
  for (int64_t i = 0; i < n; ++i) out.push_back(form_at(g, i));
  return out;
}

PreMetricGroup random_form(const FinAbGroup& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<int64_t> pick(0, count_forms(g) - 1);
  return form_at(g, pick(rng));
}

PreMetricGroup trivial_form() { return PreMetricGroup(); }

PreMetricGroup cyclic_form(int64_t n, const RootExp& q1) {
  FinAbGroup g({n});
  std::vector<RootExp> values;
  for (int64_t a = 0; a < n; ++a) values.push_back(q1.scaled(a * a));
  return PreMetricGroup::validate(g, std::move(values));
}

PreMetricGroup hyperbolic(int64_t p) {
  FinAbGroup g({p, p});
  std::vector<RootExp> values;
  for (int64_t x = 0; x < p; ++x)
    for (int64_t y = 0; y < p; ++y) values.emplace_back(x * y, p);
  return PreMetricGroup::validate(g, std::move(values));
}

namespace {

int legendre(int64_t a, int64_t p) {
  a = nt::mod(a, p);
  if (a == 0) return 0;
  int64_t r = 1, base = a, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

int64_t least_nonresidue(int64_t p) {
  for (int64_t a = 2; a < p; ++a)
    if (legendre(a, p) == -1) return a;
  fail(ErrorKind::BadParameter, "no quadratic non-residue");
}

void require_prime(int64_t p) {
  if (p < 2 || nt::factorize(p).size() != 1 || nt::factorize(p)[0].second != 1)
    fail(ErrorKind::BadParameter, std::to_string(p) + " is not prime");
}

}  // namespace

PreMetricGroup norm_form(int64_t p) {
  require_prime(p);
  FinAbGroup g({p, p});
  std::vector<RootExp> values;
  int64_t nr = p == 2 ? 0 : least_nonresidue(p);
  for (int64_t x = 0; x < p; ++x)
    for (int64_t y = 0; y < p; ++y)
      values.push_back(p == 2 ? RootExp(x * x + x * y + y * y, 2) : RootExp(x * x - nr * y * y, p));
  return PreMetricGroup::validate(g, std::move(values));
}

PreMetricGroup a_form(int i_sign) { return cyclic_form(2, RootExp(i_sign > 0 ? 1 : 3, 4)); }

PreMetricGroup m_form(const RootExp& xi) {
  if (8 % xi.den() != 0) fail(ErrorKind::BadParameter, "M_xi needs xi^8 = 1");
  if (xi.den() == 8) return cyclic_form(4, xi);
  // elements (0,0),(0,1),(1,0),(1,1); u = (1,1)
  return PreMetricGroup::validate(FinAbGroup({2, 2}), {RootExp(), xi, xi, RootExp(1, 2)});
}

PreMetricGroup odd_rank1(int64_t p, int residue) {
  require_prime(p);
  if (p == 2) fail(ErrorKind::BadParameter, "odd prime expected");
  return cyclic_form(p, RootExp(residue > 0 ? 1 : least_nonresidue(p), p));
}

PreMetricGroup slight_deg2() { return cyclic_form(2, RootExp(1, 2)); }

PreMetricGroup slight_deg4() {
  return PreMetricGroup::validate(FinAbGroup({2, 2}), {RootExp(), RootExp(1, 2), RootExp(1, 4), RootExp(3, 4)});
}

// ---------------------------------------------------------------- classification

std::string AnisotropicLabel::str() const {
  auto sign = [](int s) { return s > 0 ? std::string("+i") : std::string("-i"); };
  switch (kind) {
    case Kind::Trivial: return "Trivial";
    case Kind::OddRank1: return "OddRank1(" + std::to_string(p) + "," + (residue > 0 ? "+" : "-") + ")";
    case Kind::OddNorm: return "OddNorm(" + std::to_string(p) + ")";
    case Kind::A: return "A(" + sign(i_sign) + ")";
    case Kind::M: return "M(" + xi.str() + ")";
    case Kind::MplusA: return "M(" + xi.str() + ")+A(" + sign(i_sign) + ")";
    case Kind::SlightDeg2: return "SlightDeg2";
    case Kind::SlightDeg4: return "SlightDeg4(" + sign(i_sign) + ")";
  }
  return "?";
}

int64_t AnisotropicLabel::order() const {
  switch (kind) {
    case Kind::Trivial: return 1;
    case Kind::OddRank1: return p;
    case Kind::OddNorm: return p * p;
    case Kind::A:
    case Kind::SlightDeg2: return 2;
    case Kind::M:
    case Kind::SlightDeg4: return 4;
    case Kind::MplusA: return 8;
  }
  return 0;
}

namespace {

[[noreturn]] void bug(const std::string& what) { fail(ErrorKind::ClassificationBug, what); }

RootExp read_m_parameter(const PreMetricGroup& m) {
  std::vector<int64_t> halves;
  for (int64_t x = 1; x < 4; ++x)
    if (m.q(x) == RootExp(1, 2)) halves.push_back(x);
  RootExp xi;
  if (halves.size() == 3) {
    xi = RootExp(1, 2);
  } else if (halves.size() == 1) {
    std::vector<RootExp> others;
    for (int64_t x = 1; x < 4; ++x)
      if (x != halves[0]) others.push_back(m.q(x));
    if (others[0] != others[1]) bug("order-4 form without the M shape");
    xi = others[0];
  } else {
    bug("order-4 form without the M shape");
  }
  bool cyclic = m.group().rank() == 1;
  if (cyclic != (xi.den() == 8)) bug("group structure inconsistent with xi");
  return xi;
}

}  // namespace

AnisotropicLabel classify_p_component(const PreMetricGroup& m, int64_t p) {
  using K = AnisotropicLabel::Kind;
  AnisotropicLabel l;
  l.p = p;
  const int64_t n = m.order();
  if (n == 1) return AnisotropicLabel{};
  if (!is_anisotropic(m)) fail(ErrorKind::NotAnisotropic, "form has a nonzero isotropic element");
  DegeneracyClass deg = degeneracy(m);
  if (p != 2) {
    if (deg.tag != Degeneracy::nondegenerate) bug("degenerate anisotropic odd p-group");
    if (n == p) {
      const RootExp& v = m.q(1);
      l.kind = K::OddRank1;
      l.residue = legendre(v.num() * (p / v.den()), p);
      return l;
    }
    if (n == p * p && m.group().rank() == 2) {
      l.kind = K::OddNorm;
      return l;
    }
    bug("anisotropic odd p-group outside the classification bounds");
  }
  if (deg.tag == Degeneracy::degenerate_other) bug("anisotropic 2-group with a large radical");
  if (deg.tag == Degeneracy::slightly_degenerate) {
    if (n == 2) {
      l.kind = K::SlightDeg2;
      return l;
    }
    if (n == 4 && m.group().rank() == 2) {
      l.kind = K::SlightDeg4;
      l.i_sign = 1;
      return l;
    }
    bug("slightly degenerate anisotropic 2-group outside the classification bounds");
  }
  if (n == 2) {
    l.kind = K::A;
    l.i_sign = m.q(1) == RootExp(1, 4) ? 1 : -1;
    return l;
  }
  if (n == 4) {
    l.kind = K::M;
    l.xi = read_m_parameter(m);
    return l;
  }
  if (n == 8) {
    // split off the lexicographically least A(+i) summand and read xi from its complement
    for (int64_t v = 1; v < n; ++v) {
      if (m.group().order_of_index(v) != 2 || m.q(v) != RootExp(1, 4)) continue;
      Subgroup rest = orthogonal_complement(m, span_indices(m.group(), {v}));
      l.kind = K::MplusA;
      l.i_sign = 1;
      l.xi = read_m_parameter(restrict(m, rest));
      return l;
    }
    bug("order-8 anisotropic metric 2-group without an A(+i) summand");
  }
  bug("anisotropic 2-group outside the classification bounds");
}

std::vector<AnisotropicLabel> classify_anisotropic(const PreMetricGroup& m) {
  if (!is_anisotropic(m)) fail(ErrorKind::NotAnisotropic, "form has a nonzero isotropic element");
  if (m.order() == 1) return {AnisotropicLabel{}};
  std::vector<AnisotropicLabel> out;
  for (int64_t p : prime_divisors(m.order())) out.push_back(classify_p_component(sylow_component(m, p), p));
  return out;
}

PreMetricGroup build_form(const AnisotropicLabel& l) {
  using K = AnisotropicLabel::Kind;
  switch (l.kind) {
    case K::Trivial: return trivial_form();
    case K::OddRank1: return odd_rank1(l.p, l.residue);
    case K::OddNorm: return norm_form(l.p);
    case K::A: return a_form(l.i_sign);
    case K::M: return m_form(l.xi);
    case K::MplusA: return direct_sum(m_form(l.xi), a_form(l.i_sign));
    case K::SlightDeg2: return slight_deg2();
    case K::SlightDeg4: return slight_deg4();
  }
  bug("unknown label");
}

PreMetricGroup build_form(const std::vector<AnisotropicLabel>& labels) {
  PreMetricGroup acc;
  for (const auto& l : labels) acc = direct_sum(acc, build_form(l));
  return acc;
}

std::vector<AnisotropicLabel> anisotropic_catalog(int64_t p, bool metric_only) {
  using K = AnisotropicLabel::Kind;
  std::vector<AnisotropicLabel> out{AnisotropicLabel{}};
  auto add = [&](K kind, int residue, RootExp xi, int sign) {
    AnisotropicLabel l;
    l.kind = kind;
    l.p = p;
    l.residue = residue;
    l.xi = xi;
    l.i_sign = sign;
    out.push_back(l);
  };
  if (p != 2) {
    add(K::OddRank1, 1, {}, 0);
    add(K::OddRank1, -1, {}, 0);
    add(K::OddNorm, 0, {}, 0);
    return out;
  }
  add(K::A, 0, {}, 1);
  add(K::A, 0, {}, -1);
  for (int64_t k = 1; k < 8; ++k) add(K::M, 0, RootExp(k, 8), 0);
  for (int64_t k : {1, 2, 3, 4, 5, 7}) add(K::MplusA, 0, RootExp(k, 8), 1);
  if (!metric_only) {
    add(K::SlightDeg2, 0, {}, 0);
    add(K::SlightDeg4, 0, {}, 1);
  }
  return out;
}

}  // namespace braidforge
