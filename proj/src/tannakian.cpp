#include <algorithm>
#include <numeric>
#include <set>

#include "braidforge/error.hpp"
#include "braidforge/premodular.hpp"

namespace braidforge {

namespace {

// A simple object of the fiber category: the free orbit of `source`, or one
// of the summands of a fixed object.
struct FiberObject {
  size_t source;
  int summand;  // -1 for a free orbit
  int chi;
  RootExp q;
};

struct Fiber {
  std::vector<FiberObject> objects;
  std::vector<std::vector<size_t>> image;  // per basis index of E': fiber objects of F(X)
  std::vector<size_t> reps;                // one basis index per orbit
  std::vector<int> shift;                  // action of the generator of E on fiber objects
  bool has_fixed = false;
};

FusionSubring maximal_tannakian(const PreModularDatum& d, const Limits& limits) {
  const FusionRing& r = d.ring();
  const FusionSubring pt = pointed_part(r);
  const size_t k = pt.size();
  std::vector<std::vector<int64_t>> mul(k, std::vector<int64_t>(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      size_t z = r.product(pt.indices[i], pt.indices[j]).front().first;
      mul[i][j] = std::lower_bound(pt.indices.begin(), pt.indices.end(), z) - pt.indices.begin();
    }
  auto id = identify_table(mul);
  if (!id) fail(ErrorKind::ClassificationBug, "invertible objects do not form a group");
  std::vector<size_t> basis_of(static_cast<size_t>(id->group.order()));
  for (size_t i = 0; i < k; ++i) basis_of[id->index[i]] = pt.indices[i];

  FusionSubring best{{r.unit()}};
  for (const Subgroup& h : subgroups(id->group, limits)) {
    FusionSubring e;
    for (int64_t m : h.members()) e.indices.push_back(basis_of[m]);
    std::sort(e.indices.begin(), e.indices.end());
    bool tannakian = true;
    for (size_t x : e.indices) {
      tannakian = tannakian && d.theta(x).is_zero() && d.dim(x) == CycloNum(1);
      for (size_t y : e.indices) tannakian = tannakian && d.s_tilde(x, y) == CycloNum(1);
    }
    if (tannakian && (e.size() > best.size() || (e.size() == best.size() && e < best))) best = e;
  }
  return best;
}

Fiber build_fiber(const PreModularDatum& d, const FusionSubring& e, const FusionSubring& ep) {
  const FusionRing& r = d.ring();
  const size_t p = e.size();
  Fiber f;
  f.image.assign(r.rank(), {});
  std::vector<char> seen(r.rank(), 0);
  for (size_t x : ep.indices) {
    if (seen[x]) continue;
    std::set<size_t> orbit;
    for (size_t g : e.indices) orbit.insert(r.product(g, x).front().first);
    for (size_t y : orbit) seen[y] = 1;
    const size_t stab = p / orbit.size();
    const auto primes = prime_divisors(static_cast<int64_t>(p));
    if (stab > 1 && !(primes.size() == 1 && primes[0] == static_cast<int64_t>(p)))
      fail(ErrorKind::Unsupported, "fixed objects under a Tannakian subcategory of non-prime order");
    CycloNum dim = d.dim(x) * CycloNum(mpq_class(1, static_cast<long>(stab)));
    int chi = dim == CycloNum(1) ? 1 : dim == CycloNum(-1) ? -1 : 0;
    if (chi == 0) fail(ErrorKind::Unsupported, "fiber category is not pointed: dimension " + dim.str());
    RootExp q = chi < 0 ? d.theta(x) + RootExp(1, 2) : d.theta(x);
    std::vector<size_t> ids;
    for (size_t s = 0; s < stab; ++s) {
      ids.push_back(f.objects.size());
      f.objects.push_back({x, stab > 1 ? static_cast<int>(s) : -1, chi, q});
      f.shift.push_back(static_cast<int>(f.objects.size() - 1));
    }
    if (stab > 1) {
      f.has_fixed = true;
      for (size_t s = 0; s < stab; ++s) f.shift[ids[s]] = static_cast<int>(ids[(s + 1) % stab]);
    }
    for (size_t y : orbit) f.image[y] = ids;
    f.reps.push_back(x);
  }
  return f;
}

// Does the assignment object -> group index intertwine F(X)F(Y) = F(X (x) Y)?
bool respects_fusion(const PreModularDatum& d, const Fiber& f, const FinAbGroup& g, const std::vector<int64_t>& at) {
  const FusionRing& r = d.ring();
  for (size_t x : f.reps)
    for (size_t y : f.reps) {
      std::vector<int64_t> lhs, rhs;
      for (size_t u : f.image[x])
        for (size_t v : f.image[y]) lhs.push_back(g.add_index(at[u], at[v]));
      for (auto [z, mult] : r.product(x, y))
        for (int64_t m = 0; m < mult; ++m)
          for (size_t w : f.image[z]) rhs.push_back(at[w]);
      std::sort(lhs.begin(), lhs.end());
      std::sort(rhs.begin(), rhs.end());
      if (lhs != rhs) return false;
    }
  return true;
}

std::optional<PreMetricGroup> fiber_form(const Fiber& f, const FinAbGroup& g, const std::vector<int64_t>& at,
                                         std::vector<int>& chi) {
  std::vector<RootExp> values(f.objects.size());
  chi.assign(f.objects.size(), 1);
  for (size_t u = 0; u < f.objects.size(); ++u) {
    values[at[u]] = f.objects[u].q;
    chi[at[u]] = f.objects[u].chi;
  }
  for (int64_t x = 0; x < g.order(); ++x)
    for (int64_t y = 0; y < g.order(); ++y)
      if (chi[g.add_index(x, y)] != chi[x] * chi[y]) return std::nullopt;
  try {
    return PreMetricGroup::validate(g, std::move(values));
  } catch (const Error&) {
    return std::nullopt;
  }
}

// The shift as a map on group indices, if it is a form automorphism.
std::optional<GroupHom> shift_automorphism(const Fiber& f, const PreMetricGroup& m, const std::vector<int64_t>& at) {
  const FinAbGroup& g = m.group();
  std::vector<int64_t> obj_of(f.objects.size());
  for (size_t u = 0; u < f.objects.size(); ++u) obj_of[at[u]] = static_cast<int64_t>(u);
  auto sigma = [&](int64_t x) { return at[f.shift[obj_of[x]]]; };
  for (int64_t x = 0; x < g.order(); ++x) {
    if (!(m.q(sigma(x)) == m.q(x))) return std::nullopt;
    for (int64_t y = 0; y < g.order(); ++y)
      if (sigma(g.add_index(x, y)) != g.add_index(sigma(x), sigma(y))) return std::nullopt;
  }
  std::vector<Element> images;
  for (size_t i = 0; i < g.rank(); ++i) images.push_back(g.element_at(sigma(g.index_of(g.generator(i)))));
  return GroupHom(g, g, std::move(images));
}

std::vector<GroupHom> powers(const GroupHom& s) {
  std::vector<GroupHom> out{GroupHom::identity(s.source())};
  for (GroupHom cur = s; !(cur == out.front()); cur = s.after(cur)) out.push_back(cur);
  return out;
}

}  // namespace

TannakianCore tannakian_core(const PreModularDatum& d, const Limits& limits) {
  TannakianCore out;
  out.tannakian = maximal_tannakian(d, limits);
  const FusionSubring ep = centralizer_of(d, out.tannakian);
  const Fiber f = build_fiber(d, out.tannakian, ep);
  const size_t n = f.objects.size();

  if (!f.has_fixed) {
    std::vector<std::vector<int64_t>> mul(n, std::vector<int64_t>(n));
    for (size_t u = 0; u < n; ++u)
      for (size_t v = 0; v < n; ++v) {
        const auto& prod = d.ring().product(f.objects[u].source, f.objects[v].source);
        if (prod.size() != 1 || prod.front().second != 1)
          fail(ErrorKind::Unsupported, "fiber category is not pointed");
        mul[u][v] = static_cast<int64_t>(f.image[prod.front().first].front());
      }
    auto id = identify_table(mul);
    if (!id) fail(ErrorKind::ClassificationBug, "fiber objects do not form a group");
    auto m = fiber_form(f, id->group, id->index, out.chi);
    if (!m) fail(ErrorKind::ClassificationBug, "fiber twists do not form a quadratic form");
    out.form = *m;
    out.gamma = {GroupHom::identity(id->group)};
    return out;
  }

  if (static_cast<int64_t>(n) > 8)
    fail(ErrorKind::EnumerationLimit, "fiber with " + std::to_string(n) + " objects is too large to label");
  for (const FinAbGroup& g : groups_of_order(static_cast<int64_t>(n))) {
    std::vector<int64_t> at(n);
    std::iota(at.begin(), at.end(), 0);
    do {
      if (!respects_fusion(d, f, g, at)) continue;
      std::vector<int> chi;
      auto m = fiber_form(f, g, at, chi);
      if (!m) continue;
      auto s = shift_automorphism(f, *m, at);
      if (!s) continue;
      out.form = *m;
      out.chi = std::move(chi);
      out.gamma = powers(*s);
      return out;
    } while (std::next_permutation(at.begin() + 1, at.end()));
  }
  fail(ErrorKind::ClassificationBug, "no pointed labelling of the fiber category");
}

}  // namespace braidforge
