#pragma once

// Deliberately naive reference computations used as test oracles. None of
// these call into the library algorithms they check; they only use the
// FinAbGroup element arithmetic and plain floating point.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <vector>

#include "braidforge/abelian.hpp"
#include "braidforge/cyclotomic.hpp"

namespace oracle {

using braidforge::Element;
using braidforge::FinAbGroup;

inline std::complex<double> root(int64_t num, int64_t den) {
  return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den));
}

inline std::complex<double> value(const braidforge::CycloNum& a) {
  std::complex<double> acc = 0;
  for (size_t j = 0; j < a.coeffs().size(); ++j) acc += a.coeffs()[j].get_d() * root(static_cast<int64_t>(j), a.conductor());
  return acc;
}

inline bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) { return std::abs(a - b) < tol; }

inline int64_t gadd(const FinAbGroup& g, int64_t a, int64_t b) {
  Element x = g.element_at(a), y = g.element_at(b);
  for (size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % g.orders()[i];
  return g.index_of(x);
}

inline bool closed(const FinAbGroup& g, const std::set<int64_t>& s) {
  if (!s.count(0)) return false;
  for (int64_t a : s)
    for (int64_t b : s)
      if (!s.count(gadd(g, a, b))) return false;
  return true;
}

// Every addition-closed subset, by exhausting the power set. |G| <= 16.
inline std::set<std::set<int64_t>> subgroups_powerset(const FinAbGroup& g) {
  std::set<std::set<int64_t>> out;
  int64_t n = g.order();
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    if (!(mask & 1)) continue;
    std::set<int64_t> s;
    for (int64_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.insert(i);
    if (closed(g, s)) out.insert(s);
  }
  return out;
}

inline std::set<int64_t> close_under_addition(const FinAbGroup& g, std::set<int64_t> s) {
  s.insert(0);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<int64_t> v(s.begin(), s.end());
    for (int64_t a : v)
      for (int64_t b : v)
        if (s.insert(gadd(g, a, b)).second) grew = true;
  }
  return s;
}

// Subgroups reached by adjoining one element at a time, starting from 0.
inline std::set<std::set<int64_t>> subgroups_by_adjoining(const FinAbGroup& g) {
  std::set<std::set<int64_t>> out{{0}};
  std::vector<std::set<int64_t>> frontier{{0}};
  while (!frontier.empty()) {
    std::vector<std::set<int64_t>> next;
    for (const auto& h : frontier)
      for (int64_t x = 0; x < g.order(); ++x) {
        if (h.count(x)) continue;
        auto s = h;
        s.insert(x);
        auto c = close_under_addition(g, s);
        if (out.insert(c).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  return out;
}

// Bijective additive maps determined by generator images, by trying every
// tuple; with q given, only those that carry q to itself are counted.
inline int64_t count_automorphisms(const FinAbGroup& g, const std::vector<braidforge::RootExp>* q = nullptr) {
  const size_t k = g.rank();
  const int64_t n = g.order();
  int64_t count = 0;
  std::vector<int64_t> imgs(k, 0);
  for (;;) {
    bool well_defined = true;
    for (size_t i = 0; i < k && well_defined; ++i) {
      int64_t acc = 0;
      for (int64_t t = 0; t < g.orders()[i]; ++t) acc = gadd(g, acc, imgs[i]);
      well_defined = acc == 0;
    }
    if (well_defined) {
      std::set<int64_t> image;
      for (int64_t x = 0; x < n; ++x) {
        Element c = g.element_at(x);
        int64_t acc = 0;
        for (size_t i = 0; i < k; ++i)
          for (int64_t t = 0; t < c[i]; ++t) acc = gadd(g, acc, imgs[i]);
        image.insert(acc);
        if (q && (*q)[acc] != (*q)[x]) well_defined = false;
      }
      if (well_defined && static_cast<int64_t>(image.size()) == n) ++count;
    }
    size_t i = 0;
    while (i < k && ++imgs[i] == n) imgs[i++] = 0;
    if (i == k) break;
  }
  return count;
}

// Number of elements killed by d, for each divisor d of the exponent; this
// determines a finite abelian group up to isomorphism.
inline std::map<int64_t, int64_t> torsion_profile(const std::vector<int64_t>& orders) {
  int64_t total = 1, expo = 1;
  for (int64_t n : orders) {
    total *= n;
    expo = std::lcm(expo, n);
  }
  std::map<int64_t, int64_t> out;
  for (int64_t d = 1; d <= expo; ++d) {
    if (expo % d) continue;
    int64_t c = 1;
    for (int64_t n : orders) c *= std::gcd(n, d);
    out[d] = c;
  }
  return out;
}

// Brute-force Gauss sum sum_g exp(2 pi i sign q(g)) in floating point.
inline std::complex<double> gauss(const std::vector<braidforge::RootExp>& q, int sign) {
  std::complex<double> acc = 0;
  for (const auto& r : q) acc += root(sign * r.num(), r.den());
  return acc;
}

// Quadratic-form axioms checked over every pair and triple of elements.
inline bool is_quadratic(const FinAbGroup& g, const std::vector<braidforge::RootExp>& q) {
  using braidforge::RootExp;
  const int64_t n = g.order();
  if (!q[0].is_zero()) return false;
  auto neg = [&](int64_t x) {
    Element e = g.element_at(x);
    for (size_t i = 0; i < e.size(); ++i) e[i] = (g.orders()[i] - e[i]) % g.orders()[i];
    return g.index_of(e);
  };
  auto b = [&](int64_t x, int64_t y) { return q[gadd(g, x, y)] - q[x] - q[y]; };
  for (int64_t x = 0; x < n; ++x) {
    if (q[neg(x)] != q[x]) return false;
    for (int64_t y = 0; y < n; ++y)
      for (int64_t z = 0; z < n; ++z)
        if (b(gadd(g, x, y), z) != b(x, z) + b(y, z)) return false;
  }
  return true;
}

// Isotropic subgroups as member sets, filtered from the full subgroup list.
inline std::set<std::set<int64_t>> isotropic_subgroups(const FinAbGroup& g, const std::vector<braidforge::RootExp>& q) {
  std::set<std::set<int64_t>> out;
  for (const auto& s : g.order() <= 16 ? subgroups_powerset(g) : subgroups_by_adjoining(g)) {
    bool iso = true;
    for (int64_t x : s) iso = iso && q[x].is_zero();
    if (iso) out.insert(s);
  }
  return out;
}

// Images of the generators of ga under every additive bijection ga -> gb
// that carries qa to qb, found by trying every tuple of images.
inline bool form_isomorphic(const FinAbGroup& ga, const std::vector<braidforge::RootExp>& qa, const FinAbGroup& gb,
                            const std::vector<braidforge::RootExp>& qb) {
  if (ga.order() != gb.order()) return false;
  const size_t k = ga.rank();
  const int64_t n = ga.order();
  std::vector<int64_t> imgs(k, 0);
  for (;;) {
    bool ok = true;
    for (size_t i = 0; i < k && ok; ++i) {
      int64_t acc = 0;
      for (int64_t t = 0; t < ga.orders()[i]; ++t) acc = gadd(gb, acc, imgs[i]);
      ok = acc == 0;
    }
    if (ok) {
      std::set<int64_t> image;
      for (int64_t x = 0; x < n && ok; ++x) {
        Element c = ga.element_at(x);
        int64_t acc = 0;
        for (size_t i = 0; i < k; ++i)
          for (int64_t t = 0; t < c[i]; ++t) acc = gadd(gb, acc, imgs[i]);
        image.insert(acc);
        ok = qb[acc] == qa[x];
      }
      if (ok && static_cast<int64_t>(image.size()) == n) return true;
    }
    size_t i = 0;
    while (i < k && ++imgs[i] == n) imgs[i++] = 0;
    if (i == k) break;
  }
  return false;
}

}  // namespace oracle
