#include "braidforge/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "braidforge/error.hpp"
#include "numtheory.hpp"

namespace braidforge {

namespace {

std::string idx(size_t i) { return std::to_string(i); }

}  // namespace

FusionRing FusionRing::validate(std::vector<std::string> labels, size_t unit, std::vector<size_t> dual,
                                const FusionTable& n) {
  const size_t r = labels.size();
  if (r == 0) fail(ErrorKind::SchemaError, "empty basis");
  if (dual.size() != r || n.size() != r) fail(ErrorKind::SchemaError, "table sizes disagree with the basis");
  for (const auto& row : n) {
    if (row.size() != r) fail(ErrorKind::SchemaError, "table sizes disagree with the basis");
    for (const auto& col : row) {
      if (col.size() != r) fail(ErrorKind::SchemaError, "table sizes disagree with the basis");
      for (int64_t v : col)
        if (v < 0) fail(ErrorKind::SchemaError, "negative structure constant");
    }
  }
  FusionRing f;
  f.labels_ = std::move(labels);
  f.unit_ = unit;
  f.dual_ = std::move(dual);
  f.n_.resize(r * r * r);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j)
      for (size_t k = 0; k < r; ++k) f.n_[(i * r + j) * r + k] = n[i][j][k];
  f.sparse_.resize(r * r);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j)
      for (size_t k = 0; k < r; ++k)
        if (f.n(i, j, k)) f.sparse_[i * r + j].push_back({k, f.n(i, j, k)});

  if (unit >= r) fail(ErrorKind::UnitFail, "unit index out of range");
  for (size_t j = 0; j < r; ++j)
    for (size_t k = 0; k < r; ++k)
      if (f.n(unit, j, k) != (j == k) || f.n(j, unit, k) != (j == k))
        fail(ErrorKind::UnitFail, "unit law fails at j=" + idx(j) + ", k=" + idx(k));
  for (size_t x = 0; x < r; ++x)
    if (f.dual_[x] >= r || f.dual_[f.dual_[x]] != x) fail(ErrorKind::DualityFail, "dual is not an involution at " + idx(x));
  for (size_t x = 0; x < r; ++x)
    for (size_t y = 0; y < r; ++y)
      if (f.n(x, y, unit) != (y == f.dual_[x]))
        fail(ErrorKind::DualityFail, "N[x][y][unit] != delta(y, dual x) at x=" + idx(x) + ", y=" + idx(y));
  for (size_t x = 0; x < r; ++x)
    for (size_t y = 0; y < r; ++y)
      for (size_t z = 0; z < r; ++z)
        for (size_t v = 0; v < r; ++v) {
          int64_t left = 0, right = 0;
          for (auto [w, m] : f.product(x, y)) left += m * f.n(w, z, v);
          for (auto [w, m] : f.product(y, z)) right += m * f.n(x, w, v);
          if (left != right)
            fail(ErrorKind::AssociativityFail, "(x y) z != x (y z) at x=" + idx(x) + ", y=" + idx(y) + ", z=" + idx(z) +
                                                   ", component " + idx(v));
        }
  for (size_t x = 0; x < r; ++x)
    for (size_t y = 0; y < r; ++y)
      for (size_t z = 0; z < r; ++z) {
        int64_t a = f.n(x, y, z);
        if (a != f.n(f.dual_[z], x, f.dual_[y]) || a != f.n(y, f.dual_[z], f.dual_[x]))
          fail(ErrorKind::FrobeniusFail,
               "Frobenius reciprocity fails at x=" + idx(x) + ", y=" + idx(y) + ", z=" + idx(z));
      }
  return f;
}

FusionTable FusionRing::table() const {
  const size_t r = rank();
  FusionTable t(r, std::vector<std::vector<int64_t>>(r, std::vector<int64_t>(r)));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j)
      for (size_t k = 0; k < r; ++k) t[i][j][k] = n(i, j, k);
  return t;
}

bool FusionRing::is_commutative() const {
  for (size_t i = 0; i < rank(); ++i)
    for (size_t j = i + 1; j < rank(); ++j)
      if (product(i, j) != product(j, i)) return false;
  return true;
}

size_t FusionRing::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) fail(ErrorKind::SchemaError, "unknown basis label " + label);
  return static_cast<size_t>(it - labels_.begin());
}

FusionRing pointed_ring(const FinAbGroup& g) {
  const size_t r = static_cast<size_t>(g.order());
  std::vector<std::string> labels;
  std::vector<size_t> dual;
  FusionTable t(r, std::vector<std::vector<int64_t>>(r, std::vector<int64_t>(r, 0)));
  for (size_t i = 0; i < r; ++i) {
    labels.push_back(to_string(g.element_at(i)));
    dual.push_back(g.neg_index(i));
    for (size_t j = 0; j < r; ++j) t[i][j][g.add_index(i, j)] = 1;
  }
  return FusionRing::validate(std::move(labels), 0, std::move(dual), t);
}

FusionRing ising_ring() {
  FusionTable t(3, std::vector<std::vector<int64_t>>(3, std::vector<int64_t>(3, 0)));
  const size_t one = 0, delta = 1, x = 2;
  for (size_t j = 0; j < 3; ++j) t[one][j][j] = t[j][one][j] = 1;
  t[delta][delta][one] = 1;
  t[delta][x][x] = t[x][delta][x] = 1;
  t[x][x][one] = t[x][x][delta] = 1;
  return FusionRing::validate({"1", "delta", "X"}, one, {one, delta, x}, t);
}

FusionRing tensor_product(const FusionRing& a, const FusionRing& b) {
  const size_t ra = a.rank(), rb = b.rank(), r = ra * rb;
  std::vector<std::string> labels;
  std::vector<size_t> dual;
  for (size_t i = 0; i < ra; ++i)
    for (size_t j = 0; j < rb; ++j) {
      labels.push_back(a.labels()[i] + "*" + b.labels()[j]);
      dual.push_back(a.dual(i) * rb + b.dual(j));
    }
  FusionTable t(r, std::vector<std::vector<int64_t>>(r, std::vector<int64_t>(r, 0)));
  for (size_t i1 = 0; i1 < ra; ++i1)
    for (size_t j1 = 0; j1 < rb; ++j1)
      for (size_t i2 = 0; i2 < ra; ++i2)
        for (size_t j2 = 0; j2 < rb; ++j2)
          for (auto [k1, m1] : a.product(i1, i2))
            for (auto [k2, m2] : b.product(j1, j2)) t[i1 * rb + j1][i2 * rb + j2][k1 * rb + k2] = m1 * m2;
  return FusionRing::validate(std::move(labels), a.unit() * rb + b.unit(), std::move(dual), t);
}

// ---------------------------------------------------------------- subrings

bool FusionSubring::contains(size_t i) const { return std::binary_search(indices.begin(), indices.end(), i); }

FusionSubring subring_generated(const FusionRing& r, const std::vector<size_t>& generators) {
  std::vector<char> in(r.rank(), 0);
  in[r.unit()] = 1;
  for (size_t g : generators) {
    if (g >= r.rank()) fail(ErrorKind::SchemaError, "basis index out of range");
    in[g] = 1;
  }
  for (bool grew = true; grew;) {
    grew = false;
    for (size_t a = 0; a < r.rank(); ++a)
      for (size_t b = 0; b < r.rank() && in[a]; ++b)
        if (in[b])
          for (auto [k, m] : r.product(a, b))
            if (!in[k]) in[k] = 1, grew = true;
  }
  FusionSubring s;
  for (size_t i = 0; i < r.rank(); ++i)
    if (in[i]) s.indices.push_back(i);
  for (size_t i : s.indices)
    if (!in[r.dual(i)]) fail(ErrorKind::ClassificationBug, "product-closed subset is not closed under duals");
  return s;
}

FusionSubring whole_ring(const FusionRing& r) {
  FusionSubring s;
  for (size_t i = 0; i < r.rank(); ++i) s.indices.push_back(i);
  return s;
}

SubringLattice all_subrings(const FusionRing& r, const Limits& limits) {
  if (static_cast<int64_t>(r.rank()) > limits.rank_guard)
    fail(ErrorKind::EnumerationLimit, "rank " + std::to_string(r.rank()) + " exceeds the subring guard");
  std::set<FusionSubring> seen;
  std::vector<FusionSubring> queue{subring_generated(r, {})};
  seen.insert(queue[0]);
  for (size_t q = 0; q < queue.size(); ++q)
    for (size_t x = 0; x < r.rank(); ++x) {
      if (queue[q].contains(x)) continue;
      std::vector<size_t> gens = queue[q].indices;
      gens.push_back(x);
      FusionSubring s = subring_generated(r, gens);
      if (seen.insert(s).second) queue.push_back(std::move(s));
    }
  SubringLattice l;
  l.subrings.assign(seen.begin(), seen.end());
  std::stable_sort(l.subrings.begin(), l.subrings.end(),
                   [](const FusionSubring& a, const FusionSubring& b) { return a.size() < b.size(); });
  const size_t m = l.subrings.size();
  auto find = [&](const FusionSubring& s) {
    return static_cast<size_t>(std::find(l.subrings.begin(), l.subrings.end(), s) - l.subrings.begin());
  };
  l.meet.assign(m, std::vector<size_t>(m));
  l.join.assign(m, std::vector<size_t>(m));
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b) {
      FusionSubring both;
      std::set_intersection(l.subrings[a].indices.begin(), l.subrings[a].indices.end(), l.subrings[b].indices.begin(),
                            l.subrings[b].indices.end(), std::back_inserter(both.indices));
      std::vector<size_t> uni;
      std::set_union(l.subrings[a].indices.begin(), l.subrings[a].indices.end(), l.subrings[b].indices.begin(),
                     l.subrings[b].indices.end(), std::back_inserter(uni));
      l.meet[a][b] = find(both);
      l.join[a][b] = find(subring_generated(r, uni));
      if (l.meet[a][b] == m) fail(ErrorKind::ClassificationBug, "intersection of subrings is not a subring");
    }
  if (r.is_commutative()) {
    auto leq = [&](size_t a, size_t c) { return l.meet[a][c] == a; };
    for (size_t a = 0; a < m; ++a)
      for (size_t c = 0; c < m; ++c) {
        if (!leq(a, c)) continue;
        for (size_t b = 0; b < m; ++b)
          if (l.join[a][l.meet[b][c]] != l.meet[l.join[a][b]][c]) l.modular = false;
      }
  }
  return l;
}

FusionSubring adjoint_subring(const FusionRing& r) {
  std::vector<size_t> gens;
  for (size_t x = 0; x < r.rank(); ++x)
    for (auto [k, m] : r.product(x, r.dual(x))) gens.push_back(k);
  return subring_generated(r, gens);
}

// ---------------------------------------------------------------- gradings

std::vector<size_t> Grading::component(const Element& g) const {
  std::vector<size_t> out;
  for (size_t i = 0; i < deg.size(); ++i)
    if (deg[i] == g) out.push_back(i);
  return out;
}

bool Grading::faithful() const {
  std::set<Element> hit(deg.begin(), deg.end());
  return static_cast<int64_t>(hit.size()) == group.order();
}

bool Grading::respected_by(const FusionRing& r) const {
  for (size_t x = 0; x < r.rank(); ++x)
    for (size_t y = 0; y < r.rank(); ++y)
      for (auto [z, m] : r.product(x, y))
        if (deg[z] != group.add(deg[x], deg[y])) return false;
  return true;
}

Grading universal_grading(const FusionRing& r, const Limits& limits) {
  if (!r.is_commutative()) fail(ErrorKind::Unsupported, "universal grading needs a commutative ring");
  if (static_cast<int64_t>(r.rank()) > limits.rank_guard)
    fail(ErrorKind::EnumerationLimit, "rank " + std::to_string(r.rank()) + " exceeds the grading guard");
  FusionSubring ad = adjoint_subring(r);
  const size_t n = r.rank();
  std::vector<size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t x = 0; x < n; ++x)
    for (size_t a : ad.indices)
      for (auto [y, m] : r.product(x, a)) parent[root(y)] = root(x);
  std::vector<int64_t> cls(n, -1);
  std::vector<size_t> rep;
  for (size_t x = 0; x < n; ++x) {
    size_t rt = root(x);
    if (cls[rt] < 0) {
      cls[rt] = static_cast<int64_t>(rep.size());
      rep.push_back(x);
    }
    cls[x] = cls[rt];
  }
  const size_t k = rep.size();
  std::vector<std::vector<int64_t>> mul(k, std::vector<int64_t>(k));
  for (size_t a = 0; a < k; ++a)
    for (size_t b = 0; b < k; ++b) mul[a][b] = cls[r.product(rep[a], rep[b]).front().first];
  auto id = identify_table(mul);
  if (!id) fail(ErrorKind::ClassificationBug, "grading classes do not form an abelian group");
  Grading g{id->group, {}};
  for (size_t x = 0; x < n; ++x) g.deg.push_back(id->group.element_at(id->index[cls[x]]));
  if (!g.respected_by(r) || g.component(g.group.zero()) != ad.indices)
    fail(ErrorKind::ClassificationBug, "universal grading inconsistent with the adjoint subring");
  return g;
}

// ---------------------------------------------------------------- dimensions

FPData fp_dims(const FusionRing& r, double tolerance) {
  const size_t n = r.rank();
  // The sum of all left multiplication matrices is entrywise positive, so its
  // Perron vector is reached by power iteration even when a single X_i has
  // a periodic multiplication matrix.
  std::vector<double> m(n * n, 0.0);
  for (size_t x = 0; x < n; ++x)
    for (size_t j = 0; j < n; ++j)
      for (auto [k, c] : r.product(x, j)) m[j * n + k] += static_cast<double>(c);
  std::vector<double> v(n, 1.0), w(n);
  bool converged = false;
  for (int it = 0; it < 100000 && !converged; ++it) {
    for (size_t j = 0; j < n; ++j) {
      double s = 0;
      for (size_t k = 0; k < n; ++k) s += m[j * n + k] * v[k];
      w[j] = s;
    }
    double norm = 0;
    for (double x : w) norm = std::max(norm, x);
    double delta = 0;
    for (size_t j = 0; j < n; ++j) {
      w[j] /= norm;
      delta = std::max(delta, std::abs(w[j] - v[j]));
    }
    v.swap(w);
    converged = delta < 1e-12;
  }
  if (!converged) fail(ErrorKind::NumericalFail, "power iteration did not converge");
  FPData d;
  d.tolerance = tolerance;
  for (size_t j = 0; j < n; ++j) d.fpdim.push_back(v[j] / v[r.unit()]);
  for (double x : d.fpdim) d.total += x * x;
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y) {
      double s = 0;
      for (auto [z, c] : r.product(x, y)) s += static_cast<double>(c) * d.fpdim[z];
      if (std::abs(s - d.fpdim[x] * d.fpdim[y]) > tolerance * std::max(1.0, s))
        fail(ErrorKind::NumericalFail, "FP dimensions are not multiplicative");
    }
  return d;
}

FusionSubring pointed_part(const FusionRing& r) {
  FusionSubring s;
  for (size_t x = 0; x < r.rank(); ++x) {
    const auto& p = r.product(x, r.dual(x));
    if (p.size() == 1 && p[0].first == r.unit() && p[0].second == 1) s.indices.push_back(x);
  }
  return s;
}

bool is_weakly_integral(const FusionRing& r, double tolerance) {
  double total = fp_dims(r, tolerance).total;
  return std::abs(total - std::round(total)) <= tolerance;
}

FPSquareGrading fp_square_grading(const FusionRing& r, double tolerance) {
  FPData d = fp_dims(r, tolerance);
  if (std::abs(d.total - std::round(d.total)) > tolerance)
    fail(ErrorKind::NotWeaklyIntegral, "FPdim of the ring is " + std::to_string(d.total));
  FPSquareGrading out;
  std::set<int64_t> primes;
  for (double x : d.fpdim) {
    double sq = x * x;
    double rounded = std::round(sq);
    if (std::abs(sq - rounded) > tolerance)
      fail(ErrorKind::NumericalFail, "FPdim^2 = " + std::to_string(sq) + " is not within tolerance of an integer");
    int64_t sf = nt::squarefree_part(static_cast<int64_t>(rounded));
    out.squarefree.push_back(sf);
    for (auto [p, e] : nt::factorize(sf)) primes.insert(p);
  }
  out.primes.assign(primes.begin(), primes.end());
  out.grading.group = FinAbGroup(std::vector<int64_t>(out.primes.size(), 2));
  for (int64_t sf : out.squarefree) {
    Element e;
    for (int64_t p : out.primes) e.push_back(sf % p == 0 ? 1 : 0);
    out.grading.deg.push_back(e);
  }
  if (!out.grading.respected_by(r)) fail(ErrorKind::ClassificationBug, "square-free classes do not grade the ring");
  return out;
}

FusionSubring integral_part(const FusionRing& r, double tolerance) {
  FPSquareGrading g = fp_square_grading(r, tolerance);
  return FusionSubring{g.grading.component(g.grading.group.zero())};
}

}  // namespace braidforge
