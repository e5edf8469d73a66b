#include "braidforge/premodular.hpp"

#include <optional>
#include <string>

#include "braidforge/error.hpp"

namespace braidforge {

namespace {

template <class Build>
Matrix s_matrix_with(const FusionRing& ring, const std::vector<RootExp>& theta, const std::vector<CycloNum>& dim,
                     Build build) {
  return build(ring.rank(), [&](size_t i, size_t j) {
    CycloNum acc;
    for (auto [k, mult] : ring.product(i, j))
      acc += CycloNum::root(theta[k] - theta[i] - theta[j]) * dim[k] * CycloNum(mult);
    return acc;
  });
}

std::string label_triple(const FusionRing& r, size_t x, size_t y, size_t z) {
  return "(" + r.labels()[x] + ", " + r.labels()[y] + ", " + r.labels()[z] + ")";
}

// First violation of s_XY s_XZ = d(X) sum_W N_YZ^W s_XW, searched row-parallel.
std::optional<std::string> verlinde_violation(const FusionRing& r, const Matrix& s, const std::vector<CycloNum>& d) {
  const size_t n = r.rank();
  auto rows = kernels::parallel_map(n, [&](size_t x) -> std::optional<std::string> {
    for (size_t y = 0; y < n; ++y)
      for (size_t z = y; z < n; ++z) {
        CycloNum rhs;
        for (auto [w, mult] : r.product(y, z)) rhs += s[x][w] * CycloNum(mult);
        if (!(s[x][y] * s[x][z] == d[x] * rhs)) return label_triple(r, x, y, z);
      }
    return std::nullopt;
  });
  for (auto& v : rows)
    if (v) return v;
  return std::nullopt;
}

}  // namespace

Matrix s_matrix(const FusionRing& ring, const std::vector<RootExp>& theta, const std::vector<CycloNum>& dim) {
  return s_matrix_with(ring, theta, dim, [](size_t n, auto f) { return kernels::build_matrix(n, f); });
}

namespace serial {
Matrix s_matrix(const FusionRing& ring, const std::vector<RootExp>& theta, const std::vector<CycloNum>& dim) {
  return s_matrix_with(ring, theta, dim, [](size_t n, auto f) { return kernels::serial::build_matrix(n, f); });
}
}  // namespace serial

PreModularDatum PreModularDatum::build(FusionRing ring, std::vector<RootExp> theta, std::vector<CycloNum> dim) {
  const size_t n = ring.rank();
  if (theta.size() != n || dim.size() != n)
    fail(ErrorKind::SchemaError, "expected " + std::to_string(n) + " twists and dimensions");
  const auto& lab = ring.labels();
  const size_t one = ring.unit();
  if (!theta[one].is_zero()) fail(ErrorKind::UnitTwistFail, "twist of the unit is " + theta[one].str());
  if (!(dim[one] == CycloNum(1))) fail(ErrorKind::UnitTwistFail, "dimension of the unit is " + dim[one].str());
  for (size_t i = 0; i < n; ++i)
    if (dim[i].is_zero()) fail(ErrorKind::ZeroDim, "d(" + lab[i] + ") = 0");
  for (size_t i = 0; i < n; ++i)
    if (!(dim[ring.dual(i)] == dim[i].conj()))
      fail(ErrorKind::DualDimFail, "d(" + lab[ring.dual(i)] + ") is not the conjugate of d(" + lab[i] + ")");

  Matrix s = s_matrix(ring, theta, dim);
  for (size_t i = 0; i < n; ++i) {
    if (!(s[one][i] == dim[i])) fail(ErrorKind::SymmetryFail, "s(1, " + lab[i] + ") differs from d(" + lab[i] + ")");
    for (size_t j = 0; j < n; ++j) {
      if (!(s[i][j] == s[j][i])) fail(ErrorKind::SymmetryFail, "s(" + lab[i] + ", " + lab[j] + ") is not symmetric");
      if (!(s[ring.dual(i)][ring.dual(j)] == s[i][j]))
        fail(ErrorKind::SymmetryFail, "s(" + lab[i] + "*, " + lab[j] + "*) differs from s(" + lab[i] + ", " + lab[j] + ")");
    }
  }
  if (auto v = verlinde_violation(ring, s, dim)) fail(ErrorKind::VerlindeFail, "fails at (X, Y, Z) = " + *v);

  std::vector<CycloNum> inv(n);
  for (size_t i = 0; i < n; ++i) inv[i] = dim[i].inverse();
  Matrix st = kernels::build_matrix(n, [&](size_t i, size_t j) { return s[i][j] * inv[i] * inv[j]; });

  PreModularDatum out;
  out.ring_ = std::move(ring);
  out.theta_ = std::move(theta);
  out.dim_ = std::move(dim);
  out.s_ = std::move(s);
  out.st_ = std::move(st);
  return out;
}

PreModularDatum pointed_datum(const PreMetricGroup& m, const std::vector<int>& chi) {
  const FinAbGroup& g = m.group();
  if (static_cast<int64_t>(chi.size()) != g.order())
    fail(ErrorKind::SchemaError, "character needs " + std::to_string(g.order()) + " values");
  for (int c : chi)
    if (c != 1 && c != -1) fail(ErrorKind::NotCharacter, "values must be +1 or -1");
  for (int64_t x = 0; x < g.order(); ++x)
    for (int64_t y = 0; y < g.order(); ++y)
      if (chi[g.add_index(x, y)] != chi[x] * chi[y])
        fail(ErrorKind::NotCharacter, "not multiplicative at " + to_string(g.element_at(x)) + ", " +
                                          to_string(g.element_at(y)));
  std::vector<RootExp> theta;
  std::vector<CycloNum> dim;
  for (int64_t x = 0; x < g.order(); ++x) {
    theta.push_back(chi[x] < 0 ? m.q(x) + RootExp(1, 2) : m.q(x));
    dim.emplace_back(static_cast<int64_t>(chi[x]));
  }
  PreModularDatum d = PreModularDatum::build(pointed_ring(g), std::move(theta), std::move(dim));
  d.pointed_ = PointedOrigin{m, chi};
  return d;
}

PreModularDatum pointed_datum(const PreMetricGroup& m) {
  return pointed_datum(m, std::vector<int>(static_cast<size_t>(m.order()), 1));
}

PreModularDatum ising_datum(const RootExp& zeta, int eps) {
  if (zeta.den() != 16) fail(ErrorKind::BadParameter, "zeta must be k/16 with k odd, got " + zeta.str());
  if (eps != 1 && eps != -1) fail(ErrorKind::BadParameter, "eps must be +1 or -1");
  RootExp theta_x = -zeta;
  if (eps < 0) theta_x = theta_x + RootExp(1, 2);
  CycloNum dx = (CycloNum::root(zeta.scaled(2)) + CycloNum::root(zeta.scaled(-2))) * CycloNum(eps);
  return PreModularDatum::build(ising_ring(), {RootExp(), RootExp(1, 2), theta_x}, {CycloNum(1), CycloNum(1), dx});
}

PreModularDatum deligne_product(const PreModularDatum& a, const PreModularDatum& b) {
  std::vector<RootExp> theta;
  std::vector<CycloNum> dim;
  for (size_t i = 0; i < a.rank(); ++i)
    for (size_t j = 0; j < b.rank(); ++j) {
      theta.push_back(a.theta(i) + b.theta(j));
      dim.push_back(a.dim(i) * b.dim(j));
    }
  return PreModularDatum::build(tensor_product(a.ring(), b.ring()), std::move(theta), std::move(dim));
}

PreModularDatum trivial_datum() { return pointed_datum(trivial_form()); }

int64_t matrix_rank(Matrix m) {
  // Bareiss elimination: every division below is exact by the Sylvester identity.
  const size_t rows = m.size();
  if (rows == 0) return 0;
  const size_t cols = m[0].size();
  CycloNum prev(1);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const CycloNum prev_inv = prev.inverse();
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j) m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) * prev_inv;
      m[i][c] = CycloNum();
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int64_t>(r);
}

CycloNum categorical_dim(const PreModularDatum& d, const FusionSubring& k) {
  CycloNum acc;
  for (size_t i : k.indices) acc += d.dim(i) * d.dim(i);
  return acc;
}

double fp_dim(const FPData& fp, const FusionSubring& k) {
  double acc = 0;
  for (size_t i : k.indices) acc += fp.fpdim[i] * fp.fpdim[i];
  return acc;
}

}  // namespace braidforge
