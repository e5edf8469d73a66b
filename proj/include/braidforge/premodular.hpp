#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braidforge/fusion.hpp"
#include "braidforge/kernels.hpp"
#include "braidforge/qform.hpp"
#include "braidforge/report.hpp"

namespace braidforge {

using Matrix = kernels::Matrix;

struct PointedOrigin {
  PreMetricGroup form;
  std::vector<int> chi;  // per element, +1 or -1
};

// Fusion ring with twists and dimensions. The S-matrix is derived from the
// balancing formula and every consistency identity is verified on build.
class PreModularDatum {
 public:
  PreModularDatum() = default;

  static PreModularDatum build(FusionRing ring, std::vector<RootExp> theta, std::vector<CycloNum> dim);

  const FusionRing& ring() const { return ring_; }
  size_t rank() const { return ring_.rank(); }
  const std::vector<RootExp>& twists() const { return theta_; }
  const RootExp& theta(size_t i) const { return theta_[i]; }
  const std::vector<CycloNum>& dims() const { return dim_; }
  const CycloNum& dim(size_t i) const { return dim_[i]; }
  const Matrix& S() const { return s_; }
  const Matrix& S_tilde() const { return st_; }
  const CycloNum& s(size_t i, size_t j) const { return s_[i][j]; }
  const CycloNum& s_tilde(size_t i, size_t j) const { return st_[i][j]; }

  const std::optional<PointedOrigin>& pointed_origin() const { return pointed_; }

 private:
  FusionRing ring_;
  std::vector<RootExp> theta_;
  std::vector<CycloNum> dim_;
  Matrix s_, st_;
  std::optional<PointedOrigin> pointed_;

  friend PreModularDatum pointed_datum(const PreMetricGroup&, const std::vector<int>&);
};

// Balancing-formula S-matrix, computed row-parallel.
Matrix s_matrix(const FusionRing& ring, const std::vector<RootExp>& theta, const std::vector<CycloNum>& dim);
namespace serial {
Matrix s_matrix(const FusionRing& ring, const std::vector<RootExp>& theta, const std::vector<CycloNum>& dim);
}

PreModularDatum pointed_datum(const PreMetricGroup& m, const std::vector<int>& chi);
PreModularDatum pointed_datum(const PreMetricGroup& m);
// zeta = k/16 with k odd, eps = +-1.
PreModularDatum ising_datum(const RootExp& zeta, int eps);
PreModularDatum deligne_product(const PreModularDatum& a, const PreModularDatum& b);
PreModularDatum trivial_datum();

// Rank over the cyclotomic field by fraction-free elimination.
int64_t matrix_rank(Matrix m);

// Sum of d(X)^2 over a subring (the categorical dimension).
CycloNum categorical_dim(const PreModularDatum& d, const FusionSubring& k);
double fp_dim(const FPData& fp, const FusionSubring& k);

struct CentralizerReport {
  FusionSubring subring;
  FusionSubring centralizer;
  std::vector<std::vector<size_t>> components;
  int64_t rank_s_tilde = 0;
};

FusionSubring centralizer_of(const PreModularDatum& d, const FusionSubring& k);
CentralizerReport centralizer(const PreModularDatum& d, const FusionSubring& k);
bool is_nondegenerate(const PreModularDatum& d);

struct DichotomyEntry {
  size_t v;
  int branch;  // 1: centralized by every Y, 2: weighted sum vanishes, 0: neither
};
std::vector<DichotomyEntry> dichotomy_check(const PreModularDatum& d, const FusionSubring& k);

std::vector<Check> mueger_report(const PreModularDatum& d, const FusionSubring& k, const FusionSubring& b,
                                 double tolerance = 1e-6);

FusionSubring adjoint_of(const FusionRing& r, const FusionSubring& k);
FusionSubring commutator(const FusionRing& r, const FusionSubring& k);
// Objects that centralize Y (x) Y* for every Y in K; equal to (K')^co.
FusionSubring projective_centralizer(const PreModularDatum& d, const FusionSubring& k);

struct SymmetryReport {
  bool symmetric = false;
  bool isotropic = false;
  std::optional<bool> lagrangian;  // pointed data only: K is a Lagrangian subgroup
  std::vector<Subgroup> lagrangians;  // pointed data only: all Lagrangian subgroups
};
SymmetryReport symmetric_and_isotropic(const PreModularDatum& d, const FusionSubring& k, const Limits& limits = {});

CycloNum gauss_sum(const PreModularDatum& d, const FusionSubring& k, int sign);

struct GfpInvariants {
  int64_t x_class = 1;  // square-free representative
  CycloNum t_plus, t_minus;
};

struct InvariantReport {
  CycloNum tau_plus, tau_minus;
  std::optional<CycloNum> charge_sq;
  CycloNum dim_total;
  std::optional<GfpInvariants> gfp;
  std::vector<Check> checks;
};

InvariantReport gauss_and_charge(const PreModularDatum& d, const Limits& limits = {}, double tolerance = 1e-6);
GfpInvariants gfp_invariants(const PreModularDatum& d, double tolerance = 1e-6);

// Pointed core after de-equivariantizing by a maximal pointed Tannakian
// subring of prime order: the resulting metric group together with the
// image of the Tannakian action in its automorphism group.
struct TannakianCore {
  FusionSubring tannakian;
  PreMetricGroup form;
  std::vector<GroupHom> gamma;
  std::vector<int> chi;  // dimensions of the fiber objects, in form element order
};

TannakianCore tannakian_core(const PreModularDatum& d, const Limits& limits = {});

// Every identity above evaluated on the whole datum and its subring lattice.
std::vector<Check> full_report(const PreModularDatum& d, const Limits& limits = {}, double tolerance = 1e-6);

}  // namespace braidforge
