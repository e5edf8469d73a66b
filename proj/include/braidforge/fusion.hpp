#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "braidforge/abelian.hpp"
#include "braidforge/limits.hpp"

namespace braidforge {

using FusionTable = std::vector<std::vector<std::vector<int64_t>>>;

// Based ring with non-negative structure constants: n(i,j,k) is the
// multiplicity of X_k in X_i (x) X_j.
class FusionRing {
 public:
  FusionRing() = default;

  static FusionRing validate(std::vector<std::string> labels, size_t unit, std::vector<size_t> dual,
                             const FusionTable& n);

  size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  size_t unit() const { return unit_; }
  size_t dual(size_t i) const { return dual_[i]; }
  const std::vector<size_t>& duals() const { return dual_; }
  int64_t n(size_t i, size_t j, size_t k) const { return n_[(i * rank() + j) * rank() + k]; }
  // Nonzero constituents (k, multiplicity) of X_i (x) X_j.
  const std::vector<std::pair<size_t, int64_t>>& product(size_t i, size_t j) const { return sparse_[i * rank() + j]; }
  FusionTable table() const;
  bool is_commutative() const;
  size_t index_of(const std::string& label) const;

  bool operator==(const FusionRing& o) const {
    return labels_ == o.labels_ && unit_ == o.unit_ && dual_ == o.dual_ && n_ == o.n_;
  }

 private:
  std::vector<std::string> labels_;
  size_t unit_ = 0;
  std::vector<size_t> dual_;
  std::vector<int64_t> n_;
  std::vector<std::vector<std::pair<size_t, int64_t>>> sparse_;
};

FusionRing pointed_ring(const FinAbGroup& g);
FusionRing ising_ring();
// Basis X_i (x) Y_j at index i * rank(b) + j.
FusionRing tensor_product(const FusionRing& a, const FusionRing& b);

// A sorted set of basis indices closed under products and duals.
struct FusionSubring {
  std::vector<size_t> indices;

  bool contains(size_t i) const;
  size_t size() const { return indices.size(); }
  bool operator==(const FusionSubring&) const = default;
  auto operator<=>(const FusionSubring&) const = default;
};

FusionSubring subring_generated(const FusionRing& r, const std::vector<size_t>& generators);
FusionSubring whole_ring(const FusionRing& r);

struct SubringLattice {
  std::vector<FusionSubring> subrings;  // by size, then indices
  std::vector<std::vector<size_t>> meet, join;
  bool modular = true;  // checked only when the ring is commutative
};

SubringLattice all_subrings(const FusionRing& r, const Limits& limits = {});
FusionSubring adjoint_subring(const FusionRing& r);

struct Grading {
  FinAbGroup group;
  std::vector<Element> deg;

  std::vector<size_t> component(const Element& g) const;
  bool faithful() const;
  bool respected_by(const FusionRing& r) const;
};

Grading universal_grading(const FusionRing& r, const Limits& limits = {});

struct FPData {
  std::vector<double> fpdim;
  double total = 0;  // sum of squares
  double tolerance = 1e-6;
};

FPData fp_dims(const FusionRing& r, double tolerance = 1e-6);

FusionSubring pointed_part(const FusionRing& r);

// Grading by the square-free part of round(FPdim(X)^2), valued in the
// elementary abelian 2-group on the primes that occur.
struct FPSquareGrading {
  Grading grading;
  std::vector<int64_t> primes;
  std::vector<int64_t> squarefree;  // per basis element
};

FPSquareGrading fp_square_grading(const FusionRing& r, double tolerance = 1e-6);
bool is_weakly_integral(const FusionRing& r, double tolerance = 1e-6);
FusionSubring integral_part(const FusionRing& r, double tolerance = 1e-6);

}  // namespace braidforge
