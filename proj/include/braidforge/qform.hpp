#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "braidforge/abelian.hpp"
#include "braidforge/cyclotomic.hpp"
#include "braidforge/limits.hpp"

namespace braidforge {

// A finite abelian group with a quadratic form q: G -> Q/Z, stored as the
// value table in lexicographic element order.
class PreMetricGroup {
 public:
  PreMetricGroup() : values_{RootExp()} {}

  // Checks q(0) = 0, evenness and biadditivity of the polarization.
  static PreMetricGroup validate(FinAbGroup group, std::vector<RootExp> values);
  // Skips validation; for tables produced by a construction that is
  // quadratic by design.
  static PreMetricGroup unchecked(FinAbGroup group, std::vector<RootExp> values);

  const FinAbGroup& group() const { return group_; }
  int64_t order() const { return group_.order(); }
  const std::vector<RootExp>& values() const { return values_; }
  const RootExp& q(int64_t idx) const { return values_[idx]; }
  const RootExp& q(const Element& e) const { return values_[group_.index_of(e)]; }
  RootExp b(int64_t x, int64_t y) const { return values_[group_.add_index(x, y)] - values_[x] - values_[y]; }

  bool operator==(const PreMetricGroup& o) const { return group_ == o.group_ && values_ == o.values_; }

 private:
  FinAbGroup group_;
  std::vector<RootExp> values_;
};

class Bicharacter {
 public:
  explicit Bicharacter(const PreMetricGroup& m);
  const FinAbGroup& group() const { return group_; }
  const RootExp& operator()(int64_t x, int64_t y) const { return table_[x * group_.order() + y]; }

 private:
  FinAbGroup group_;
  std::vector<RootExp> table_;
};

Bicharacter bicharacter(const PreMetricGroup& m);

enum class Degeneracy { nondegenerate, slightly_degenerate, degenerate_other };
const char* to_string(Degeneracy d);

struct DegeneracyClass {
  Degeneracy tag;
  Subgroup radical;
};

DegeneracyClass degeneracy(const PreMetricGroup& m);
bool is_metric(const PreMetricGroup& m);
bool is_anisotropic(const PreMetricGroup& m);
bool is_isotropic(const PreMetricGroup& m, const Subgroup& h);

Subgroup orthogonal_complement(const PreMetricGroup& m, const Subgroup& h);

struct IsotropicSubgroup {
  Subgroup subgroup;
  bool maximal = false;
  bool lagrangian = false;
};

// Every isotropic subgroup, ordered by size and then member list.
std::vector<IsotropicSubgroup> isotropic_subgroups(const PreMetricGroup& m, const Limits& limits = {});
// A maximal isotropic subgroup grown greedily from lexicographically least
// isotropic elements; needs no enumeration guard.
Subgroup greedy_maximal_isotropic(const PreMetricGroup& m);

PreMetricGroup quotient_form(const PreMetricGroup& m, const Subgroup& h);
// H^perp/H for the greedy maximal isotropic H; anisotropic when m is metric.
PreMetricGroup anisotropic_reduction(const PreMetricGroup& m);

struct Core {
  PreMetricGroup form;
  Subgroup used;
  bool gamma_computed = false;
  std::vector<GroupHom> gamma;  // distinct automorphisms of the core
};

Core core(const PreMetricGroup& m, const Limits& limits = {}, bool with_gamma = true);

std::optional<GroupHom> isomorphic(const PreMetricGroup& a, const PreMetricGroup& b, const Limits& limits = {});
std::vector<GroupHom> form_automorphisms(const PreMetricGroup& m, const Limits& limits = {});
bool preserves_form(const PreMetricGroup& m, const GroupHom& f);

PreMetricGroup direct_sum(const PreMetricGroup& a, const PreMetricGroup& b);
PreMetricGroup restrict(const PreMetricGroup& m, const Subgroup& h);
PreMetricGroup negate(const PreMetricGroup& m);
PreMetricGroup sylow_component(const PreMetricGroup& m, int64_t p);

// ---------------------------------------------------------------- construction

// q(x) = sum_i x_i^2 c_i + sum_{i<j} x_i x_j b_ij, with b given row-major for
// i < j. Parameters must satisfy n_i^2 c_i = 2 n_i c_i = 0 and
// gcd(n_i,n_j) b_ij = 0 in Q/Z.
PreMetricGroup form_from_parameters(const FinAbGroup& g, const std::vector<RootExp>& c, const std::vector<RootExp>& b);
// Number of quadratic forms on g and the form with a given index in a fixed
// mixed-radix ordering of the parameters.
int64_t count_forms(const FinAbGroup& g);
PreMetricGroup form_at(const FinAbGroup& g, int64_t index);
std::vector<PreMetricGroup> all_forms(const FinAbGroup& g);
PreMetricGroup random_form(const FinAbGroup& g, std::mt19937_64& rng);

PreMetricGroup trivial_form();
PreMetricGroup cyclic_form(int64_t n, const RootExp& q_of_generator);
PreMetricGroup hyperbolic(int64_t p);
PreMetricGroup norm_form(int64_t p);
PreMetricGroup a_form(int i_sign);
PreMetricGroup m_form(const RootExp& xi);
PreMetricGroup odd_rank1(int64_t p, int residue);
PreMetricGroup slight_deg2();
PreMetricGroup slight_deg4();

// ---------------------------------------------------------------- classification

struct AnisotropicLabel {
  enum class Kind { Trivial, OddRank1, OddNorm, A, M, MplusA, SlightDeg2, SlightDeg4 };
  Kind kind = Kind::Trivial;
  int64_t p = 0;     // prime (2 for the 2-primary kinds)
  int residue = 0;   // OddRank1: Legendre symbol of p q(generator)
  RootExp xi;        // M, MplusA
  int i_sign = 0;    // A, MplusA, SlightDeg4

  std::string str() const;
  bool is_metric() const { return kind != Kind::SlightDeg2 && kind != Kind::SlightDeg4; }
  int64_t order() const;
  bool operator==(const AnisotropicLabel&) const = default;
  auto operator<=>(const AnisotropicLabel&) const = default;
};

// One label per prime dividing |G| (ascending), or {Trivial} for the trivial group.
std::vector<AnisotropicLabel> classify_anisotropic(const PreMetricGroup& m);
AnisotropicLabel classify_p_component(const PreMetricGroup& m, int64_t p);
PreMetricGroup build_form(const AnisotropicLabel& label);
PreMetricGroup build_form(const std::vector<AnisotropicLabel>& labels);
// Every anisotropic class with a single prime, for the given prime.
std::vector<AnisotropicLabel> anisotropic_catalog(int64_t p, bool metric_only);

// ---------------------------------------------------------------- weak anisotropy

struct WapDecomposition {
  std::map<int64_t, int> hyperbolic_copies;  // per prime
  PreMetricGroup anisotropic;
};

// By definition on the whole group: no nonzero isotropic subgroup is stable
// under every form automorphism.
bool is_weakly_anisotropic_by_definition(const PreMetricGroup& m, const Limits& limits = {});
// The same test applied to each Sylow component.
bool is_weakly_anisotropic(const PreMetricGroup& m, const Limits& limits = {});
// Splits off hyperbolic planes F_p^2 (q = xy/p) until an anisotropic part is
// left; absent when no such decomposition exists.
std::optional<WapDecomposition> wap_decompose(const PreMetricGroup& m, const Limits& limits = {});
// For every isotropic A some isotropic B pairs non-degenerately with A.
bool wap_pairing_criterion(const PreMetricGroup& m, const Limits& limits = {});
// For odd p-groups: pG = 0 and q non-degenerate. Absent for other groups.
std::optional<bool> wap_odd_criterion(const PreMetricGroup& m);

}  // namespace braidforge
