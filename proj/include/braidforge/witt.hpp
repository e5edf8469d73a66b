#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "braidforge/qform.hpp"

namespace braidforge {

struct GaussReport {
  CycloNum tau_plus;
  CycloNum tau_minus;
  bool norm_check = false;             // tau+ tau- = |G|; only meaningful for metric forms
  std::optional<mpq_class> positivity;  // tau+ when it is rational
};

// sum_a q(a)^{sign}
CycloNum tau(const PreMetricGroup& m, int sign = 1);
GaussReport gauss_sum(const PreMetricGroup& m);

struct HyperbolicResult {
  bool hyperbolic = false;
  std::optional<Subgroup> witness;  // a Lagrangian subgroup
};

HyperbolicResult is_hyperbolic(const PreMetricGroup& m, const Limits& limits = {});

// Witt class of a metric group: an anisotropic representative per prime.
// Primes carrying the zero class are absent.
struct WittClass {
  std::map<int64_t, AnisotropicLabel> parts;

  bool is_zero() const { return parts.empty(); }
  std::string str() const;
  bool operator==(const WittClass&) const = default;
};

WittClass witt_class(const PreMetricGroup& m);
PreMetricGroup representative(const WittClass& c);
WittClass witt_add(const WittClass& a, const WittClass& b);
WittClass witt_neg(const WittClass& c);
WittClass witt_scale(int64_t n, const WittClass& c);

// tau+ of the p-part modulo positive rationals, written as unit * g^radical
// with g = 1+i for p = 2 and g = tau+(F_p, x^2/p) (a square root of +-p)
// for odd p. The unit is a root of unity of order dividing 8.
struct TauLabel {
  RootExp unit;
  int radical = 0;

  std::string str() const;
  bool operator==(const TauLabel&) const = default;
  auto operator<=>(const TauLabel&) const = default;
};

TauLabel tau_image(const WittClass& c, int64_t p);
// The same reduction for an arbitrary nonzero element of the cyclotomic field
// generated by the p-part Gauss sums; absent when no label fits.
std::optional<TauLabel> tau_label(const CycloNum& value, int64_t p);

}  // namespace braidforge
