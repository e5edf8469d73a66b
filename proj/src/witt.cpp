#include "braidforge/witt.hpp"

#include "braidforge/error.hpp"
#include "braidforge/kernels.hpp"

namespace braidforge {

CycloNum tau(const PreMetricGroup& m, int sign) { return kernels::root_sum(m.values(), sign); }

GaussReport gauss_sum(const PreMetricGroup& m) {
  GaussReport r;
  r.tau_plus = tau(m, 1);
  r.tau_minus = tau(m, -1);
  r.norm_check = r.tau_plus * r.tau_minus == CycloNum(m.order());
  r.positivity = r.tau_plus.as_rational();
  return r;
}

HyperbolicResult is_hyperbolic(const PreMetricGroup& m, const Limits& limits) {
  HyperbolicResult r;
  for (auto& s : isotropic_subgroups(m, limits))
    if (s.lagrangian) {
      r.hyperbolic = true;
      r.witness = std::move(s.subgroup);
      break;
    }
  return r;
}

std::string WittClass::str() const {
  if (parts.empty()) return "0";
  std::string out;
  for (const auto& [p, l] : parts) {
    if (!out.empty()) out += " + ";
    out += l.str();
  }
  return out;
}

WittClass witt_class(const PreMetricGroup& m) {
  if (!is_metric(m)) fail(ErrorKind::NotMetric, "Witt classes are defined for metric groups");
  WittClass c;
  PreMetricGroup an = anisotropic_reduction(m);
  for (const auto& l : classify_anisotropic(an))
    if (l.kind != AnisotropicLabel::Kind::Trivial) c.parts[l.p] = l;
  return c;
}

PreMetricGroup representative(const WittClass& c) {
  PreMetricGroup acc;
  for (const auto& [p, l] : c.parts) acc = direct_sum(acc, build_form(l));
  return acc;
}

WittClass witt_add(const WittClass& a, const WittClass& b) {
  return witt_class(direct_sum(representative(a), representative(b)));
}

WittClass witt_neg(const WittClass& c) { return witt_class(negate(representative(c))); }

WittClass witt_scale(int64_t n, const WittClass& c) {
  WittClass base = n < 0 ? witt_neg(c) : c;
  WittClass acc;
  for (int64_t i = 0; i < (n < 0 ? -n : n); ++i) acc = witt_add(acc, base);
  return acc;
}

std::string TauLabel::str() const {
  std::string out = "zeta^" + unit.str();
  if (radical) out += "*g";
  return out;
}

namespace {

CycloNum radical_generator(int64_t p) {
  if (p == 2) return CycloNum(1) + embed(RootExp(1, 4));
  return tau(odd_rank1(p, 1), 1);
}

}  // namespace

std::optional<TauLabel> tau_label(const CycloNum& value, int64_t p) {
  if (value.is_zero()) return std::nullopt;
  CycloNum g = radical_generator(p);
  for (int radical = 0; radical < 2; ++radical) {
    CycloNum base = radical ? value / g : value;
    for (int64_t j = 0; j < 8; ++j) {
      RootExp u(j, 8);
      auto r = (base * embed(-u)).as_rational();
      if (r && *r > 0) return TauLabel{u, radical};
    }
  }
  return std::nullopt;
}

TauLabel tau_image(const WittClass& c, int64_t p) {
  auto it = c.parts.find(p);
  if (it == c.parts.end()) return TauLabel{};
  auto l = tau_label(tau(build_form(it->second), 1), p);
  if (!l) fail(ErrorKind::ClassificationBug, "Gauss sum outside the expected image for p = " + std::to_string(p));
  return *l;
}

}  // namespace braidforge
