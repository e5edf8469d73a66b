#include <set>

#include "braidforge/error.hpp"
#include "braidforge/qform.hpp"
#include "numtheory.hpp"

namespace braidforge {

namespace {

std::vector<int64_t> subgroup_generators(const Subgroup& h) {
  std::vector<int64_t> out;
  for (const Element& e : h.generators()) out.push_back(h.parent().index_of(e));
  return out;
}

struct Split {
  int copies = 0;
  PreMetricGroup rest;
};

std::optional<Split> split_planes(const PreMetricGroup& m, int64_t p) {
  if (is_anisotropic(m)) return Split{0, m};
  const FinAbGroup& g = m.group();
  std::vector<int64_t> iso;
  for (int64_t x = 1; x < g.order(); ++x)
    if (m.q(x).is_zero() && g.scale_index(p, x) == 0) iso.push_back(x);
  std::set<std::vector<int64_t>> tried;
  for (size_t i = 0; i < iso.size(); ++i)
    for (size_t j = i + 1; j < iso.size(); ++j) {
      if (m.b(iso[i], iso[j]).is_zero()) continue;
      Subgroup plane = span_indices(g, {iso[i], iso[j]});
      if (!tried.insert(plane.members()).second) continue;
      PreMetricGroup rest = restrict(m, orthogonal_complement(m, plane));
      if (auto r = split_planes(rest, p)) {
        ++r->copies;
        return r;
      }
    }
  return std::nullopt;
}

bool pairing_criterion_p(const PreMetricGroup& m, const Limits& limits) {
  auto iso = isotropic_subgroups(m, limits);
  for (const auto& a : iso) {
    std::vector<int64_t> agens = subgroup_generators(a.subgroup);
    bool found = false;
    for (const auto& b : iso) {
      if (b.subgroup.size() != a.subgroup.size()) continue;
      std::vector<int64_t> bgens = subgroup_generators(b.subgroup);
      auto kernel_trivial = [&m](const Subgroup& s, const std::vector<int64_t>& against) {
        for (int64_t x : s.members()) {
          if (x == 0) continue;
          bool in_kernel = true;
          for (int64_t y : against)
            if (!m.b(x, y).is_zero()) {
              in_kernel = false;
              break;
            }
          if (in_kernel) return false;
        }
        return true;
      };
      if (kernel_trivial(a.subgroup, bgens) && kernel_trivial(b.subgroup, agens)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

bool is_weakly_anisotropic_by_definition(const PreMetricGroup& m, const Limits& limits) {
  auto iso = isotropic_subgroups(m, limits);
  if (iso.size() == 1) return true;
  auto auts = form_automorphisms(m, limits);
  for (const auto& s : iso) {
    if (s.subgroup.is_trivial()) continue;
    std::vector<int64_t> gens = subgroup_generators(s.subgroup);
    bool stable = true;
    for (const GroupHom& f : auts) {
      for (int64_t x : gens)
        if (!s.subgroup.contains_index(f.apply_index(x))) {
          stable = false;
          break;
        }
      if (!stable) break;
    }
    if (stable) return false;
  }
  return true;
}

bool is_weakly_anisotropic(const PreMetricGroup& m, const Limits& limits) {
  for (int64_t p : prime_divisors(m.order()))
    if (!is_weakly_anisotropic_by_definition(sylow_component(m, p), limits)) return false;
  return true;
}

std::optional<WapDecomposition> wap_decompose(const PreMetricGroup& m, const Limits&) {
  WapDecomposition out;
  for (int64_t p : prime_divisors(m.order())) {
    auto s = split_planes(sylow_component(m, p), p);
    if (!s) return std::nullopt;
    out.hyperbolic_copies[p] = s->copies;
    out.anisotropic = direct_sum(out.anisotropic, s->rest);
  }
  return out;
}

bool wap_pairing_criterion(const PreMetricGroup& m, const Limits& limits) {
  for (int64_t p : prime_divisors(m.order()))
    if (!pairing_criterion_p(sylow_component(m, p), limits)) return false;
  return true;
}

std::optional<bool> wap_odd_criterion(const PreMetricGroup& m) {
  if (m.order() == 1) return true;
  auto primes = prime_divisors(m.order());
  if (primes.size() != 1 || primes[0] == 2) return std::nullopt;
  const int64_t p = primes[0];
  for (int64_t n : m.group().orders())
    if (n != p) return false;
  return is_metric(m);
}

}  // namespace braidforge
