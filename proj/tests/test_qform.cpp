#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "braidforge/error.hpp"
#include "braidforge/qform.hpp"
#include "oracles.hpp"

using namespace braidforge;

namespace {

std::set<std::set<int64_t>> as_sets(const std::vector<IsotropicSubgroup>& v) {
  std::set<std::set<int64_t>> out;
  for (const auto& s : v) out.insert({s.subgroup.members().begin(), s.subgroup.members().end()});
  return out;
}

// Every value table with entries in (1/den)Z/Z that satisfies the axioms.
int64_t brute_force_form_count(const FinAbGroup& g) {
  const int64_t den = 2 * g.exponent();
  const int64_t n = g.order();
  std::vector<int64_t> t(n, 0);
  int64_t count = 0;
  for (;;) {
    std::vector<RootExp> q;
    for (int64_t v : t) q.emplace_back(v, den);
    if (oracle::is_quadratic(g, q)) ++count;
    int64_t i = 1;  // entry 0 stays zero
    while (i < n && ++t[i] == den) t[i++] = 0;
    if (i == n) break;
  }
  return count;
}

}  // namespace

TEST_CASE("validation rejects malformed tables") {
  FinAbGroup z2({2});
  CHECK_NOTHROW(PreMetricGroup::validate(z2, {RootExp(), RootExp(1, 4)}));
  try {
    PreMetricGroup::validate(z2, {RootExp(1, 2), RootExp(1, 4)});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotNormalized);
  }
  try {
    PreMetricGroup::validate(FinAbGroup({3}), {RootExp(), RootExp(1, 3), RootExp(2, 3)});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotEven);
  }
  try {
    PreMetricGroup::validate(FinAbGroup({4}), {RootExp(), RootExp(1, 8), RootExp(1, 8), RootExp(1, 8)});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotQuadratic);
  }
  try {
    PreMetricGroup::validate(z2, {RootExp()});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SchemaError);
  }
}

TEST_CASE("standard forms are quadratic") {
  for (int64_t p : {2, 3, 5, 7}) {
    CHECK(oracle::is_quadratic(hyperbolic(p).group(), hyperbolic(p).values()));
    CHECK(oracle::is_quadratic(norm_form(p).group(), norm_form(p).values()));
    CHECK(is_anisotropic(norm_form(p)));
    CHECK(is_metric(hyperbolic(p)));
  }
  for (int64_t k = 0; k < 8; ++k) {
    auto m = m_form(RootExp(k, 8));
    CHECK(oracle::is_quadratic(m.group(), m.values()));
    CHECK(is_metric(m));
  }
  CHECK(degeneracy(slight_deg2()).tag == Degeneracy::slightly_degenerate);
  CHECK(degeneracy(slight_deg4()).tag == Degeneracy::slightly_degenerate);
  CHECK(degeneracy(cyclic_form(2, RootExp())).tag == Degeneracy::degenerate_other);
}

TEST_CASE("form enumeration matches brute force") {
  for (auto orders : std::vector<std::vector<int64_t>>{{2}, {3}, {4}, {5}, {2, 2}, {2, 2, 2}}) {
    FinAbGroup g(orders);
    INFO(to_string(g));
    auto forms = all_forms(g);
    CHECK(static_cast<int64_t>(forms.size()) == brute_force_form_count(g));
    std::set<std::vector<RootExp>> distinct;
    for (const auto& m : forms) {
      CHECK(oracle::is_quadratic(g, m.values()));
      distinct.insert(m.values());
    }
    CHECK(distinct.size() == forms.size());
  }
  CHECK(count_forms(FinAbGroup({2, 2, 2, 2})) == 16384);
}

TEST_CASE("groups of a given order") {
  CHECK(groups_of_order(1).size() == 1);
  CHECK(groups_of_order(8).size() == 3);
  CHECK(groups_of_order(16).size() == 5);
  CHECK(groups_of_order(36).size() == 4);
  CHECK(groups_of_order(27).size() == 3);
}

TEST_CASE("isotropic subgroups agree with the subgroup oracle") {
  std::mt19937_64 rng(11);
  for (int64_t n = 2; n <= 16; ++n)
    for (const auto& g : groups_of_order(n))
      for (int rep = 0; rep < 6; ++rep) {
        auto m = random_form(g, rng);
        INFO(to_string(g));
        auto iso = isotropic_subgroups(m);
        auto expect = oracle::isotropic_subgroups(g, m.values());
        CHECK(as_sets(iso) == expect);
        for (const auto& s : iso) {
          std::set<int64_t> hs(s.subgroup.members().begin(), s.subgroup.members().end());
          bool extendable = false;
          for (const auto& t : expect)
            if (t.size() > hs.size() && std::includes(t.begin(), t.end(), hs.begin(), hs.end())) extendable = true;
          CHECK(s.maximal == !extendable);
          CHECK(s.lagrangian == (orthogonal_complement(m, s.subgroup) == s.subgroup));
        }
      }
}

TEST_CASE("isotropic enumeration respects the guard") {
  Limits tight;
  tight.enum_guard = 8;
  CHECK_THROWS_AS(isotropic_subgroups(hyperbolic(3), tight), Error);
}

TEST_CASE("quotients and anisotropic reduction") {
  std::mt19937_64 rng(5);
  for (int64_t n = 2; n <= 36; ++n)
    for (const auto& g : groups_of_order(n)) {
      auto m = random_form(g, rng);
      Subgroup h = greedy_maximal_isotropic(m);
      CHECK(is_isotropic(m, h));
      auto q = quotient_form(m, h);
      CHECK(oracle::is_quadratic(q.group(), q.values()));
      if (is_metric(m)) {
        CHECK(is_anisotropic(q));
        CHECK(q.order() * h.size() * h.size() == m.order());
      }
    }
  CHECK(anisotropic_reduction(hyperbolic(5)).order() == 1);
  CHECK_THROWS_AS(quotient_form(a_form(1), whole_group(FinAbGroup({2}))), Error);
}

TEST_CASE("direct sums, restriction and negation") {
  auto s = direct_sum(a_form(1), odd_rank1(3, 1));
  CHECK(s.group() == FinAbGroup({6}));
  CHECK(oracle::is_quadratic(s.group(), s.values()));
  CHECK(sylow_component(s, 2) == a_form(1));
  CHECK(sylow_component(s, 3) == odd_rank1(3, 1));
  CHECK(negate(a_form(1)) == a_form(-1));
  auto d = direct_sum(hyperbolic(2), m_form(RootExp(1, 2)));
  CHECK(d.group() == FinAbGroup({2, 2, 2, 2}));
  CHECK(oracle::is_quadratic(d.group(), d.values()));
}

TEST_CASE("form isomorphism search agrees with the brute-force oracle") {
  std::mt19937_64 rng(3);
  for (auto orders : std::vector<std::vector<int64_t>>{{4}, {2, 2}, {2, 4}, {3, 3}, {2, 2, 2}}) {
    FinAbGroup g(orders);
    for (int rep = 0; rep < 20; ++rep) {
      auto a = random_form(g, rng), b = random_form(g, rng);
      auto f = isomorphic(a, b);
      CHECK(f.has_value() == oracle::form_isomorphic(g, a.values(), g, b.values()));
      if (f) {
        for (int64_t x = 0; x < g.order(); ++x) CHECK(b.q(f->apply_index(x)) == a.q(x));
      }
    }
  }
  CHECK(form_automorphisms(hyperbolic(2)).size() == 2);
  CHECK(form_automorphisms(m_form(RootExp(1, 2))).size() == 6);
}

TEST_CASE("core of a hyperbolic sum is trivial and Gamma acts") {
  auto c = core(direct_sum(hyperbolic(2), a_form(1)));
  CHECK(c.form == a_form(1));
  CHECK(c.gamma_computed);
  CHECK(c.gamma.size() == 1);
  Limits tight;
  tight.aut_guard = 4;
  auto c2 = core(direct_sum(hyperbolic(2), a_form(1)), tight);
  CHECK_FALSE(c2.gamma_computed);
}

TEST_CASE("classification of all anisotropic forms of order at most 9") {
  struct Class {
    PreMetricGroup rep;
    std::vector<AnisotropicLabel> label;
  };
  std::vector<Class> classes;
  for (int64_t n = 1; n <= 9; ++n)
    for (const auto& g : groups_of_order(n))
      for (const auto& m : all_forms(g)) {
        if (!is_anisotropic(m)) continue;
        auto label = classify_anisotropic(m);
        bool placed = false;
        for (const auto& c : classes) {
          bool same = oracle::form_isomorphic(c.rep.group(), c.rep.values(), g, m.values());
          CHECK(same == (c.label == label));
          placed = placed || same;
        }
        if (!placed) classes.push_back({m, label});
      }
  CHECK(classes.size() == 31);
  for (const auto& c : classes) {
    auto built = build_form(c.label);
    CHECK(oracle::form_isomorphic(built.group(), built.values(), c.rep.group(), c.rep.values()));
  }
}

TEST_CASE("catalog labels rebuild to themselves") {
  for (int64_t p : {2, 3, 5, 7})
    for (const auto& l : anisotropic_catalog(p, false)) {
      INFO(l.str());
      auto m = build_form(l);
      CHECK(m.order() == l.order());
      CHECK(is_anisotropic(m));
      CHECK(is_metric(m) == l.is_metric());
      CHECK(classify_anisotropic(m) == std::vector<AnisotropicLabel>{l});
    }
  CHECK_THROWS_AS(classify_anisotropic(hyperbolic(2)), Error);
}

TEST_CASE("weak anisotropy examples") {
  CHECK(is_weakly_anisotropic(hyperbolic(3)));
  CHECK(is_weakly_anisotropic(direct_sum(hyperbolic(2), a_form(1))));
  CHECK_FALSE(is_weakly_anisotropic(cyclic_form(9, RootExp(1, 9))));
  auto d = wap_decompose(direct_sum(hyperbolic(3), odd_rank1(3, -1)));
  REQUIRE(d);
  CHECK(d->hyperbolic_copies.at(3) == 1);
  CHECK(d->anisotropic == odd_rank1(3, -1));
  CHECK(wap_odd_criterion(hyperbolic(3)) == std::optional<bool>(true));
  CHECK(wap_odd_criterion(cyclic_form(9, RootExp(1, 9))) == std::optional<bool>(false));
  CHECK_FALSE(wap_odd_criterion(a_form(1)).has_value());
}

TEST_CASE("weak anisotropy criteria agree on small p-groups") {
  for (int64_t n : {2, 3, 4, 8, 9, 27})
    for (const auto& g : groups_of_order(n))
      for (const auto& m : all_forms(g)) {
        bool i = is_weakly_anisotropic(m);
        CHECK(wap_decompose(m).has_value() == i);
        CHECK(wap_pairing_criterion(m) == i);
        if (auto iv = wap_odd_criterion(m); iv && n % 2) CHECK(*iv == i);
      }
}
