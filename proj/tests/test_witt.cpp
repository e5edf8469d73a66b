#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "braidforge/error.hpp"
#include "braidforge/witt.hpp"
#include "oracles.hpp"

using namespace braidforge;

namespace {

CycloNum z(int64_t num, int64_t den) { return embed(RootExp(num, den)); }

std::vector<WittClass> catalog_classes(int64_t p) {
  std::vector<WittClass> out;
  for (const auto& l : anisotropic_catalog(p, true)) out.push_back(witt_class(build_form(l)));
  return out;
}

}  // namespace

TEST_CASE("Gauss sum table") {
  CHECK(tau(a_form(1)) == CycloNum(1) + z(1, 4));
  for (int64_t p : {2, 3, 5, 7}) CHECK(tau(norm_form(p)) == CycloNum(-p));
  for (int64_t k = 0; k < 8; ++k) CHECK(tau(m_form(RootExp(k, 8))) == z(k, 8) * CycloNum(2));
  CHECK(tau(odd_rank1(3, 1)) * tau(odd_rank1(3, 1)) == CycloNum(-3));
  CHECK(tau(odd_rank1(5, 1)) * tau(odd_rank1(5, 1)) == CycloNum(5));
}

TEST_CASE("Gauss sums agree with floating point") {
  std::mt19937_64 rng(17);
  for (int64_t n = 1; n <= 36; ++n)
    for (const auto& g : groups_of_order(n)) {
      auto m = random_form(g, rng);
      auto r = gauss_sum(m);
      CHECK(oracle::close(oracle::value(r.tau_plus), oracle::gauss(m.values(), 1)));
      CHECK(oracle::close(oracle::value(r.tau_minus), oracle::gauss(m.values(), -1)));
      CHECK(r.tau_minus == r.tau_plus.conj());
      if (is_metric(m)) CHECK(r.norm_check);
    }
}

TEST_CASE("Gauss sums are multiplicative and reduce along isotropic subgroups") {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 60; ++rep) {
    auto ga = groups_of_order(1 + rng() % 8), gb = groups_of_order(1 + rng() % 8);
    auto a = random_form(ga[rng() % ga.size()], rng), b = random_form(gb[rng() % gb.size()], rng);
    auto s = direct_sum(a, b);
    CHECK(tau(s) == tau(a) * tau(b));
    CHECK(tau(s, -1) == tau(a, -1) * tau(b, -1));
    for (const auto& h : isotropic_subgroups(s)) {
      auto q = quotient_form(s, h.subgroup);
      CHECK(tau(s) == tau(q) * CycloNum(h.subgroup.size()));
    }
  }
}

TEST_CASE("hyperbolicity") {
  auto h = is_hyperbolic(hyperbolic(2));
  CHECK(h.hyperbolic);
  REQUIRE(h.witness);
  CHECK(h.witness->size() * h.witness->size() == 4);
  CHECK_FALSE(is_hyperbolic(norm_form(3)).hyperbolic);
  // positive integer Gauss sum <=> hyperbolic, on metric p-groups up to order 81
  for (int64_t n : {4, 8, 9, 16, 25, 27, 49, 81})
    for (const auto& g : groups_of_order(n)) {
      if (count_forms(g) > 800) continue;
      for (const auto& m : all_forms(g)) {
        if (!is_metric(m)) continue;
        auto t = tau(m).as_rational();
        bool positive_integer = t && *t > 0 && t->get_den() == 1;
        CHECK(positive_integer == is_hyperbolic(m).hyperbolic);
      }
    }
}

TEST_CASE("Witt classes") {
  CHECK(witt_class(hyperbolic(3)).is_zero());
  auto wa = witt_class(a_form(1));
  REQUIRE(wa.parts.count(2));
  CHECK(wa.parts.at(2).kind == AnisotropicLabel::Kind::A);
  auto big = direct_sum(direct_sum(a_form(1), a_form(1)), m_form(RootExp(3, 4)));
  CHECK(tau(big) == CycloNum(4));
  CHECK(witt_class(big).is_zero());
  CHECK(is_hyperbolic(big).hyperbolic);
  CHECK(witt_add(wa, witt_class(a_form(-1))).is_zero());
  CHECK_THROWS_AS(witt_class(slight_deg2()), Error);
  // the order-2 class with Gauss sum -2
  auto c = witt_class(m_form(RootExp(1, 2)));
  CHECK(tau(representative(c)) == CycloNum(-2));
  CHECK(witt_scale(2, c).is_zero());
}

TEST_CASE("Witt group laws on the catalog") {
  for (int64_t p : {2, 3, 5}) {
    auto cs = catalog_classes(p);
    for (const auto& a : cs) {
      CHECK(witt_scale(8, a).is_zero());
      CHECK(witt_add(a, witt_neg(a)).is_zero());
      for (const auto& b : cs) {
        CHECK(witt_add(a, b) == witt_add(b, a));
        for (const auto& c : cs) CHECK(witt_add(witt_add(a, b), c) == witt_add(a, witt_add(b, c)));
      }
    }
    std::set<TauLabel> labels;
    for (const auto& a : cs) labels.insert(tau_image(a, p));
    CHECK(labels.size() == cs.size());
  }
}

TEST_CASE("tau image labels") {
  CHECK(tau_image(WittClass{}, 2) == TauLabel{});
  CHECK(tau_image(witt_class(a_form(1)), 2) == TauLabel{RootExp(), 1});
  CHECK(tau_image(witt_class(odd_rank1(3, 1)), 3) == TauLabel{RootExp(), 1});
  CHECK(tau_image(witt_class(odd_rank1(3, -1)), 3) == TauLabel{RootExp(1, 2), 1});
  CHECK(tau_image(witt_class(norm_form(3)), 3) == TauLabel{RootExp(1, 2), 0});
}
