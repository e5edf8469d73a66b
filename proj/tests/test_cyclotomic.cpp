#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "braidforge/cyclotomic.hpp"
#include "braidforge/error.hpp"
#include "oracles.hpp"

using namespace braidforge;

namespace {

CycloNum z(int64_t num, int64_t den) { return embed(RootExp(num, den)); }

CycloNum random_element(std::mt19937_64& rng, int64_t n) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::vector<mpq_class> c(n);
  for (auto& x : c) x = mpq_class(coef(rng), 1 + (rng() % 3));
  return CycloNum::from_exponents(n, c);
}

}  // namespace

TEST_CASE("root exponents normalize") {
  CHECK(RootExp(3, 6) == RootExp(1, 2));
  CHECK(RootExp(-1, 4) == RootExp(3, 4));
  CHECK(RootExp(5, 4).str() == "1/4");
  CHECK(RootExp::parse("2/8") == RootExp(1, 4));
  CHECK(RootExp(1, 4) + RootExp(3, 4) == RootExp(0, 1));
  CHECK_THROWS_AS(RootExp::parse("1/x"), Error);
}

TEST_CASE("arithmetic examples") {
  CycloNum i = z(1, 4);
  CHECK((CycloNum(1) + i) * (CycloNum(1) - i) == CycloNum(2));
  CycloNum s;
  for (int j = 0; j < 5; ++j) s += z(j, 5);
  CHECK(s.is_zero());
  CycloNum l = z(2, 16) + z(-2, 16);
  CHECK(l * l == CycloNum(2));
  CHECK(embed(RootExp(1, 2)).conductor() == 1);
  CHECK(embed(RootExp(1, 2)) == CycloNum(-1));
  CHECK(z(1, 6).conductor() == 3);
  CHECK(z(1, 8).conductor() == 8);
}

TEST_CASE("inversion") {
  CHECK(invert(CycloNum(2)) == CycloNum(mpq_class(1, 2)));
  CHECK(invert(z(1, 8)) == z(7, 8));
  CycloNum one_plus_i = CycloNum(1) + z(1, 4);
  CHECK(invert(one_plus_i) == (CycloNum(1) - z(1, 4)).scaled(mpq_class(1, 2)));
  CHECK_THROWS_AS(invert(CycloNum()), Error);
  try {
    invert(CycloNum(0));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
}

TEST_CASE("conjugation") {
  CycloNum i = z(1, 4);
  CHECK(conjugate(CycloNum(1) + i) == CycloNum(1) - i);
  CHECK(conjugate(z(1, 5)) == z(4, 5));
  for (int64_t den : {3, 5, 7, 8, 12, 16, 24}) {
    for (int64_t k = 0; k < den; ++k) CHECK(conjugate(embed(RootExp(k, den))) == embed(-RootExp(k, den)));
  }
}

TEST_CASE("rationality and roots of unity") {
  CHECK(as_rational(CycloNum(mpq_class(3, 2))) == mpq_class(3, 2));
  CycloNum z8 = z(1, 8);
  CHECK(!as_rational(z8));
  CHECK(is_root_of_unity(z8) == RootExp(1, 8));
  CycloNum one_plus_i = CycloNum(1) + z(1, 4);
  CHECK(!as_rational(one_plus_i));
  CHECK(!is_root_of_unity(one_plus_i));
  CHECK(is_root_of_unity(-z(1, 3)) == RootExp(5, 6));
  for (int64_t den : {1, 2, 3, 4, 5, 6, 8, 10, 12, 15, 16, 20, 24}) {
    for (int64_t k = 0; k < den; ++k) CHECK(is_root_of_unity(z(k, den)) == RootExp(k, den));
  }
}

TEST_CASE("embedding is multiplicative and matches floating point") {
  for (int64_t a = 1; a < 24; a += 5)
    for (int64_t b = 0; b < 16; b += 3) {
      RootExp r(a, 24), s(b, 16);
      CHECK(embed(r + s) == embed(r) * embed(s));
      CHECK(oracle::close(oracle::value(embed(r)), oracle::root(a, 24)));
    }
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(7);
  std::vector<int64_t> conductors{3, 4, 5, 7, 8, 9, 12, 15, 16, 20, 21, 24, 28, 36, 40, 48};
  for (int trial = 0; trial < 60; ++trial) {
    int64_t n1 = conductors[rng() % conductors.size()], n2 = conductors[rng() % conductors.size()],
            n3 = conductors[rng() % conductors.size()];
    CycloNum a = random_element(rng, n1), b = random_element(rng, n2), c = random_element(rng, n3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(conjugate(a * b) == conjugate(a) * conjugate(b));
    CHECK(conjugate(a + b) == conjugate(a) + conjugate(b));
    CHECK(conjugate(conjugate(a)) == a);
    CHECK(oracle::close(oracle::value(a * b), oracle::value(a) * oracle::value(b), 1e-6));
    if (!a.is_zero()) CHECK(a * invert(a) == CycloNum(1));
    // re-reduction is idempotent
    CHECK(CycloNum::from_coeffs(a.conductor(), a.coeffs()) == a);
  }
}

TEST_CASE("minimal conductor agrees with the Galois-orbit oracle") {
  std::mt19937_64 rng(11);
  std::vector<int64_t> conductors{3, 4, 5, 8, 12, 15, 16, 24, 40, 48};
  for (int trial = 0; trial < 120; ++trial) {
    int64_t n = conductors[rng() % conductors.size()];
    CycloNum a;
    switch (trial % 3) {
      case 0: a = random_element(rng, n); break;
      case 1: {  // a Galois-invariant element: the trace of a random one
        CycloNum b = random_element(rng, n);
        for (int64_t k = 1; k < n; ++k)
          if (std::gcd(k, n) == 1) a += b.galois(k);
        break;
      }
      default: {  // a real element
        CycloNum b = random_element(rng, n);
        a = b + conjugate(b);
      }
    }
    bool fixed_by_all = true;
    for (int64_t k = 1; k < 48; ++k)
      if (std::gcd(k, 48 * a.conductor()) == 1) fixed_by_all = fixed_by_all && a.galois(k) == a;
    CHECK(as_rational(a).has_value() == fixed_by_all);
    CHECK(as_rational(a).has_value() == (a.conductor() == 1));
    CHECK(a.conductor() % 4 != 2);
  }
}
