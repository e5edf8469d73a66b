#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <stdexcept>

#include "braidforge/kernels.hpp"

using namespace braidforge;

TEST_CASE("parallel Gauss-sum accumulation matches the serial reference") {
  std::mt19937_64 rng(9);
  for (int rep = 0; rep < 40; ++rep) {
    std::vector<RootExp> values;
    int64_t den = 1 + rng() % 48;
    for (int i = 0; i < 500; ++i) values.emplace_back(static_cast<int64_t>(rng() % 1000), den);
    for (int sign : {1, -1}) {
      int64_t d = kernels::common_denominator(values);
      CHECK(kernels::exponent_histogram(values, d, sign) == kernels::serial::exponent_histogram(values, d, sign));
      CHECK(kernels::root_sum(values, sign) == kernels::serial::root_sum(values, sign));
    }
  }
}

TEST_CASE("parallel matrix construction matches the serial reference") {
  auto f = [](size_t i, size_t j) { return embed(RootExp(static_cast<int64_t>(i * j), 7)) + CycloNum(static_cast<int64_t>(i)); };
  CHECK(kernels::build_matrix(9, f) == kernels::serial::build_matrix(9, f));
}

TEST_CASE("parallel map preserves order and rethrows") {
  auto sq = [](size_t i) { return static_cast<int64_t>(i * i); };
  CHECK(kernels::parallel_map(100, sq) == kernels::serial::parallel_map(100, sq));
  CHECK_THROWS_AS(kernels::parallel_map(10,
                                        [](size_t i) -> int {
                                          if (i == 7) throw std::runtime_error("boom");
                                          return 0;
                                        }),
                  std::runtime_error);
}
