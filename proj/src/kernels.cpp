#include "braidforge/kernels.hpp"

#include <numeric>

#include "numtheory.hpp"

namespace braidforge::kernels {

int64_t common_denominator(const std::vector<RootExp>& values) {
  int64_t den = 1;
  for (const auto& v : values) den = std::lcm(den, v.den());
  return den;
}

std::vector<int64_t> exponent_histogram(const std::vector<RootExp>& values, int64_t den, int sign) {
  const int64_t n = static_cast<int64_t>(values.size());
  std::vector<int64_t> counts(den, 0);
#pragma omp parallel
  {
    std::vector<int64_t> local(den, 0);
#pragma omp for schedule(static) nowait
    for (int64_t i = 0; i < n; ++i) ++local[nt::mod(sign * values[i].num() * (den / values[i].den()), den)];
#pragma omp critical(braidforge_histogram)
    for (int64_t k = 0; k < den; ++k) counts[k] += local[k];
  }
  return counts;
}

CycloNum root_sum(const std::vector<RootExp>& values, int sign) {
  int64_t den = common_denominator(values);
  return CycloNum::from_exponent_counts(den, exponent_histogram(values, den, sign));
}

namespace serial {

std::vector<int64_t> exponent_histogram(const std::vector<RootExp>& values, int64_t den, int sign) {
  std::vector<int64_t> counts(den, 0);
  for (const auto& v : values) ++counts[nt::mod(sign * v.num() * (den / v.den()), den)];
  return counts;
}

CycloNum root_sum(const std::vector<RootExp>& values, int sign) {
  CycloNum acc;
  for (const auto& v : values) acc += embed(sign > 0 ? v : -v);
  return acc;
}

}  // namespace serial
}  // namespace braidforge::kernels
