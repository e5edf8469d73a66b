#pragma once

// Data-parallel kernels. Each parallel routine has a serial reference with the
// same signature in namespace `serial`; tests and benchmarks compare the two.

#include <cstdint>
#include <exception>
#include <vector>

#include "braidforge/cyclotomic.hpp"

namespace braidforge::kernels {

// counts[k] = #{i : sign * values[i] = k/den mod 1}; den must be a multiple of
// every denominator in values.
std::vector<int64_t> exponent_histogram(const std::vector<RootExp>& values, int64_t den, int sign);
// sum_i e^{2 pi i sign values[i]}
CycloNum root_sum(const std::vector<RootExp>& values, int sign);

using Matrix = std::vector<std::vector<CycloNum>>;

// Entry (i,j) = f(i,j) for an n x n matrix, rows computed in parallel.
template <class F>
Matrix build_matrix(size_t n, F f);

// Evaluates f(0..n-1) in parallel, preserving order. The first exception
// thrown by any task is rethrown after the loop.
template <class F>
auto parallel_map(size_t n, F f) -> std::vector<decltype(f(size_t{0}))>;

namespace serial {
std::vector<int64_t> exponent_histogram(const std::vector<RootExp>& values, int64_t den, int sign);
CycloNum root_sum(const std::vector<RootExp>& values, int sign);
template <class F>
Matrix build_matrix(size_t n, F f);
template <class F>
auto parallel_map(size_t n, F f) -> std::vector<decltype(f(size_t{0}))>;
}  // namespace serial

int64_t common_denominator(const std::vector<RootExp>& values);

// ---------------------------------------------------------------- templates

template <class F>
auto parallel_map(size_t n, F f) -> std::vector<decltype(f(size_t{0}))> {
  std::vector<decltype(f(size_t{0}))> out(n);
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (int64_t i = 0; i < static_cast<int64_t>(n); ++i) {
    try {
      out[i] = f(static_cast<size_t>(i));
    } catch (...) {
#pragma omp critical(braidforge_parallel_map)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

template <class F>
Matrix build_matrix(size_t n, F f) {
  return parallel_map(n, [&](size_t i) {
    std::vector<CycloNum> row(n);
    for (size_t j = 0; j < n; ++j) row[j] = f(i, j);
    return row;
  });
}

namespace serial {

template <class F>
auto parallel_map(size_t n, F f) -> std::vector<decltype(f(size_t{0}))> {
  std::vector<decltype(f(size_t{0}))> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) out.push_back(f(i));
  return out;
}

template <class F>
Matrix build_matrix(size_t n, F f) {
  Matrix m(n, std::vector<CycloNum>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m[i][j] = f(i, j);
  return m;
}

}  // namespace serial
}  // namespace braidforge::kernels
