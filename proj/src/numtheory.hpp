#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace braidforge::nt {

inline int64_t mod(int64_t a, int64_t n) {
  int64_t r = a % n;
  return r < 0 ? r + n : r;
}

// Prime factorization by trial division, primes ascending.
inline std::vector<std::pair<int64_t, int>> factorize(int64_t n) {
  std::vector<std::pair<int64_t, int>> out;
  for (int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline int64_t ipow(int64_t b, int e) {
  int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline int64_t inverse_mod(int64_t a, int64_t n) {
  if (n == 1) return 0;
  int64_t t = 0, new_t = 1, r = n, new_r = mod(a, n);
  while (new_r != 0) {
    int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return mod(t, n);
}

inline bool is_prime_power_of(int64_t n, int64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

inline int64_t euler_phi(int64_t n) {
  int64_t r = n;
  for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

inline int64_t squarefree_part(int64_t n) {
  int64_t r = 1;
  for (auto [p, e] : factorize(n))
    if (e % 2 == 1) r *= p;
  return r;
}

}  // namespace braidforge::nt
