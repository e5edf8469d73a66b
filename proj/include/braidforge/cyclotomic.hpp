#pragma once

#include <gmpxx.h>

#include <complex>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace braidforge {

// A root of unity e^{2 pi i r}, stored as the reduced fraction r in [0,1).
class RootExp {
 public:
  RootExp() = default;
  RootExp(int64_t num, int64_t den);

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  RootExp operator+(const RootExp& o) const;
  RootExp operator-(const RootExp& o) const;
  RootExp operator-() const { return RootExp(-num_, den_); }
  RootExp scaled(int64_t k) const { return RootExp(num_ * k, den_); }

  bool operator==(const RootExp&) const = default;
  std::strong_ordering operator<=>(const RootExp& o) const;

  // "a/b"; parse accepts unreduced and out-of-range fractions and normalizes.
  std::string str() const;
  static RootExp parse(const std::string& s);

 private:
  int64_t num_ = 0;
  int64_t den_ = 1;
};

// Exact element of Q(zeta_n) in the power basis 1, z, ..., z^{phi(n)-1} modulo
// the cyclotomic polynomial. The conductor n is always the minimal one, with
// the convention that n is never 2 mod 4; rationals have conductor 1.
class CycloNum {
 public:
  CycloNum() : coeffs_{0} {}
  CycloNum(const mpq_class& q) : coeffs_{q} { coeffs_[0].canonicalize(); }
  CycloNum(int64_t v) : coeffs_{mpq_class(static_cast<long>(v))} {}

  // Element sum_j c[j] z_n^j for a coefficient list in the power basis of
  // conductor n (length at most phi(n)).
  static CycloNum from_coeffs(int64_t n, std::vector<mpq_class> c);
  // Element sum_j c[j] z_n^j for exponents 0 <= j < c.size(), reduced mod n.
  static CycloNum from_exponents(int64_t n, const std::vector<mpq_class>& c);
  static CycloNum from_exponent_counts(int64_t n, const std::vector<int64_t>& counts);
  static CycloNum root(const RootExp& r);

  int64_t conductor() const { return n_; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  CycloNum operator+(const CycloNum& o) const;
  CycloNum operator-(const CycloNum& o) const;
  CycloNum operator*(const CycloNum& o) const;
  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& o) { return *this = *this + o; }
  CycloNum& operator-=(const CycloNum& o) { return *this = *this - o; }
  CycloNum& operator*=(const CycloNum& o) { return *this = *this * o; }
  CycloNum scaled(const mpq_class& q) const;
  CycloNum pow(int64_t e) const;

  CycloNum inverse() const;
  CycloNum operator/(const CycloNum& o) const { return *this * o.inverse(); }
  // The Galois automorphism z -> z^k, k coprime to the conductor.
  CycloNum galois(int64_t k) const;
  CycloNum conj() const { return galois(-1); }

  std::optional<mpq_class> as_rational() const;
  std::optional<RootExp> as_root_of_unity() const;
  std::complex<double> to_complex() const;
  std::string str() const;

  bool operator==(const CycloNum& o) const { return n_ == o.n_ && coeffs_ == o.coeffs_; }

 private:
  int64_t n_ = 1;
  std::vector<mpq_class> coeffs_;

  void minimize();
};

CycloNum embed(const RootExp& r);
CycloNum conjugate(const CycloNum& a);
CycloNum invert(const CycloNum& a);
std::optional<mpq_class> as_rational(const CycloNum& a);
std::optional<RootExp> is_root_of_unity(const CycloNum& a);

int64_t euler_phi(int64_t n);

// "p/q" with q always present; parse accepts "p/q", "p", and unreduced forms.
std::string rational_str(const mpq_class& q);
mpq_class parse_rational(const std::string& s);

}  // namespace braidforge
