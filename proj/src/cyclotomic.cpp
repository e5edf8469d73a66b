#include "braidforge/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "braidforge/error.hpp"
#include "numtheory.hpp"

namespace braidforge {

// ---------------------------------------------------------------- RootExp

RootExp::RootExp(int64_t num, int64_t den) {
  if (den == 0) fail(ErrorKind::BadParameter, "root exponent with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num = nt::mod(num, den);
  int64_t g = std::gcd(num, den);
  if (g == 0) g = den;
  num_ = num / g;
  den_ = den / g;
}

RootExp RootExp::operator+(const RootExp& o) const {
  int64_t l = std::lcm(den_, o.den_);
  return RootExp(num_ * (l / den_) + o.num_ * (l / o.den_), l);
}

RootExp RootExp::operator-(const RootExp& o) const { return *this + (-o); }

std::strong_ordering RootExp::operator<=>(const RootExp& o) const {
  __int128 a = static_cast<__int128>(num_) * o.den_;
  __int128 b = static_cast<__int128>(o.num_) * den_;
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string RootExp::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

RootExp RootExp::parse(const std::string& s) {
  size_t slash = s.find('/');
  try {
    size_t used = 0;
    if (slash == std::string::npos) {
      int64_t v = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return RootExp(v, 1);
    }
    std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    int64_t num = std::stoll(a, &used);
    if (used != a.size()) throw std::invalid_argument(s);
    int64_t den = std::stoll(b, &used);
    if (used != b.size()) throw std::invalid_argument(s);
    return RootExp(num, den);
  } catch (const std::logic_error&) {
    fail(ErrorKind::SchemaError, "malformed fraction \"" + s + "\"");
  }
}

std::string rational_str(const mpq_class& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

mpq_class parse_rational(const std::string& s) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
    fail(ErrorKind::SchemaError, "malformed rational \"" + s + "\"");
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------- polynomial helpers

namespace {

using Poly = std::vector<mpq_class>;

const std::vector<mpz_class>& cyclotomic_poly(int64_t n) {
  thread_local std::unordered_map<int64_t, std::vector<mpz_class>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // x^n - 1 divided by Phi_d for every proper divisor d
  std::vector<mpz_class> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<mpz_class>& div = cyclotomic_poly(d);
    size_t dd = div.size() - 1;
    std::vector<mpz_class> quo(num.size() - dd, 0);
    for (size_t i = num.size(); i-- > dd;) {
      mpz_class c = num[i];
      quo[i - dd] = c;
      if (c == 0) continue;
      for (size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * div[j];
    }
    num = std::move(quo);
  }
  return cache.emplace(n, std::move(num)).first->second;
}

// Reduces an exponent array (index = power of z_n, any length) modulo z^n = 1
// and then modulo Phi_n, returning phi(n) coefficients.
Poly reduce(Poly p, int64_t n) {
  for (auto& c : p) c.canonicalize();
  if (static_cast<int64_t>(p.size()) > n) {
    for (size_t i = n; i < p.size(); ++i) p[i % n] += p[i];
    p.resize(n);
  }
  const std::vector<mpz_class>& phi = cyclotomic_poly(n);
  const size_t d = phi.size() - 1;
  for (size_t i = p.size(); i-- > d;) {
    if (sgn(p[i]) == 0) continue;
    mpq_class c = p[i];
    for (size_t j = 0; j < d; ++j)
      if (phi[j] != 0) p[i - d + j] -= c * phi[j];
    p[i] = 0;
  }
  p.resize(d);
  return p;
}

// Exponent array of length m for an element given at conductor n | m.
Poly lift(const Poly& c, int64_t n, int64_t m) {
  Poly out(m);
  int64_t step = m / n;
  for (size_t j = 0; j < c.size(); ++j)
    if (sgn(c[j]) != 0) out[j * step] = c[j];
  return out;
}

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// a = q*b + r over Q
void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
  mpq_class lead_inv = 1 / b.back();
  while (r.size() >= b.size() && !r.empty()) {
    size_t shift = r.size() - b.size();
    mpq_class c = r.back() * lead_inv;
    q[shift] = c;
    for (size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    r.pop_back();
    trim(r);
  }
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (sgn(b[j]) != 0) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

int64_t euler_phi(int64_t n) { return nt::euler_phi(n); }

// ---------------------------------------------------------------- CycloNum

bool CycloNum::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

void CycloNum::minimize() {
  if (is_zero()) {
    n_ = 1;
    coeffs_.assign(1, 0);
    return;
  }
  bool changed = true;
  while (changed && n_ > 1) {
    changed = false;
    for (auto [p, e] : nt::factorize(n_)) {
      int64_t m = n_ / p;
      if (e >= 2) {
        bool ok = true;
        for (size_t j = 0; j < coeffs_.size() && ok; ++j)
          if (j % p != 0 && sgn(coeffs_[j]) != 0) ok = false;
        if (!ok) continue;
        Poly y(coeffs_.size() / p);
        for (size_t j = 0; j < y.size(); ++j) y[j] = coeffs_[j * p];
        coeffs_ = std::move(y);
        n_ = m;
        changed = true;
        break;
      }
      // p exactly divides n: project with the relative trace to Q(z_m), then verify.
      int64_t alpha = nt::inverse_mod(p % m, m);
      int64_t beta = nt::inverse_mod(m % p, p);
      Poly exps(m);
      for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (sgn(coeffs_[j]) == 0) continue;
        int64_t jm = nt::mod(alpha * static_cast<int64_t>(j), m);
        int64_t t = nt::mod(beta * static_cast<int64_t>(j), p);
        if (t == 0)
          exps[jm] += coeffs_[j] * (p - 1);
        else
          exps[jm] -= coeffs_[j];
      }
      for (auto& c : exps) c /= (p - 1);
      Poly y = reduce(std::move(exps), m);
      if (reduce(lift(y, m, n_), n_) != coeffs_) continue;
      coeffs_ = std::move(y);
      n_ = m;
      changed = true;
      break;
    }
  }
}

CycloNum CycloNum::from_coeffs(int64_t n, std::vector<mpq_class> c) {
  if (n < 1) fail(ErrorKind::BadParameter, "conductor must be positive");
  CycloNum out;
  out.n_ = n;
  for (auto& x : c) x.canonicalize();
  out.coeffs_ = static_cast<int64_t>(c.size()) == nt::euler_phi(n) ? std::move(c) : reduce(std::move(c), n);
  out.minimize();
  return out;
}

CycloNum CycloNum::from_exponents(int64_t n, const std::vector<mpq_class>& c) {
  CycloNum out;
  out.n_ = n;
  out.coeffs_ = reduce(c, n);
  out.minimize();
  return out;
}

CycloNum CycloNum::from_exponent_counts(int64_t n, const std::vector<int64_t>& counts) {
  Poly c(counts.size());
  for (size_t i = 0; i < counts.size(); ++i) c[i] = mpq_class(static_cast<long>(counts[i]));
  return from_exponents(n, c);
}

CycloNum CycloNum::root(const RootExp& r) {
  if (r.den() <= 2) return CycloNum(r.is_zero() ? 1 : -1);
  Poly e(r.den());
  e[r.num()] = 1;
  return from_exponents(r.den(), e);
}

CycloNum CycloNum::operator+(const CycloNum& o) const {
  CycloNum out;
  if (n_ == o.n_) {
    out.n_ = n_;
    out.coeffs_ = coeffs_;
    for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += o.coeffs_[i];
  } else {
    int64_t l = std::lcm(n_, o.n_);
    Poly a = lift(coeffs_, n_, l), b = lift(o.coeffs_, o.n_, l);
    for (int64_t i = 0; i < l; ++i) a[i] += b[i];
    out.n_ = l;
    out.coeffs_ = reduce(std::move(a), l);
  }
  out.minimize();
  return out;
}

CycloNum CycloNum::operator-() const {
  CycloNum out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycloNum CycloNum::operator-(const CycloNum& o) const { return *this + (-o); }

CycloNum CycloNum::scaled(const mpq_class& q) const {
  if (sgn(q) == 0) return CycloNum();
  CycloNum out = *this;
  for (auto& c : out.coeffs_) c *= q;
  return out;
}

CycloNum CycloNum::operator*(const CycloNum& o) const {
  if (n_ == 1) return o.scaled(coeffs_[0]);
  if (o.n_ == 1) return scaled(o.coeffs_[0]);
  CycloNum out;
  if (n_ == o.n_) {
    out.n_ = n_;
    out.coeffs_ = reduce(poly_mul(coeffs_, o.coeffs_), n_);
  } else {
    int64_t l = std::lcm(n_, o.n_);
    int64_t sa = l / n_, sb = l / o.n_;
    Poly acc(l);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
      if (sgn(coeffs_[i]) == 0) continue;
      for (size_t j = 0; j < o.coeffs_.size(); ++j)
        if (sgn(o.coeffs_[j]) != 0) acc[(i * sa + j * sb) % l] += coeffs_[i] * o.coeffs_[j];
    }
    out.n_ = l;
    out.coeffs_ = reduce(std::move(acc), l);
  }
  out.minimize();
  return out;
}

CycloNum CycloNum::pow(int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  CycloNum result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  if (n_ == 1) return CycloNum(1 / coeffs_[0]);
  const auto& phi_z = cyclotomic_poly(n_);
  Poly r0(phi_z.begin(), phi_z.end()), r1 = coeffs_;
  trim(r1);
  Poly s0, s1{1};
  while (!r1.empty()) {
    Poly q, r;
    divmod(r0, r1, q, r);
    Poly qs = poly_mul(q, s1);
    Poly s2 = s0;
    if (s2.size() < qs.size()) s2.resize(qs.size());
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant because Phi_n is irreducible
  mpq_class c = r0.at(0);
  for (auto& x : s0) x /= c;
  CycloNum out;
  out.n_ = n_;
  out.coeffs_ = reduce(std::move(s0), n_);
  if (out.coeffs_.empty()) out.coeffs_.assign(1, 0);
  out.minimize();
  return out;
}

CycloNum CycloNum::galois(int64_t k) const {
  if (n_ <= 2) return *this;
  if (std::gcd(nt::mod(k, n_), n_) != 1) fail(ErrorKind::BadParameter, "Galois exponent not coprime to conductor");
  Poly e(n_);
  for (size_t j = 0; j < coeffs_.size(); ++j)
    if (sgn(coeffs_[j]) != 0) e[nt::mod(static_cast<int64_t>(j) * k, n_)] += coeffs_[j];
  CycloNum out;
  out.n_ = n_;
  out.coeffs_ = reduce(std::move(e), n_);
  out.minimize();
  return out;
}

std::optional<mpq_class> CycloNum::as_rational() const {
  if (n_ == 1) return coeffs_[0];
  return std::nullopt;
}

std::optional<RootExp> CycloNum::as_root_of_unity() const {
  if (n_ == 1) {
    if (coeffs_[0] == 1) return RootExp(0, 1);
    if (coeffs_[0] == -1) return RootExp(1, 2);
    return std::nullopt;
  }
  if (!(*this * conj() == CycloNum(1))) return std::nullopt;
  int64_t big = n_ % 2 == 1 ? 2 * n_ : n_;
  for (int64_t j = 1; j < big; ++j) {
    RootExp r(j, big);
    int64_t cond = r.den() % 4 == 2 ? r.den() / 2 : r.den();
    if (cond != n_) continue;
    if (CycloNum::root(r) == *this) return r;
  }
  return std::nullopt;
}

std::complex<double> CycloNum::to_complex() const {
  std::complex<double> acc = 0;
  for (size_t j = 0; j < coeffs_.size(); ++j)
    acc += coeffs_[j].get_d() * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_));
  return acc;
}

std::string CycloNum::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (sgn(coeffs_[j]) == 0) continue;
    mpq_class c = coeffs_[j];
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0)
      os << "-";
    mpq_class a = abs(c);
    if (j == 0)
      os << a.get_str();
    else {
      if (a != 1) os << a.get_str() << "*";
      os << "E(" << n_ << ")";
      if (j > 1) os << "^" << j;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

CycloNum embed(const RootExp& r) { return CycloNum::root(r); }
CycloNum conjugate(const CycloNum& a) { return a.conj(); }
CycloNum invert(const CycloNum& a) { return a.inverse(); }
std::optional<mpq_class> as_rational(const CycloNum& a) { return a.as_rational(); }
std::optional<RootExp> is_root_of_unity(const CycloNum& a) { return a.as_root_of_unity(); }

}  // namespace braidforge
