#pragma once
#include <numeric>
#include <string>
#include <vector>

#include "trivzero/padic/functions.hpp"

namespace tz {

// exp(2 pi i e / n), kept reduced
struct RootOfUnity {
  long n = 1, e = 0;
  RootOfUnity() = default;
  RootOfUnity(long n_, long e_) : n(n_), e(((e_ % n_) + n_) % n_) {
    long g = std::gcd(n, e);
    if (e == 0) {
      n = 1;
    } else {
      n /= g;
      e /= g;
    }
  }
  static RootOfUnity sign(int s) { return s > 0 ? RootOfUnity() : RootOfUnity(2, 1); }
  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
    long L = std::lcm(a.n, b.n);
    return RootOfUnity(L, a.e * (L / a.n) + b.e * (L / b.n));
  }
  RootOfUnity inverse() const { return RootOfUnity(n, -e); }
  RootOfUnity pow(long k) const { return RootOfUnity(n, e * k); }
  friend bool operator==(const RootOfUnity& a, const RootOfUnity& b) { return a.n == b.n && a.e == b.e; }
  friend bool operator!=(const RootOfUnity& a, const RootOfUnity& b) { return !(a == b); }
  bool is_one() const { return n == 1; }
  // +-1 as an integer, 0 otherwise
  int as_sign() const { return n == 1 ? 1 : (n == 2 ? -1 : 0); }
  std::string to_string() const { return n == 1 ? "1" : (n == 2 ? "-1" : "z" + std::to_string(n) + "^" + std::to_string(e)); }
};

inline PadicNumber embed(const RootOfUnity& z, long p, long prec) {
  if (z.n == 1) return PadicNumber(p, 1, prec);
  if (z.n == 2) return PadicNumber(p, -1, prec);
  return root_of_unity(p, z.n, prec).pow(z.e);
}

// Element of Q(zeta_n) as a polynomial in zeta_n of degree < n, compared after reduction mod Phi_n.
class CyclotomicNumber {
 public:
  CyclotomicNumber() : n_(1), c_{Rat(0)} {}
  explicit CyclotomicNumber(const Rat& r, long n = 1) : n_(n), c_(n, Rat(0)) { c_[0] = r; }
  CyclotomicNumber(const RootOfUnity& z, long n) : n_(n), c_(n, Rat(0)) {
    require(n % z.n == 0, ErrorKind::PreconditionViolated, "root of unity not in this field");
    c_[z.e * (n / z.n)] = 1;
  }
  static CyclotomicNumber from_coeffs(long n, std::vector<Rat> c) {
    require(n >= 1 && static_cast<long>(c.size()) == n, ErrorKind::PreconditionViolated, "bad cyclotomic data");
    CyclotomicNumber r(Rat(0), n);
    r.c_ = std::move(c);
    return r;
  }
  long level() const { return n_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  CyclotomicNumber lift_to(long n) const {
    require(n % n_ == 0, ErrorKind::PreconditionViolated, "bad cyclotomic level");
    CyclotomicNumber r(Rat(0), n);
    for (long i = 0; i < n_; ++i) r.c_[i * (n / n_)] = c_[i];
    return r;
  }
  friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    long n = std::lcm(a.n_, b.n_);
    auto x = a.lift_to(n), y = b.lift_to(n);
    for (long i = 0; i < n; ++i) x.c_[i] += y.c_[i];
    return x;
  }
  friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a + b.scale(-1); }
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    long n = std::lcm(a.n_, b.n_);
    auto x = a.lift_to(n), y = b.lift_to(n);
    CyclotomicNumber r(Rat(0), n);
    for (long i = 0; i < n; ++i)
      if (x.c_[i] != 0)
        for (long j = 0; j < n; ++j)
          if (y.c_[j] != 0) r.c_[(i + j) % n] += x.c_[i] * y.c_[j];
    return r;
  }
  CyclotomicNumber& operator+=(const CyclotomicNumber& o) { return *this = *this + o; }
  CyclotomicNumber scale(const Rat& s) const {
    CyclotomicNumber r = *this;
    for (auto& v : r.c_) v *= s;
    return r;
  }

  // coefficients in the power basis 1, z, ..., z^(phi(n)-1)
  std::vector<Rat> reduced() const {
    auto phi = cyclotomic_poly(n_);
    std::vector<Rat> r = c_;
    size_t d = phi.size() - 1;
    for (size_t k = r.size(); k-- > d;) {
      Rat lead = r[k];
      if (lead == 0) continue;
      for (size_t j = 0; j <= d; ++j) r[k - d + j] -= lead * phi[j];
    }
    r.resize(d);
    return r;
  }
  bool is_zero() const {
    for (auto& v : reduced())
      if (v != 0) return false;
    return true;
  }
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) { return (a - b).is_zero(); }
  bool is_rational() const {
    auto r = reduced();
    for (size_t i = 1; i < r.size(); ++i)
      if (r[i] != 0) return false;
    return true;
  }
  Rat rational_value() const {
    require(is_rational(), ErrorKind::PreconditionViolated, "value is not rational");
    auto r = reduced();
    return r.empty() ? Rat(0) : r[0];
  }

  PadicNumber embed(long p, long prec) const {
    if (is_rational()) return PadicNumber(p, rational_value(), prec);
    PadicNumber z = root_of_unity(p, n_, prec + 8);
    PadicNumber s = PadicNumber::zero(p, prec);
    PadicNumber zp(p, 1, prec + 8);
    for (long i = 0; i < n_; ++i) {
      if (c_[i] != 0) s = s + zp.scale(c_[i]);
      zp = zp * z;
    }
    return s.with_precision(prec);
  }

  std::string to_string() const {
    auto r = reduced();
    if (is_rational()) return rational_value().get_str();
    std::string s;
    for (size_t i = 0; i < r.size(); ++i) {
      if (r[i] == 0) continue;
      if (!s.empty()) s += " + ";
      s += r[i].get_str() + (i ? "*z" + std::to_string(n_) + "^" + std::to_string(i) : "");
    }
    return s;
  }

  // integer coefficients of Phi_n, low degree first
  static std::vector<Rat> cyclotomic_poly(long n) {
    std::vector<Rat> num(n + 1, Rat(0));
    num[0] = -1;
    num[n] = 1;
    for (long d = 1; d < n; ++d) {
      if (n % d) continue;
      auto den = cyclotomic_poly(d);
      // exact division num / den
      size_t dd = den.size() - 1;
      std::vector<Rat> q(num.size() - dd, Rat(0));
      for (size_t k = num.size(); k-- > dd;) {
        Rat c = num[k] / den[dd];
        q[k - dd] = c;
        for (size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
      }
      num = q;
    }
    return num;
  }

 private:
  long n_;
  std::vector<Rat> c_;
};

}  // namespace tz
