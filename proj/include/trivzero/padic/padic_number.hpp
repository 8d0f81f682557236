#pragma once
#include <algorithm>
#include <climits>
#include <optional>
#include <ostream>
#include <string>

#include "trivzero/core/integer.hpp"

namespace tz {

// Element of Q_p known modulo p^prec (absolute precision).
// Nonzero values are p^val * unit with unit a residue mod p^(prec-val) prime to p.
// A value that is zero to its precision has val == prec and unit == 0.
class PadicNumber {
 public:
  PadicNumber() = default;

  static PadicNumber zero(long p, long prec) {
    PadicNumber r;
    r.p_ = p;
    r.prec_ = prec;
    r.val_ = prec;
    return r;
  }

  PadicNumber(long p, const Rat& x, long prec) : p_(p), prec_(prec) {
    require(p >= 2 && is_prime(p), ErrorKind::PreconditionViolated, "p must be prime");
    if (x == 0) {
      val_ = prec;
      return;
    }
    long v = vp(x, p);
    if (v >= prec) {
      val_ = prec;
      return;
    }
    val_ = v;
    Int num = strip(x.get_num(), p), den = strip(x.get_den(), p);
    Int m = ipow(p, prec - v);
    unit_ = mod(num * inv_mod(den, m), m);
  }
  PadicNumber(long p, const Int& x, long prec) : PadicNumber(p, Rat(x), prec) {}
  PadicNumber(long p, long x, long prec) : PadicNumber(p, Rat(x), prec) {}

  // p^val * unit with the given relative data, unit taken mod p^(prec-val)
  static PadicNumber from_parts(long p, long val, const Int& unit, long prec) {
    if (val >= prec) return zero(p, prec);
    return PadicNumber(p, Rat(unit) * rpow(Rat(p), val), prec);
  }

  long prime() const { return p_; }
  long precision() const { return prec_; }
  long valuation() const { return val_; }
  long relative_precision() const { return prec_ - val_; }
  const Int& unit() const { return unit_; }
  bool is_zero() const { return val_ >= prec_; }

  // rational representative p^val * unit
  Rat lift() const {
    if (is_zero()) return 0;
    return Rat(unit_) * rpow(Rat(p_), val_);
  }
  // integer representative in [0, p^prec), requires val >= 0
  Int lift_int() const {
    require(val_ >= 0, ErrorKind::PreconditionViolated, "lift_int of a non-integral value");
    if (is_zero() || prec_ <= 0) return 0;
    return mod(unit_ * ipow(p_, val_), ipow(p_, prec_));
  }

  PadicNumber with_precision(long prec) const {
    if (prec <= prec_) return PadicNumber(p_, lift(), prec);
    PadicNumber r = *this;  // padding with zero digits
    r.prec_ = prec;
    if (is_zero()) r.val_ = prec;
    return r;
  }

  PadicNumber operator-() const {
    PadicNumber r = *this;
    if (!is_zero()) r.unit_ = mod(-unit_, ipow(p_, prec_ - val_));
    return r;
  }

  friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
    check_same(a, b);
    long prec = std::min(a.prec_, b.prec_);
    return PadicNumber(a.p_, a.lift() + b.lift(), prec);
  }
  friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }

  friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
    check_same(a, b);
    long prec = std::min(sat_add(a.prec_, b.val_), sat_add(b.prec_, a.val_));
    if (a.is_zero() || b.is_zero()) return zero(a.p_, prec);
    return PadicNumber(a.p_, a.lift() * b.lift(), prec);
  }

  friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) {
    check_same(a, b);
    if (b.is_zero()) fail(ErrorKind::ZeroToPrecision, "division by a value that is zero to its precision");
    long v = a.val_ - b.val_;
    long rel = std::min(a.relative_precision(), b.relative_precision());
    if (a.is_zero()) return zero(a.p_, a.prec_ - b.val_);
    return PadicNumber(a.p_, a.lift() / b.lift(), v + rel);
  }

  PadicNumber& operator+=(const PadicNumber& o) { return *this = *this + o; }
  PadicNumber& operator-=(const PadicNumber& o) { return *this = *this - o; }
  PadicNumber& operator*=(const PadicNumber& o) { return *this = *this * o; }
  PadicNumber& operator/=(const PadicNumber& o) { return *this = *this / o; }

  PadicNumber inverse() const {
    if (is_zero()) fail(ErrorKind::ZeroToPrecision, "inverse of a value that is zero to its precision");
    return PadicNumber(p_, Rat(1) / lift(), -val_ + relative_precision());
  }

  PadicNumber pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    if (e == 0) return PadicNumber(p_, 1, is_zero() ? prec_ : relative_precision());
    std::optional<PadicNumber> r;
    PadicNumber b = *this;
    while (e) {
      if (e & 1) r = r ? *r * b : b;
      e >>= 1;
      if (e) b = b * b;
    }
    return *r;
  }

  // equality as elements of Z/p^min(prec)
  bool agrees_with(const PadicNumber& o) const { return (*this - o).is_zero(); }

  // multiplication by an exact rational
  PadicNumber scale(const Rat& c) const {
    if (c == 0) return zero(p_, kBig);
    long v = vp(c, p_);
    if (is_zero()) return zero(p_, prec_ + v);
    return PadicNumber(p_, lift() * c, prec_ + v);
  }

  std::string unit_digits() const {
    require(p_ <= 62, ErrorKind::PreconditionViolated, "digit strings need p <= 62");
    return unit_.get_str(static_cast<int>(p_));
  }

  std::string to_string() const {
    if (is_zero()) return "O(" + std::to_string(p_) + "^" + std::to_string(prec_) + ")";
    return lift().get_str() + " + O(" + std::to_string(p_) + "^" + std::to_string(prec_) + ")";
  }

 private:
  static constexpr long kBig = LONG_MAX / 4;
  static long sat_add(long a, long b) {
    if (a > LONG_MAX / 4 || b > LONG_MAX / 4) return LONG_MAX / 4;
    return a + b;
  }
  static void check_same(const PadicNumber& a, const PadicNumber& b) {
    if (a.p_ != b.p_) fail(ErrorKind::PreconditionViolated, "mixing different primes");
  }

  long p_ = 2;
  long prec_ = 0;
  long val_ = 0;
  Int unit_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const PadicNumber& x) { return os << x.to_string(); }

}  // namespace tz
