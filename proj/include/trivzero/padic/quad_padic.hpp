#pragma once
#include <algorithm>
#include <optional>
#include <string>

#include "trivzero/padic/padic_number.hpp"

namespace tz {

inline long smallest_nonresidue(long p) {
  for (long n = 2; n < p; ++n)
    if (kronecker(Int(n), Int(p)) == -1) return n;
  fail(ErrorKind::PreconditionViolated, "no quadratic nonresidue mod " + std::to_string(p));
}

// Element a + b*sqrt(n) of the unramified quadratic extension Q_p(sqrt(n)), n the least nonresidue.
class QuadPadic {
 public:
  QuadPadic() = default;
  QuadPadic(PadicNumber a, PadicNumber b) : a_(std::move(a)), b_(std::move(b)), n_(smallest_nonresidue(a_.prime())) {}
  explicit QuadPadic(const PadicNumber& a) : QuadPadic(a, PadicNumber::zero(a.prime(), a.precision())) {}

  long prime() const { return a_.prime(); }
  long nonresidue() const { return n_; }
  const PadicNumber& a() const { return a_; }
  const PadicNumber& b() const { return b_; }
  long precision() const { return std::min(a_.precision(), b_.precision()); }
  long valuation() const { return std::min(a_.valuation(), b_.valuation()); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  QuadPadic frobenius() const { return QuadPadic(a_, -b_, n_); }
  PadicNumber norm() const { return a_ * a_ - (b_ * b_).scale(n_); }
  PadicNumber trace() const { return a_ + a_; }

  QuadPadic with_precision(long prec) const { return QuadPadic(a_.with_precision(prec), b_.with_precision(prec), n_); }

  QuadPadic operator-() const { return QuadPadic(-a_, -b_, n_); }
  friend QuadPadic operator+(const QuadPadic& x, const QuadPadic& y) { return QuadPadic(x.a_ + y.a_, x.b_ + y.b_, x.n_); }
  friend QuadPadic operator-(const QuadPadic& x, const QuadPadic& y) { return QuadPadic(x.a_ - y.a_, x.b_ - y.b_, x.n_); }
  friend QuadPadic operator*(const QuadPadic& x, const QuadPadic& y) {
    return QuadPadic(x.a_ * y.a_ + (x.b_ * y.b_).scale(x.n_), x.a_ * y.b_ + x.b_ * y.a_, x.n_);
  }
  friend QuadPadic operator/(const QuadPadic& x, const QuadPadic& y) {
    PadicNumber nm = y.norm();
    QuadPadic t = x * y.frobenius();
    return QuadPadic(t.a_ / nm, t.b_ / nm, x.n_);
  }
  QuadPadic& operator+=(const QuadPadic& o) { return *this = *this + o; }
  QuadPadic& operator*=(const QuadPadic& o) { return *this = *this * o; }

  QuadPadic scale(const Rat& c) const { return QuadPadic(a_.scale(c), b_.scale(c), n_); }

  QuadPadic pow(long e) const {
    if (e < 0) return QuadPadic(PadicNumber(prime(), 1, precision()), PadicNumber::zero(prime(), precision()), n_) / pow(-e);
    if (e == 0) return QuadPadic(PadicNumber(prime(), 1, precision()), PadicNumber::zero(prime(), precision()), n_);
    std::optional<QuadPadic> r;
    QuadPadic b = *this;
    while (e) {
      if (e & 1) r = r ? *r * b : b;
      e >>= 1;
      if (e) b = b * b;
    }
    return *r;
  }

  std::string to_string() const { return "(" + a_.to_string() + ") + (" + b_.to_string() + ")*sqrt(" + std::to_string(n_) + ")"; }

 private:
  QuadPadic(PadicNumber a, PadicNumber b, long n) : a_(std::move(a)), b_(std::move(b)), n_(n) {}
  PadicNumber a_, b_;
  long n_ = 0;
};

}  // namespace tz
