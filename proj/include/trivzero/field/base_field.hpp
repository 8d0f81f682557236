#pragma once
#include <array>
#include <cmath>
#include <string>

#include "trivzero/core/integer.hpp"

namespace tz {

// Q (disc 1) or a real quadratic field of fundamental discriminant D > 1, with
// integral basis {1, w}, w^2 = t*w + n.
class BaseField {
 public:
  BaseField() = default;
  explicit BaseField(long D) : D_(D) {
    if (D != 1 && (D <= 1 || !is_fundamental_discriminant(D)))
      fail(ErrorKind::NonFundamentalDiscriminant, std::to_string(D) + " is not 1 or a positive fundamental discriminant");
    if (D == 1) return;
    if (D % 4 == 1) {
      t_ = 1;
      n_ = (D - 1) / 4;
    } else {
      t_ = 0;
      n_ = D / 4;
    }
  }

  long disc() const { return D_; }
  int degree() const { return D_ == 1 ? 1 : 2; }
  bool is_rational() const { return D_ == 1; }
  long t() const { return t_; }
  long n() const { return n_; }
  // w in embedding i (i = 0 takes +sqrt(D))
  long double omega(int i) const {
    long double s = std::sqrt((long double)D_);
    return (t_ + (i == 0 ? s : -s)) / 2.0L;
  }
  // squarefree kernel of D
  long radicand() const { return D_ % 4 == 0 ? D_ / 4 : D_; }

  friend bool operator==(const BaseField& a, const BaseField& b) { return a.D_ == b.D_; }

 private:
  long D_ = 1;
  long t_ = 0;
  long n_ = 0;
};

// a + b*w
struct FieldElement {
  Rat a = 0, b = 0;

  FieldElement() = default;
  FieldElement(Rat a_, Rat b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}
  FieldElement(long a_) : a(a_), b(0) {}

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_integral() const { return a.get_den() == 1 && b.get_den() == 1; }
  friend bool operator==(const FieldElement& x, const FieldElement& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const FieldElement& x, const FieldElement& y) { return !(x == y); }
  std::string to_string() const { return "[" + a.get_str() + "," + b.get_str() + "]"; }
};

inline FieldElement add(const FieldElement& x, const FieldElement& y) { return {x.a + y.a, x.b + y.b}; }
inline FieldElement sub(const FieldElement& x, const FieldElement& y) { return {x.a - y.a, x.b - y.b}; }
inline FieldElement neg(const FieldElement& x) { return {-x.a, -x.b}; }
inline FieldElement scale(const FieldElement& x, const Rat& c) { return {x.a * c, x.b * c}; }

inline FieldElement mul(const BaseField& F, const FieldElement& x, const FieldElement& y) {
  Rat bb = x.b * y.b;
  return {x.a * y.a + bb * F.n(), x.a * y.b + x.b * y.a + bb * F.t()};
}
inline FieldElement conj(const BaseField& F, const FieldElement& x) { return {x.a + x.b * F.t(), -x.b}; }
inline Rat norm(const BaseField& F, const FieldElement& x) {
  return x.a * x.a + x.a * x.b * F.t() - x.b * x.b * F.n();
}
inline Rat trace(const BaseField& F, const FieldElement& x) { return 2 * x.a + x.b * F.t(); }

inline FieldElement inv(const BaseField& F, const FieldElement& x) {
  Rat nm = norm(F, x);
  require(nm != 0, ErrorKind::PreconditionViolated, "inverse of zero");
  return scale(conj(F, x), 1 / nm);
}
inline FieldElement div(const BaseField& F, const FieldElement& x, const FieldElement& y) { return mul(F, x, inv(F, y)); }

inline FieldElement power(const BaseField& F, FieldElement x, long e) {
  if (e < 0) return power(F, inv(F, x), -e);
  FieldElement r(1);
  while (e) {
    if (e & 1) r = mul(F, r, x);
    e >>= 1;
    if (e) x = mul(F, x, x);
  }
  return r;
}

// exact sign of x in real embedding i (i = 0: sqrt(D) > 0)
inline int sign(const BaseField& F, const FieldElement& x, int i) {
  // x = A + B sqrt(D), A = a + b t/2, B = +-b/2
  Rat A = x.a + x.b * F.t() / 2;
  Rat B = (i == 0 ? x.b : -x.b) / 2;
  int sa = sgn(A), sb = sgn(B);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  Rat diff = A * A - B * B * F.disc();
  return sgn(diff) * sa;
}

inline bool totally_positive(const BaseField& F, const FieldElement& x) {
  for (int i = 0; i < F.degree(); ++i)
    if (sign(F, x, i) <= 0) return false;
  return true;
}

inline long double embed_real(const BaseField& F, const FieldElement& x, int i) {
  return x.a.get_d() + x.b.get_d() * F.omega(i);
}

}  // namespace tz
