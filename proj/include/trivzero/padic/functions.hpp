#pragma once
#include <cmath>

#include "trivzero/padic/quad_padic.hpp"

namespace tz {

// Square root in Z_p of a unit quadratic residue, by Hensel lifting (p odd).
inline PadicNumber sqrt_unit(long p, const Rat& x, long prec) {
  require(p != 2, ErrorKind::PreconditionViolated, "sqrt_unit needs odd p");
  PadicNumber X(p, x, prec + 1);
  require(X.valuation() == 0, ErrorKind::NonUnit, "sqrt_unit of a non-unit");
  Int r0 = -1;
  Int xm = mod(X.unit(), Int(p));
  for (long r = 0; r < p; ++r)
    if ((Int(r) * r - xm) % p == 0) {
      r0 = r;
      break;
    }
  require(r0 >= 0, ErrorKind::NonUnit, "not a square mod p");
  Int m = ipow(p, prec), r = r0;
  Int target = X.lift_int();
  for (long k = 1; k < 2 * prec + 2; k *= 2) r = mod(r - (r * r - target) * inv_mod(2 * r, m), m);
  return PadicNumber(p, r, prec);
}

// Teichmuller lift of a unit of Z_p, to the precision of x.
inline PadicNumber teichmuller(const PadicNumber& x) {
  require(!x.is_zero() && x.valuation() == 0, ErrorKind::NonUnit, "teichmuller of a non-unit");
  long p = x.prime(), N = x.precision();
  Int m = ipow(p, N);
  Int t = mod(x.unit(), Int(p));
  for (long i = 0; i < N + 1; ++i) {
    Int nt;
    mpz_powm_ui(nt.get_mpz_t(), t.get_mpz_t(), p, m.get_mpz_t());
    if (nt == t) break;
    t = nt;
  }
  return PadicNumber(p, t, N);
}

// Unit root of unity of order n dividing p-1, the Teichmuller lift of g^((p-1)/n) for g the least primitive root.
inline long least_primitive_root(long p) {
  for (long g = 2; g < p; ++g) {
    bool ok = true;
    for (auto& [q, e] : factor(Int(p - 1))) {
      Int r;
      mpz_powm_ui(r.get_mpz_t(), Int(g).get_mpz_t(), (p - 1) / q.get_si(), Int(p).get_mpz_t());
      if (r == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 1;
}

inline PadicNumber root_of_unity(long p, long n, long prec) {
  require((p - 1) % n == 0, ErrorKind::UnsupportedCharacterOrder,
          "order " + std::to_string(n) + " does not divide p-1");
  long g = least_primitive_root(p);
  Int r;
  mpz_powm_ui(r.get_mpz_t(), Int(g).get_mpz_t(), (p - 1) / n, Int(p).get_mpz_t());
  return teichmuller(PadicNumber(p, r, prec));
}

namespace detail {
inline PadicNumber one_like(const PadicNumber& x, long prec) { return PadicNumber(x.prime(), 1, prec); }
inline QuadPadic one_like(const QuadPadic& x, long prec) { return QuadPadic(PadicNumber(x.prime(), 1, prec)); }
}  // namespace detail

// log(1+t) for v(t) >= 1. The series is summed with guard digits; the result carries the
// precision of t since log is an isometry on 1 + pZ_p (p odd).
template <class R>
R log_one_plus(const R& t) {
  long p = t.prime();
  long prec = t.precision();
  require(t.valuation() >= 1, ErrorKind::PreconditionViolated, "log series needs v(t) >= 1");
  if (t.is_zero()) return t;
  long v = t.valuation();
  long logp = static_cast<long>(std::log(double(prec) + 4) / std::log(double(p))) + 1;
  long terms = (prec + logp + 2) / v + 2;  // k*v - v_p(k) > prec beyond this
  long guard = static_cast<long>(std::log(double(terms)) / std::log(double(p))) + 2;
  R T = t.with_precision(prec + guard);
  R power = T;
  R sum = T;
  for (long k = 2; k <= terms; ++k) {
    power = power * T;
    R term = power.scale(frac(k % 2 ? 1 : -1, k));
    sum = sum + term;
  }
  return sum.with_precision(prec);
}

// Iwasawa logarithm on Q_p^x (log p = 0).
inline PadicNumber padic_log(const PadicNumber& x) {
  require(!x.is_zero(), ErrorKind::ZeroToPrecision, "log of zero");
  long p = x.prime();
  long rel = x.relative_precision();
  PadicNumber u(p, Rat(x.unit()), rel);
  PadicNumber w = u.pow(p - 1);
  PadicNumber t = w - PadicNumber(p, 1, rel);
  return log_one_plus(t).scale(frac(1, p - 1));
}

// Iwasawa logarithm on Q_{p^2}^x.
inline QuadPadic padic_log(const QuadPadic& x) {
  require(!x.is_zero(), ErrorKind::ZeroToPrecision, "log of zero");
  long p = x.prime();
  long v = x.valuation();
  long prec = x.precision();
  QuadPadic u = x.scale(rpow(Rat(p), -v));  // unit, precision prec - v
  long rel = prec - v;
  QuadPadic w = u.pow(p * p - 1).with_precision(rel);
  QuadPadic t = w - QuadPadic(PadicNumber(p, 1, rel));
  return log_one_plus(t).scale(frac(1, p * p - 1));
}

// <x> = x / omega(x) for a unit x of Z_p.
inline PadicNumber one_unit_part(const PadicNumber& x) { return x / teichmuller(x); }

}  // namespace tz
