#pragma once
#include "trivzero/field/ideal.hpp"
#include "trivzero/padic/functions.hpp"

namespace tz {

// iota_p restricted to F: Q_p when p splits (or F = Q), the unramified quadratic extension when p is inert.
// For split p, choice 0 takes the prime above p with the smaller HNF residue b.
class PadicEmbedding {
 public:
  PadicEmbedding(const BaseField& F, long p, long prec, int choice = 0) : F_(F), p_(p), prec_(prec) {
    require(p > 2 && is_prime(p), ErrorKind::PreconditionViolated, "p must be an odd prime");
    require(F.disc() % p != 0, ErrorKind::RamifiedPrime, std::to_string(p) + " ramifies in F");
    long wp = prec + 4;
    if (F.is_rational()) {
      omega_ = QuadPadic(PadicNumber::zero(p, wp));
      prime_ = primes_above(F, Int(p)).front();
      return;
    }
    auto primes = primes_above(F, Int(p));
    if (primes.size() == 2) {
      split_ = true;
      prime_ = primes.at(choice ? 1 : 0);
      Int r = mod(-prime_.ideal.b, Int(p));
      // Newton on w^2 - t w - n, starting from r
      Int m = ipow(p, wp), x = r;
      for (long k = 1; k < 2 * wp + 2; k *= 2) {
        Int f = x * x - F.t() * x - F.n(), df = 2 * x - F.t();
        x = mod(x - f * inv_mod(df, m), m);
      }
      omega_ = QuadPadic(PadicNumber(p, x, wp));
    } else {
      prime_ = primes.front();
      long n = smallest_nonresidue(p);
      PadicNumber s = sqrt_unit(p, frac(F.disc(), n), wp);  // sqrt(D) = s sqrt(n)
      omega_ = QuadPadic(PadicNumber(p, frac(F.t(), 2), wp), s.scale(frac(1, 2)));
    }
  }

  long prime() const { return p_; }
  long precision() const { return prec_; }
  bool split() const { return split_ || F_.is_rational(); }
  const PrimeIdeal& prime_ideal() const { return prime_; }

  QuadPadic operator()(const FieldElement& x) const {
    long wp = prec_ + 4;
    QuadPadic r = omega_.scale(x.b) + QuadPadic(PadicNumber(p_, x.a, wp));
    return r.with_precision(prec_ + std::min(0L, r.valuation()));
  }
  // image in Q_p, only for split p or F = Q
  PadicNumber in_qp(const FieldElement& x) const {
    require(split(), ErrorKind::PreconditionViolated, "inert prime: value lies in the quadratic extension");
    return (*this)(x).a();
  }
  // iota_p composed with the nontrivial automorphism
  QuadPadic conjugate(const FieldElement& x) const { return (*this)(conj(F_, x)); }

 private:
  BaseField F_;
  long p_, prec_;
  bool split_ = false;
  PrimeIdeal prime_;
  QuadPadic omega_;
};

inline Ideal different(const BaseField& F) {
  if (F.is_rational()) return unit_ideal();
  return principal_ideal(F, FieldElement(Rat(-F.t()), 2));  // sqrt(D) = 2w - t
}

}  // namespace tz
