#pragma once
#include <cmath>
#include <numeric>

#include "trivzero/padic/functions.hpp"

namespace tz {

// fundamental discriminant of Q(sqrt m), m squarefree
inline long quad_disc(long m) { return ((m % 4) + 4) % 4 == 1 ? m : 4 * m; }

inline long squarefree_part(long m) {
  long s = m < 0 ? -1 : 1;
  long r = 1;
  for (auto& [q, e] : factor(Int(m < 0 ? -m : m)))
    if (e % 2) r *= q.get_si();
  return s * r;
}

// class number of the imaginary quadratic order of discriminant D < 0, counting reduced forms
inline long class_number_imag(long D) {
  require(D < 0 && (((D % 4) + 4) % 4 == 0 || ((D % 4) + 4) % 4 == 1), ErrorKind::PreconditionViolated, "bad discriminant");
  long h = 0;
  for (long a = 1; 3 * a * a <= -D; ++a)
    for (long b = -a + 1; b <= a; ++b) {
      long num = b * b - D;
      if (num % (4 * a)) continue;
      long c = num / (4 * a);
      if (c < a) continue;
      if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
      if (c == a && b < 0) continue;
      ++h;
    }
  return h;
}

// sqrt(m) in Q_p or in Q_p(sqrt n), m an integer prime to p
inline QuadPadic qsqrt(long m, long p, long prec) {
  if (kronecker(Int(m), Int(p)) == 1) return QuadPadic(sqrt_unit(p, Rat(m), prec));
  long n = smallest_nonresidue(p);
  PadicNumber s = sqrt_unit(p, frac(m, n), prec);
  return QuadPadic(PadicNumber::zero(p, prec), s);
}

}  // namespace tz
