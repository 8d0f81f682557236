#pragma once
#include <mutex>
#include <vector>

#include "trivzero/chars/hecke_character.hpp"

namespace tz {

// B_n with B_1 = -1/2
inline Rat bernoulli(long n) {
  static std::mutex mu;
  static std::vector<Rat> B{Rat(1)};
  std::lock_guard lk(mu);
  while (static_cast<long>(B.size()) <= n) {
    long m = static_cast<long>(B.size());
    Rat s = 0;
    for (long k = 0; k < m; ++k) s += Rat(binom(m + 1, k)) * B[k];
    B.push_back(-s / Rat(m + 1));
  }
  return B[n];
}

inline Rat bernoulli_poly(long n, const Rat& x) {
  Rat s = 0, xp = 1;
  for (long i = n; i >= 0; --i) {  // sum binom(n,i) B_i x^(n-i)
    s += Rat(binom(n, i)) * bernoulli(i) * xp;
    xp *= x;
  }
  return s;
}

// L(1-k, chi) for a character over Q, via the primitive character of conductor f:
// L(1-k, chi) = -B_{k,chi}/k, B_{k,chi} = f^(k-1) sum_{a=1}^f chi(a) B_k(a/f).
inline CyclotomicNumber bernoulli_L_value(const HeckeCharacter& chi, long k) {
  require(chi.field().is_rational(), ErrorKind::PreconditionViolated, "Bernoulli L-values are for characters over Q");
  if (k <= 0) fail(ErrorKind::PoleAtOne, "s = 1 - k must be <= 0");
  const HeckeCharacter& prim = chi.primitive();
  long f = prim.conductor().a.get_si();
  long n = prim.order();
  CyclotomicNumber sum(Rat(0), n);
  for (long a = 1; a <= f; ++a) {
    auto v = prim(Ideal{Int(a), 0, 1});
    if (!v) continue;
    sum += CyclotomicNumber(*v, n).scale(bernoulli_poly(k, frac(a, f)));
  }
  return sum.scale(Rat(ipow(f, k - 1)) * frac(-1, k));
}

}  // namespace tz
