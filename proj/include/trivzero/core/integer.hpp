#pragma once
#include <gmpxx.h>

#include <climits>
#include <string>
#include <utility>
#include <vector>

#include "trivzero/core/errors.hpp"

namespace tz {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat frac(const Int& n, const Int& d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

inline Int ipow(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}
inline Int ipow(long b, unsigned long e) { return ipow(Int(b), e); }

inline Rat rpow(const Rat& b, long e) {
  if (e < 0) {
    require(b != 0, ErrorKind::PreconditionViolated, "negative power of zero");
    return rpow(Rat(1) / b, -e);
  }
  Rat r(ipow(b.get_num(), e), ipow(b.get_den(), e));
  r.canonicalize();
  return r;
}

// valuation of a nonzero integer; LONG_MAX for zero
inline long vp(const Int& a, long p) {
  if (a == 0) return LONG_MAX;
  Int pp(p);
  return static_cast<long>(mpz_remove(Int().get_mpz_t(), a.get_mpz_t(), pp.get_mpz_t()));
}
inline long vp(const Rat& a, long p) {
  if (a == 0) return LONG_MAX;
  return vp(a.get_num(), p) - vp(a.get_den(), p);
}

inline Int strip(const Int& a, long p) {
  Int r;
  Int pp(p);
  mpz_remove(r.get_mpz_t(), a.get_mpz_t(), pp.get_mpz_t());
  return r;
}

inline Int mod(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Int inv_mod(const Int& a, const Int& m) {
  Int r;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
    fail(ErrorKind::NonUnit, "not invertible modulo " + m.get_str());
  return r;
}

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// g = x*a + y*b
inline Int xgcd(const Int& a, const Int& b, Int& x, Int& y) {
  Int g;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int isqrt(const Int& a) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}
inline bool is_square(const Int& a) { return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()); }

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int floor(const Rat& r) { return floor_div(r.get_num(), r.get_den()); }

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::pair<Int, int>> factor(Int n) {
  std::vector<std::pair<Int, int>> out;
  if (n < 0) n = -n;
  require(n != 0, ErrorKind::PreconditionViolated, "factor(0)");
  for (Int d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline bool is_squarefree(const Int& n) {
  for (auto& [q, e] : factor(n))
    if (e > 1) return false;
  return true;
}

inline int kronecker(const Int& a, const Int& n) { return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t()); }

inline bool is_fundamental_discriminant(long D) {
  if (D == 1) return true;
  if (D == 0) return false;
  long m = ((D % 4) + 4) % 4;
  if (m == 1) return is_squarefree(Int(D));
  if (m != 0) return false;
  long q = D / 4;
  long r = ((q % 4) + 4) % 4;
  return (r == 2 || r == 3) && is_squarefree(Int(q));
}

// generalized binomial coefficient, n may be negative
inline Int binom(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0) {
    if (k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
  }
  Int r = binom(-n + k - 1, k);
  return (k % 2) ? Int(-r) : r;
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline std::string to_string(const Int& a) { return a.get_str(); }
inline std::string to_string(const Rat& a) { return a.get_str(); }

inline Rat parse_rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) fail(ErrorKind::Usage, "bad rational: " + s);
  r.canonicalize();
  return r;
}

}  // namespace tz
