#pragma once
#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "trivzero/field/base_field.hpp"

namespace tz {

// Integral ideal with Z-basis {a, b + c*w}, c | a, c | b, 0 <= b < a.
// Over Q only a is meaningful (b = 0, c = 1).
struct Ideal {
  Int a = 1, b = 0, c = 1;

  Int norm() const { return a * c; }
  bool is_unit() const { return a == 1 && c == 1; }
  // least positive rational integer in the ideal
  const Int& min_int() const { return a; }
  friend bool operator==(const Ideal& x, const Ideal& y) { return x.a == y.a && x.b == y.b && x.c == y.c; }
  friend bool operator!=(const Ideal& x, const Ideal& y) { return !(x == y); }
  friend bool operator<(const Ideal& x, const Ideal& y) {
    return std::make_tuple(x.norm(), x.a, x.b, x.c) < std::make_tuple(y.norm(), y.a, y.b, y.c);
  }
  std::string to_string(const BaseField& F) const {
    if (F.is_rational()) return "(" + a.get_str() + ")";
    return "(" + a.get_str() + "," + b.get_str() + "+" + c.get_str() + "w)";
  }
};

struct PrimeIdeal {
  Ideal ideal;
  Int q;      // rational prime below
  int f = 1;  // residue degree
  int e = 1;  // ramification index
  Int norm() const { return ideal.norm(); }
  friend bool operator==(const PrimeIdeal& x, const PrimeIdeal& y) { return x.ideal == y.ideal; }
  friend bool operator<(const PrimeIdeal& x, const PrimeIdeal& y) { return x.ideal < y.ideal; }
};

using Factorization = std::vector<std::pair<PrimeIdeal, int>>;

// HNF of the Z-span of integer vectors (x, y) meaning x + y*w; must have rank 2.
inline Ideal hnf(std::vector<std::pair<Int, Int>> v) {
  // Euclid on the second coordinate
  Int bx = 0, c = 0;
  std::vector<Int> xs;
  for (auto& [x, y] : v) {
    if (y == 0) {
      if (x != 0) xs.push_back(x);
      continue;
    }
    if (c == 0) {
      bx = x;
      c = y;
      continue;
    }
    // combine (bx, c) and (x, y)
    Int s, t;
    Int g = xgcd(c, y, s, t);
    Int nbx = s * bx + t * x;
    // the kernel vector (y/g)*(bx,c) - (c/g)*(x,y) has zero second coordinate
    xs.push_back((y / g) * bx - (c / g) * x);
    bx = nbx;
    c = g;
  }
  require(c != 0, ErrorKind::PreconditionViolated, "lattice is not of full rank");
  Int a = 0;
  for (auto& x : xs) a = gcd(a, x);
  require(a != 0, ErrorKind::PreconditionViolated, "lattice is not of full rank");
  if (c < 0) {
    c = -c;
    bx = -bx;
  }
  return Ideal{a, mod(bx, a), c};
}

inline Ideal unit_ideal() { return Ideal{1, 0, 1}; }

inline std::vector<FieldElement> basis(const Ideal& I) { return {FieldElement(Rat(I.a)), FieldElement(Rat(I.b), Rat(I.c))}; }

inline Ideal ideal_from_generators(const BaseField& F, const std::vector<FieldElement>& gens) {
  if (F.is_rational()) {
    Int g = 0;
    for (auto& x : gens) {
      require(x.b == 0 && x.a.get_den() == 1, ErrorKind::PreconditionViolated, "generator not in Z");
      g = gcd(g, x.a.get_num());
    }
    require(g != 0, ErrorKind::PreconditionViolated, "zero ideal");
    return Ideal{g, 0, 1};
  }
  std::vector<std::pair<Int, Int>> v;
  for (auto& x : gens) {
    require(x.is_integral(), ErrorKind::PreconditionViolated, "generator not integral");
    FieldElement wx = mul(F, x, FieldElement(0, 1));
    v.emplace_back(x.a.get_num(), x.b.get_num());
    v.emplace_back(wx.a.get_num(), wx.b.get_num());
  }
  return hnf(v);
}

inline Ideal principal_ideal(const BaseField& F, const FieldElement& x) { return ideal_from_generators(F, {x}); }
inline Ideal rational_ideal(const BaseField& F, const Int& n) { return ideal_from_generators(F, {FieldElement(Rat(n))}); }

inline Ideal multiply(const BaseField& F, const Ideal& I, const Ideal& J) {
  if (F.is_rational()) return Ideal{I.a * J.a, 0, 1};
  std::vector<FieldElement> gens;
  for (auto& x : basis(I))
    for (auto& y : basis(J)) gens.push_back(mul(F, x, y));
  return ideal_from_generators(F, gens);
}

inline Ideal power(const BaseField& F, const Ideal& I, int e) {
  Ideal r = unit_ideal();
  for (int i = 0; i < e; ++i) r = multiply(F, r, I);
  return r;
}

inline Ideal sum(const BaseField& F, const Ideal& I, const Ideal& J) {
  if (F.is_rational()) return Ideal{gcd(I.a, J.a), 0, 1};
  auto g = basis(I);
  for (auto& x : basis(J)) g.push_back(x);
  return ideal_from_generators(F, g);
}

inline bool coprime(const BaseField& F, const Ideal& I, const Ideal& J) { return sum(F, I, J).is_unit(); }

inline Ideal conj(const BaseField& F, const Ideal& I) {
  if (F.is_rational()) return I;
  std::vector<FieldElement> g;
  for (auto& x : basis(I)) g.push_back(conj(F, x));
  return ideal_from_generators(F, g);
}

inline bool contains(const BaseField& F, const Ideal& I, const FieldElement& x) {
  if (!x.is_integral()) return false;
  if (F.is_rational()) return x.a.get_num() % I.a == 0;
  Int y = x.b.get_num();
  if (y % I.c != 0) return false;
  Int rest = x.a.get_num() - (y / I.c) * I.b;
  return rest % I.a == 0;
}

inline bool divides(const BaseField& F, const Ideal& I, const Ideal& J) {  // I | J  iff  J subset I
  for (auto& x : basis(J))
    if (!contains(F, I, x)) return false;
  return true;
}

// I * J^{-1}, J must divide I
inline Ideal quotient(const BaseField& F, const Ideal& I, const Ideal& J) {
  require(divides(F, J, I), ErrorKind::PreconditionViolated, "quotient by a non-divisor");
  if (F.is_rational()) return Ideal{I.a / J.a, 0, 1};
  Ideal t = multiply(F, I, conj(F, J));
  Int n = J.norm();
  require(t.a % n == 0 && t.b % n == 0 && t.c % n == 0, ErrorKind::PreconditionViolated, "quotient failed");
  return Ideal{t.a / n, t.b / n, t.c / n};
}

inline std::vector<PrimeIdeal> primes_above(const BaseField& F, const Int& q) {
  require(q > 1, ErrorKind::PreconditionViolated, "primes_above needs a prime");
  if (F.is_rational()) return {PrimeIdeal{Ideal{q, 0, 1}, q, 1, 1}};
  // roots of x^2 - t x - n mod q
  std::vector<Int> roots;
  for (Int r = 0; r < q; ++r)
    if (mod(r * r - F.t() * r - F.n(), q) == 0) roots.push_back(r);
  std::vector<PrimeIdeal> out;
  if (roots.empty()) {
    out.push_back(PrimeIdeal{rational_ideal(F, q), q, 2, 1});
  } else if (roots.size() == 1 || F.disc() % q == 0) {
    out.push_back(PrimeIdeal{ideal_from_generators(F, {FieldElement(Rat(q)), FieldElement(Rat(-roots[0]), 1)}), q, 1, 2});
  } else {
    for (auto& r : roots)
      out.push_back(PrimeIdeal{ideal_from_generators(F, {FieldElement(Rat(q)), FieldElement(Rat(-r), 1)}), q, 1, 1});
    std::sort(out.begin(), out.end());
  }
  return out;
}

inline Factorization factor(const BaseField& F, Ideal I) {
  Factorization out;
  for (auto& [q, e] : tz::factor(I.norm())) {
    for (auto& P : primes_above(F, q)) {
      int k = 0;
      while (!I.is_unit() && divides(F, P.ideal, I)) {
        I = quotient(F, I, P.ideal);
        ++k;
      }
      if (k) out.emplace_back(P, k);
    }
  }
  require(I.is_unit(), ErrorKind::PreconditionViolated, "factorization incomplete");
  return out;
}

inline Ideal from_factorization(const BaseField& F, const Factorization& f) {
  Ideal r = unit_ideal();
  for (auto& [P, e] : f) r = multiply(F, r, power(F, P.ideal, e));
  return r;
}

inline std::vector<Ideal> divisors(const BaseField& F, const Ideal& I) {
  auto f = factor(F, I);
  std::vector<Ideal> out{unit_ideal()};
  for (auto& [P, e] : f) {
    std::vector<Ideal> next;
    for (auto& d : out) {
      Ideal cur = d;
      next.push_back(cur);
      for (int k = 1; k <= e; ++k) {
        cur = multiply(F, cur, P.ideal);
        next.push_back(cur);
      }
    }
    out = next;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// all prime ideals of norm <= B, sorted
inline std::vector<PrimeIdeal> primes_up_to(const BaseField& F, long B) {
  std::vector<PrimeIdeal> out;
  for (long q = 2; q <= B; ++q) {
    if (!is_prime(q)) continue;
    for (auto& P : primes_above(F, Int(q)))
      if (P.norm() <= B) out.push_back(P);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// all nonzero integral ideals of norm <= B, with factorizations, sorted by norm
inline std::vector<std::pair<Ideal, Factorization>> ideals_up_to(const BaseField& F, long B) {
  auto primes = primes_up_to(F, B);
  std::vector<std::pair<Ideal, Factorization>> out;
  std::function<void(size_t, Int, Factorization)> rec = [&](size_t i, Int nm, Factorization fz) {
    if (i == primes.size()) {
      out.emplace_back(from_factorization(F, fz), fz);
      return;
    }
    rec(i + 1, nm, fz);
    Int n2 = nm;
    int e = 0;
    while (n2 * primes[i].norm() <= B) {
      n2 *= primes[i].norm();
      ++e;
      auto f2 = fz;
      f2.emplace_back(primes[i], e);
      rec(i + 1, n2, f2);
    }
  };
  rec(0, 1, {});
  std::sort(out.begin(), out.end(), [](auto& x, auto& y) { return x.first < y.first; });
  return out;
}

}  // namespace tz
