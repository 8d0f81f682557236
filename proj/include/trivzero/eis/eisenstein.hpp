#pragma once
#include <map>
#include <optional>
#include <vector>

#include "trivzero/field/embed.hpp"
#include "trivzero/zeta/padic_zeta.hpp"

namespace tz {

namespace detail {
inline bool prime_to_p(const BaseField& F, const Ideal& a, long p) { return coprime(F, a, rational_ideal(F, p)); }
inline long value_level(const HeckeCharacter& a, const HeckeCharacter& b) { return std::lcm(a.order(), b.order()); }
}  // namespace detail

// weight-1 coefficient sum_{a | b} phi1(b/a) phi2(a), exact
inline CyclotomicNumber weight1_coeff(const CharacterPair& pr, const Ideal& b) {
  const BaseField& F = pr.phi1.field();
  long n = detail::value_level(pr.phi1, pr.phi2);
  CyclotomicNumber s(Rat(0), n);
  for (auto& a : divisors(F, b)) {
    auto v1 = pr.phi1(quotient(F, b, a)), v2 = pr.phi2(a);
    if (v1 && v2) s += CyclotomicNumber(*v1 * *v2, n);
  }
  return s;
}

// p-stabilized weight-1 coefficient: divisors prime to p only
inline CyclotomicNumber p_stabilize_weight1(const CharacterPair& pr, const Ideal& b) {
  const BaseField& F = pr.phi1.field();
  long n = detail::value_level(pr.phi1, pr.phi2);
  CyclotomicNumber s(Rat(0), n);
  for (auto& a : divisors(F, b)) {
    if (!detail::prime_to_p(F, a, pr.p)) continue;
    auto v1 = pr.phi1(quotient(F, b, a)), v2 = pr.phi2(a);
    if (v1 && v2) s += CyclotomicNumber(*v1 * *v2, n);
  }
  return s;
}

// Lambda-adic coefficient sum_{a | b, p not | a} phi1(b/a) phi2(a) (1+X)^(log_p Na / log_p u)
inline PadicSeries family_coeff(const CharacterPair& pr, const Ideal& b, long M, long N, Int u = 0) {
  long p = pr.p;
  if (u == 0) u = 1 + p;
  const BaseField& F = pr.phi1.field();
  std::vector<PadicNumber> zero(M + 1, PadicNumber::zero(p, N));
  PadicSeries s(zero);
  for (auto& a : divisors(F, b)) {
    if (!detail::prime_to_p(F, a, p)) continue;
    auto v1 = pr.phi1(quotient(F, b, a)), v2 = pr.phi2(a);
    if (!v1 || !v2) continue;
    PadicNumber c = embed(*v1 * *v2, p, N);
    PadicSeries t = a.is_unit() ? PadicSeries(std::vector<PadicNumber>(1, PadicNumber(p, 1, N)))
                                : binomial_series(s_exponent(a.norm(), p, u, N), M);
    std::vector<PadicNumber> tc = t.coeffs();
    tc.resize(M + 1, PadicNumber::zero(p, N));
    s = s + PadicSeries(tc).scale(c);
  }
  return s;
}

// weight-k coefficient: exact divisor sum for k = 1, family specialization at u^(k-1) - 1 otherwise
struct WeightKCoeff {
  std::optional<CyclotomicNumber> exact;
  PadicNumber padic;
};

inline WeightKCoeff weight_k_coeff(const CharacterPair& pr, const Ideal& b, long k, long N, Int u = 0) {
  long p = pr.p;
  if (u == 0) u = 1 + p;
  if (k == 1) {
    auto v = weight1_coeff(pr, b);
    return {v, v.embed(p, N)};
  }
  const BaseField& F = pr.phi1.field();
  PadicNumber x(p, weight_point(p, u, k), N + 2);
  PadicNumber s = PadicNumber::zero(p, N);
  PadicNumber lu = padic_log(PadicNumber(p, u, N + 2));
  for (auto& a : divisors(F, b)) {
    if (!detail::prime_to_p(F, a, p)) continue;
    auto v1 = pr.phi1(quotient(F, b, a)), v2 = pr.phi2(a);
    if (!v1 || !v2) continue;
    // (1+x)^s = u^((k-1) s) = <Na>^(k-1)
    PadicNumber na(p, a.norm(), N + 2);
    PadicNumber val = one_unit_part(na).pow(k - 1);
    s = s + embed(*v1 * *v2, p, N) * val;
  }
  return {std::nullopt, s.with_precision(N)};
}

// constant terms per narrow class c: 2^-d zeta_{phi1,phi2}(X) delta(phi1) phi1^-1(c d)
inline std::vector<std::pair<Ideal, PadicSeries>> family_constant_term(const CharacterPair& pr, long M, long N, Int u = 0) {
  const BaseField& F = pr.phi1.field();
  auto G = ray_class_group(F, unit_ideal());
  std::vector<std::pair<Ideal, PadicSeries>> out;
  bool delta = pr.phi1.conductor().is_unit();
  long p = pr.p;
  std::optional<PadicSeries> z;
  if (delta) z = imprimitive_zeta(pr, M, N, u).series;
  Ideal dF = different(F);
  for (long i = 0; i < G->order(); ++i) {
    Ideal c = G->representative(i);
    if (!delta) {
      out.emplace_back(c, PadicSeries(std::vector<PadicNumber>(M + 1, PadicNumber::zero(p, N))));
      continue;
    }
    RootOfUnity w = pr.phi1(multiply(F, c, dF))->inverse();
    PadicNumber f = embed(w, p, N).scale(rpow(Rat(2), -F.degree()));
    out.emplace_back(c, z->scale(f));
  }
  return out;
}

// p'-stabilized weight-1 constant term per narrow class (exact); needs exactly one irregular prime
inline std::vector<std::pair<Ideal, CyclotomicNumber>> pprime_stabilized_constant_term(const HeckeCharacter& phi_in, long p) {
  const HeckeCharacter& phi = phi_in.primitive();
  const BaseField& F = phi.field();
  auto irr = irregular_primes(phi, p);
  require(irr.size() == 1, ErrorKind::PreconditionViolated, "needs exactly one irregular prime above p");
  long n = phi.order();
  CyclotomicNumber factor(Rat(1), n);
  for (auto& P : primes_above(F, Int(p))) {
    if (P == irr[0]) continue;
    factor = factor * (CyclotomicNumber(Rat(1), n) - CyclotomicNumber(*phi(P.ideal), n));
  }
  bool delta = phi.conductor().is_unit();
  CyclotomicNumber L = classical_L_value(phi, 1);
  std::optional<CyclotomicNumber> Linv;
  if (delta) Linv = classical_L_value(phi.inverse(), 1);
  auto G = ray_class_group(F, unit_ideal());
  Ideal dF = different(F);
  std::vector<std::pair<Ideal, CyclotomicNumber>> out;
  bool all_zero = true;
  for (long i = 0; i < G->order(); ++i) {
    Ideal c = G->representative(i);
    CyclotomicNumber v = L;
    if (delta) v = v + CyclotomicNumber(phi(multiply(F, c, dF))->inverse(), n) * *Linv;
    v = (v * factor).scale(rpow(Rat(2), -F.degree()));
    if (!v.is_zero()) all_zero = false;
    out.emplace_back(c, v);
  }
  if (all_zero) fail(ErrorKind::UnexpectedVanishing, "p'-stabilized constant term vanishes identically");
  return out;
}

// valuation of c at each prime dividing m = n1 n2
struct CuspLabel {
  std::map<Ideal, long> val_c;
};

// true iff one of the three conditions fails, forcing the constant term at the cusp to vanish
inline bool cusp_constant_term_vanishes(const CharacterPair& pr, const CuspLabel& g) {
  const BaseField& F = pr.phi1.field();
  Ideal n1 = pr.phi1.conductor(), n2 = pr.phi2.conductor();
  auto val = [&](const Ideal& I, const PrimeIdeal& P) -> long {
    for (auto& [Q, e] : factor(F, I))
      if (Q == P) return e;
    return 0;
  };
  auto vc = [&](const PrimeIdeal& P) -> long {
    auto it = g.val_c.find(P.ideal);
    if (it == g.val_c.end()) fail(ErrorKind::IncompleteCuspData, "missing valuation of c at " + P.ideal.to_string(F));
    return it->second;
  };
  Ideal m = multiply(F, n1, n2);
  if (m.is_unit()) return false;
  for (auto& [P, e] : factor(F, m)) {
    long v1 = val(n1, P), v2 = val(n2, P), c = vc(P);
    if (v2 > 0 && v1 == 0 && c < v2) return true;   // (i)
    if (v1 > 0 && v2 == 0 && c != 0) return true;   // (ii)
    if (v1 > 0 && v2 > 0 && c != v2) return true;   // (iii)
  }
  return false;
}

}  // namespace tz
