#pragma once
#include <random>
#include <vector>

#include "trivzero/eis/eisenstein.hpp"
#include "trivzero/gs/gross_stark.hpp"
#include "trivzero/padic/dual.hpp"
#include "trivzero/zeta/padic_zeta.hpp"

namespace tz {

using DualNumber = Dual<PadicNumber>;

enum class DeformCase { Partial, Full };  // d_p < d, d_p = d

inline const char* case_name(DeformCase c) { return c == DeformCase::Full ? "d_p=d" : "d_p<d"; }

// The ring map T^cusp -> Q_p[eps] of the cuspidal family mod X^2. The pseudo-character is
// (1 + lambda eta eps) + phi (1 + mu eta eps) with eta(Frob_l) = log_p(Nl), and eps = -X relative to the
// Eisenstein families built in eis/ (the sign is recovered by calibrate()).
struct InfinitesimalFamily {
  HeckeCharacter phi;
  long p = 0;
  long N = 0;
  Int u{};
  DeformCase kase = DeformCase::Full;
  Ideal prime{};
  PadicNumber L{}, L_inv{}, log_u{}, lambda{}, mu{};

  static constexpr int kEpsToX = -1;

  const BaseField& field() const { return phi.field(); }
  int phi_at(const Ideal& l) const { return detail::phi_sign(phi, l); }
  PadicNumber eta(const Ideal& l) const { return padic_log(PadicNumber(p, l.norm(), N + 1)); }
  bool is_regular_prime(const Ideal& l) const {
    return coprime(field(), l, rational_ideal(field(), p)) && coprime(field(), l, phi.conductor());
  }

  // d/dX C(l, F) from the closed-form table
  PadicNumber table_T(const Ideal& l) const {
    if (kase == DeformCase::Partial) return eta(l) / log_u;
    PadicNumber num = (L + L_inv.scale(Rat(phi_at(l)))) * eta(l);
    return num / ((L + L_inv) * log_u);
  }
  // d/dX C(v, F) for v above p
  PadicNumber table_U(const Ideal& v) const {
    if (kase == DeformCase::Partial) return v == prime ? L / log_u : PadicNumber::zero(p, N);
    return (L * L_inv) / ((L + L_inv) * log_u);
  }
  // eps-derivative of the trace shape at Frob_l
  PadicNumber trace_derivative(const Ideal& l) const { return (lambda + mu.scale(Rat(phi_at(l)))) * eta(l); }
  DualNumber trace(const Ideal& l) const {
    return {PadicNumber(p, 1 + phi_at(l), N), trace_derivative(l)};
  }
  // phi(l) (1 - eta/log u eps)
  DualNumber det(const Ideal& l) const {
    int s = phi_at(l);
    return {PadicNumber(p, s, N), (eta(l) / log_u).scale(Rat(-s))};
  }

  // C(b, F) mod X^2 in the X variable; b must be prime to the conductor of phi
  DualNumber coeff(const Ideal& b) const {
    const BaseField& F = field();
    DualNumber c{PadicNumber(p, 1, N), PadicNumber::zero(p, N)};
    for (auto& [P, n] : factor(F, b)) {
      DualNumber cp;
      if (P.q == p) {
        DualNumber U{PadicNumber(p, 1, N), table_U(P.ideal)};
        cp = {PadicNumber(p, 1, N), PadicNumber::zero(p, N)};
        for (long i = 0; i < n; ++i) cp = cp * U;
      } else {
        require(coprime(F, P.ideal, phi.conductor()), ErrorKind::PreconditionViolated,
                "coefficients at primes dividing the conductor are not determined");
        int s = phi_at(P.ideal);
        DualNumber T{PadicNumber(p, 1 + s, N), table_T(P.ideal)};
        DualNumber D{PadicNumber(p, s, N), (eta(P.ideal) / log_u).scale(Rat(s))};
        DualNumber prev{PadicNumber(p, 1, N), PadicNumber::zero(p, N)}, cur = T;
        for (long i = 1; i < n; ++i) {
          DualNumber next = T * cur - D * prev;
          prev = cur;
          cur = next;
        }
        cp = cur;
      }
      c = c * cp;
    }
    return c;
  }
};

inline std::pair<PadicNumber, PadicNumber> lambda_mu(DeformCase c, const PadicNumber& L, const PadicNumber& L_inv,
                                                     const PadicNumber& log_u) {
  long p = log_u.prime();
  if (c == DeformCase::Partial)
    return {PadicNumber::zero(p, log_u.precision()), PadicNumber(p, -1, log_u.precision()) / log_u};
  PadicNumber S = L + L_inv;
  require(!S.is_zero(), ErrorKind::SumVanishes, "L(phi) + L(phi^-1) vanishes to precision");
  PadicNumber den = S * log_u;
  return {(-L) / den, (-L_inv) / den};
}

inline InfinitesimalFamily build_family(const HeckeCharacter& phi_in, long p, long N, Int u = 0, int choice = 0) {
  HeckeCharacter phi = phi_in.primitive();
  if (u == 0) u = 1 + p;
  auto irr = irregular_primes(phi, p);
  require(irr.size() == 1, ErrorKind::PreconditionViolated, "needs exactly one irregular prime above p");
  SplittingFieldData H = splitting_field(phi, p, choice);
  InfinitesimalFamily fam{phi};
  fam.p = p;
  fam.N = N;
  fam.u = u;
  fam.prime = H.prime;
  fam.kase = H.d_p == H.d ? DeformCase::Full : DeformCase::Partial;
  fam.L = l_invariant(H, find_p_unit(H), N).L;
  SplittingFieldData Hi = splitting_field(phi.inverse(), p, choice);
  fam.L_inv = l_invariant(Hi, find_p_unit(Hi), N).L;
  fam.log_u = padic_log(PadicNumber(p, u, N + 1));
  std::tie(fam.lambda, fam.mu) = lambda_mu(fam.kase, fam.L, fam.L_inv, fam.log_u);
  return fam;
}

inline DualNumber dual_one(long p, long N) { return {PadicNumber(p, 1, N), PadicNumber::zero(p, N)}; }

namespace detail {

inline bool same(const PadicNumber& a, const PadicNumber& b) { return a.agrees_with(b); }
inline bool same(const Rat& a, const Rat& b) { return a == b; }

// C(l^{n+1}) = C(l) C(l^n) - det C(l^{n-1}) for the two-eigenvalue shape a = 1 + lambda eta eps,
// b = s (1 + mu eta eps), with det = s (1 - eta / log u eps)
template <class R>
bool eigen_recursion(const R& one, const R& zero, const R& lambda, const R& mu, const R& eta, const R& inv_log_u, int s,
                     long n) {
  using D = Dual<R>;
  R sr = s > 0 ? one : zero - one;
  D a{one, lambda * eta}, b{sr, sr * mu * eta};
  auto C = [&](long k) {
    D acc{zero, zero};
    for (long i = 0; i <= k; ++i) {
      D t{one, zero};
      for (long j = 0; j < i; ++j) t = t * a;
      for (long j = i; j < k; ++j) t = t * b;
      acc = acc + t;
    }
    return acc;
  };
  D det{sr, zero - sr * eta * inv_log_u};
  D lhs = C(n + 1), rhs = C(1) * C(n) - det * C(n - 1);
  return same(lhs.a, rhs.a) && same(lhs.b, rhs.b);
}

}  // namespace detail

inline bool eigen_consistency_check(const InfinitesimalFamily& fam, const Ideal& l, long n) {
  require(fam.is_regular_prime(l), ErrorKind::PreconditionViolated, "prime divides the level");
  require(n >= 1, ErrorKind::PreconditionViolated, "n >= 1");
  long p = fam.p, N = fam.N;
  return detail::eigen_recursion(PadicNumber(p, 1, N), PadicNumber::zero(p, N), fam.lambda, fam.mu, fam.eta(l),
                                 PadicNumber(p, 1, N) / fam.log_u, fam.phi_at(l), n);
}

// The same identity over Q at random points with mu = -1/log u - lambda: an exact check of the polynomial identity.
inline bool eigen_consistency_symbolic(long trials, long nmax, unsigned seed = 7) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> dist(-50, 50);
  auto rnd = [&]() {
    long d;
    while ((d = dist(rng)) == 0) {}
    return frac(dist(rng), d);
  };
  for (long t = 0; t < trials; ++t) {
    Rat lam = rnd(), inv = rnd(), eta = rnd();
    Rat mu = -inv - lam;
    int s = t % 2 ? 1 : -1;
    for (long n = 1; n <= nmax; ++n)
      if (!detail::eigen_recursion(Rat(1), Rat(0), lam, mu, eta, inv, s, n)) return false;
  }
  return true;
}

struct CalibrationReport {
  Ideal reference;
  PadicNumber constant;
  long checked = 0;
  std::vector<Ideal> mismatches;
  bool consistent() const { return mismatches.empty(); }
};

// table value = c * trace derivative, with c fixed at the first prime where the trace derivative is nonzero
inline CalibrationReport calibrate(const InfinitesimalFamily& fam, long count) {
  CalibrationReport rep;
  std::optional<PadicNumber> c;
  for (long B = 50;; B *= 2) {
    rep.checked = 0;
    rep.mismatches.clear();
    c.reset();
    for (auto& P : primes_up_to(fam.field(), B)) {
      if (!fam.is_regular_prime(P.ideal)) continue;
      PadicNumber tr = fam.trace_derivative(P.ideal), tb = fam.table_T(P.ideal);
      if (!c) {
        if (tr.is_zero()) continue;
        c = tb / tr;
        rep.reference = P.ideal;
        rep.constant = *c;
        continue;
      }
      ++rep.checked;
      if (!(*c * tr).agrees_with(tb)) rep.mismatches.push_back(P.ideal);
      if (rep.checked >= count) return rep;
    }
    require(B < 1000000, ErrorKind::PreconditionViolated, "not enough primes");
  }
}

struct GrossStarkReport {
  PadicNumber lhs, rhs, L, log_u;
  CyclotomicNumber L0;
  long difference_valuation = 0;
  long digits = 0;
  bool pass = false;
  PrecisionLedger zeta_ledger{}, linv_ledger{};
};

// zeta_phi'(0) against -(L(phi)/log_p u) L(0, phi); rhs_sign is exposed for negative controls
inline GrossStarkReport gross_stark_check(const HeckeCharacter& phi_in, long p, long M, long N, int rhs_sign = -1, Int u = 0,
                                          int choice = 0) {
  HeckeCharacter phi = phi_in.primitive();
  if (u == 0) u = 1 + p;
  if (irregular_primes(phi, p).empty()) fail(ErrorKind::NotApplicable, "phi has no trivial zero at p");
  auto z = fit_padic_zeta(phi, p, M, N, u);
  auto lr = l_invariant(phi, p, N, {}, choice);
  GrossStarkReport r{z.series.coeff(1), PadicNumber::zero(p, N), lr.L, padic_log(PadicNumber(p, u, N + 1)),
                     classical_L_value(phi, 1)};
  r.rhs = (r.L / r.log_u * r.L0.embed(p, N + 4)).scale(Rat(rhs_sign));
  PadicNumber diff = r.lhs - r.rhs;
  r.digits = diff.precision();
  r.difference_valuation = diff.is_zero() ? diff.precision() : diff.valuation();
  r.pass = diff.is_zero();
  r.zeta_ledger = z.ledger;
  r.linv_ledger = lr.ledger;
  return r;
}

struct CombinationRow {
  Ideal b;
  PadicNumber lhs, rhs;
  bool equal = false;
};

struct CombinationReport {
  std::vector<CombinationRow> rows;
  long skipped = 0;  // ideals not prime to the conductor
  long min_precision = LONG_MAX;
  bool pass = true;
};

// (L(phi^-1) + L(phi)) (E_1(phi,1) - f) = E_{1,phi} + E_{phi,1} at nonzero ideals of norm <= B
inline CombinationReport eisenstein_combination_check(const InfinitesimalFamily& fam, long B, long M = 2) {
  require(fam.kase == DeformCase::Full, ErrorKind::NotApplicable, "the combination is stated for d_p = d");
  const BaseField& F = fam.field();
  long p = fam.p, N = fam.N;
  HeckeCharacter one = trivial_character(F);
  CharacterPair e1phi = make_pair(one, fam.phi, p);
  CharacterPair ephi1 = make_pair(fam.phi, one, p);
  PadicNumber S = fam.L + fam.L_inv;
  PadicNumber w1 = S * fam.log_u / fam.L, w2 = S * fam.log_u / fam.L_inv;
  CombinationReport rep;
  auto ideals = ideals_up_to(F, B);
  std::vector<std::optional<CombinationRow>> rows = parallel_map<std::optional<CombinationRow>>(ideals.size(), [&](size_t i) {
    const Ideal& b = ideals[i].first;
    std::optional<CombinationRow> out;
    if (!coprime(F, b, fam.phi.conductor())) return out;
    DualNumber cf = fam.coeff(b);
    PadicNumber e1 = weight1_coeff(ephi1, b).embed(p, N);
    PadicNumber lhs = S * (e1 - cf.a);
    PadicNumber d1 = family_coeff(e1phi, b, M, N, fam.u).coeff(1), d2 = family_coeff(ephi1, b, M, N, fam.u).coeff(1);
    PadicNumber rhs = w1 * (cf.b - d1) + w2 * (cf.b - d2);
    out = CombinationRow{b, lhs, rhs, lhs.agrees_with(rhs)};
    return out;
  });
  for (auto& r : rows) {
    if (!r) {
      ++rep.skipped;
      continue;
    }
    rep.min_precision = std::min(rep.min_precision, (r->lhs - r->rhs).precision());
    rep.pass = rep.pass && r->equal;
    rep.rows.push_back(*r);
  }
  return rep;
}

}  // namespace tz
