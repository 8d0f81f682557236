#pragma once
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "trivzero/chars/hecke_character.hpp"
#include "trivzero/field/embed.hpp"
#include "trivzero/field/units.hpp"
#include "trivzero/gs/quadratic.hpp"
#include "trivzero/padic/fit.hpp"

namespace tz {

// H = F(sqrt(delta)) with delta a negative squarefree integer, so H is Q(sqrt delta) for F = Q and
// the biquadratic field Q(sqrt rF, sqrt delta) otherwise. Elements of H that we need all live in one
// of its quadratic subfields; they are written x + y*sqrt(R) with R one of rF, delta, delta*rF.
enum class Radical { One, F, K1, K2 };

struct HElement {
  Radical r = Radical::One;
  Rat x, y;
};

// An automorphism (or an embedding relative to iota_p) is a sign pair acting on (sqrt rF, sqrt delta).
struct Signs {
  int d = 1, e = 1;
  Signs operator*(const Signs& o) const { return {d * o.d, e * o.e}; }
  bool operator==(const Signs&) const = default;
};

struct Subfield {
  std::string name;
  Radical r;
  long radicand;  // as a product, e.g. delta*rF
  long squarefree;
  long disc;
  long class_number;  // narrow sense is not needed here; plain class number
  bool p_splits;
};

struct SplittingFieldData {
  BaseField F;
  long p = 0;
  int choice = 0;          // which prime of F above a split p is singled out by iota_p
  long delta = 0;
  long rF = 1;
  Ideal prime{};           // the prime of F below w0
  bool p_split_in_F = true;
  long d = 1, d_p = 1;     // [F:Q] and the number of embeddings inducing the chosen prime
  int frob_d = 1, frob_e = 1;
  std::vector<Subfield> subfields{};
  std::vector<Signs> embeddings{};  // relative to iota_p, which is {1,1}
  std::vector<int> place_of{};      // embedding index -> place index; place 0 is w0
  long places = 0;
  std::vector<Signs> galois{};      // Gal(H/Q); galois[1] generates Gal(H/F)
  std::vector<std::vector<int>> action{};  // galois index -> permutation of places
  std::optional<long> class_number{};      // only for H imaginary quadratic

  Signs frob(const Signs& s) const { return {s.d * frob_d, s.e * frob_e}; }
  int embedding_index(const Signs& s) const {
    for (size_t i = 0; i < embeddings.size(); ++i)
      if (embeddings[i] == s) return static_cast<int>(i);
    fail(ErrorKind::PreconditionViolated, "unknown embedding");
  }
  const Subfield& subfield(Radical r) const {
    for (auto& s : subfields)
      if (s.r == r) return s;
    fail(ErrorKind::PreconditionViolated, "no such subfield");
  }

  // iota_p of sqrt(rF) and sqrt(delta)
  std::pair<QuadPadic, QuadPadic> roots(long prec) const {
    QuadPadic rd = QuadPadic(PadicNumber(p, 1, prec));
    if (!F.is_rational()) {
      PadicEmbedding emb(F, p, prec + 2, choice);
      rd = emb(FieldElement(Rat(-F.t()), 2)).scale(F.disc() % 4 == 0 ? frac(1, 2) : Rat(1)).with_precision(prec);
    }
    return {rd, qsqrt(delta, p, prec)};
  }
  QuadPadic image(const HElement& a, const Signs& s, long prec) const {
    auto [rd, re] = roots(prec);
    QuadPadic x = QuadPadic(PadicNumber(p, a.x, prec));
    switch (a.r) {
      case Radical::One: return x;
      case Radical::F: return x + rd.scale(a.y * s.d);
      case Radical::K1: return x + re.scale(a.y * s.e);
      case Radical::K2: return x + (rd * re).scale(a.y * s.d * s.e);
    }
    return x;
  }
};

inline HElement apply(const HElement& a, const Signs& g) {
  int s = 1;
  if (a.r == Radical::F) s = g.d;
  if (a.r == Radical::K1) s = g.e;
  if (a.r == Radical::K2) s = g.d * g.e;
  return {a.r, a.x, a.y * s};
}

inline std::string radical_name(const SplittingFieldData& H, Radical r) {
  switch (r) {
    case Radical::One: return "1";
    case Radical::F: return "sqrt(" + std::to_string(H.rF) + ")";
    case Radical::K1: return "sqrt(" + std::to_string(H.delta) + ")";
    case Radical::K2: return "sqrt(" + std::to_string(H.delta * H.rF) + ")";
  }
  return "";
}

inline std::string to_string(const SplittingFieldData& H, const HElement& a) {
  if (a.r == Radical::One || a.y == 0) return tz::to_string(a.x);
  std::string s = a.x == 0 ? "" : tz::to_string(a.x) + (a.y > 0 ? "+" : "");
  return s + tz::to_string(a.y) + "*" + radical_name(H, a.r);
}

// minimal polynomial over Q, highest degree first
inline std::vector<Rat> min_poly(const SplittingFieldData& H, const HElement& a) {
  if (a.r == Radical::One || a.y == 0) return {Rat(1), Rat(-a.x)};
  long R = a.r == Radical::F ? H.rF : a.r == Radical::K1 ? H.delta : H.delta * H.rF;
  return {Rat(1), Rat(-2 * a.x), Rat(a.x * a.x - a.y * a.y * R)};
}

namespace detail {

inline int phi_sign(const HeckeCharacter& phi, const Ideal& I) {
  auto v = phi(I);
  require(v.has_value(), ErrorKind::PreconditionViolated, "ideal not prime to the conductor");
  return v->as_sign();
}

// delta < 0 squarefree with phi = chi_delta o N on primes of F; smallest |delta| first
inline long find_delta(const HeckeCharacter& phi) {
  const BaseField& F = phi.field();
  Int M = 4 * phi.conductor().norm();
  std::vector<long> cands;
  for (long m = 1; m <= M; ++m)
    if (M % m == 0 && is_squarefree(Int(m))) cands.push_back(-m);
  Ideal cond = phi.conductor();
  for (long m : cands) {
    long dm = quad_disc(m);
    bool ok = true;
    for (auto& P : primes_up_to(F, 400)) {
      if (P.q == 2 || dm % P.q.get_si() == 0 || F.disc() % P.q.get_si() == 0) continue;
      if (!coprime(F, P.ideal, cond)) continue;
      long want = kronecker(Int(dm), P.ideal.norm());
      if (detail::phi_sign(phi, P.ideal) != want) { ok = false; break; }
    }
    if (ok) return m;
  }
  fail(ErrorKind::PreconditionViolated, "phi is not chi o N for a quadratic character chi of Q; only that case is supported");
}

}  // namespace detail

inline SplittingFieldData splitting_field(const HeckeCharacter& phi, long p, int choice = 0) {
  require(phi.order() == 2, ErrorKind::NonQuadratic, "phi must be quadratic");
  require(is_totally_odd(phi), ErrorKind::PreconditionViolated, "phi must be totally odd");
  const BaseField& F = phi.field();
  PadicEmbedding emb(F, p, 4, choice);
  SplittingFieldData H{F};
  H.p = p;
  H.choice = choice;
  H.prime = emb.prime_ideal().ideal;
  require(coprime(F, H.prime, phi.conductor()), ErrorKind::PreconditionViolated, "p divides the conductor");
  require(detail::phi_sign(phi, H.prime) == 1, ErrorKind::NotSplit, "phi(p) != 1: the prime does not split in H");
  H.delta = detail::find_delta(phi);
  H.rF = F.radicand();
  H.d = F.degree();
  H.p_split_in_F = emb.split();
  H.d_p = H.p_split_in_F ? 1 : 2;
  H.frob_d = F.is_rational() ? 1 : static_cast<int>(kronecker(Int(H.rF), Int(p)));
  H.frob_e = static_cast<int>(kronecker(Int(H.delta), Int(p)));
  require(H.frob_e == 1 || H.frob_d == -1, ErrorKind::NotSplit, "delta is not a square at the chosen prime");

  auto add_sub = [&](const std::string& name, Radical r, long R) {
    long s = squarefree_part(R), D = quad_disc(s);
    long h = s < 0 ? class_number_imag(D) : class_group(BaseField(D)).order();
    H.subfields.push_back({name, r, R, s, D, h, kronecker(Int(D), Int(p)) == 1});
  };
  add_sub("K1", Radical::K1, H.delta);
  if (!F.is_rational()) {
    add_sub("F", Radical::F, H.rF);
    add_sub("K2", Radical::K2, H.delta * H.rF);
  } else {
    H.class_number = H.subfields[0].class_number;
  }

  std::vector<int> ds = F.is_rational() ? std::vector<int>{1} : std::vector<int>{1, -1};
  for (int a : ds)
    for (int b : {1, -1}) H.embeddings.push_back({a, b});
  H.galois = H.embeddings;
  H.place_of.assign(H.embeddings.size(), -1);
  for (size_t i = 0; i < H.embeddings.size(); ++i) {
    if (H.place_of[i] >= 0) continue;
    int w = static_cast<int>(H.places++);
    H.place_of[i] = w;
    H.place_of[H.embedding_index(H.frob(H.embeddings[i]))] = w;
  }
  for (auto& g : H.galois) {
    std::vector<int> perm(H.places);
    for (size_t i = 0; i < H.embeddings.size(); ++i) perm[H.place_of[i]] = H.place_of[H.embedding_index(H.embeddings[i] * g)];
    H.action.push_back(perm);
  }
  return H;
}

struct PUnit {
  std::vector<HElement> gens;
  std::vector<long> exps;  // u0 = prod gens[i]^exps[i]

  PUnit power(long m) const {
    PUnit u = *this;
    for (auto& e : u.exps) e *= m;
    return u;
  }
  PUnit conjugate(const Signs& g) const {
    PUnit u = *this;
    for (auto& a : u.gens) a = apply(a, g);
    return u;
  }
};

struct PUnitSearch {
  long bound = 1000000;     // largest |y| numerator scanned
  long exponent_scale = 1;  // look for norm p^(scale*h) instead of p^h
};

inline long valuation_at(const SplittingFieldData& H, const HElement& a, const Signs& s) {
  long prec = 40;
  for (;; prec *= 2) {
    QuadPadic z = H.image(a, s, prec);
    if (!z.is_zero()) return z.valuation();
    require(prec < 4000, ErrorKind::UnexpectedVanishing, "element maps to zero");
  }
}

inline long valuation_at(const SplittingFieldData& H, const PUnit& u, const Signs& s) {
  long v = 0;
  for (size_t i = 0; i < u.gens.size(); ++i) v += u.exps[i] * valuation_at(H, u.gens[i], s);
  return v;
}

namespace detail {

// element of K = Q(sqrt R) of norm p^e, not rational, with unequal valuations at the two primes of K
// above p; oriented so the larger valuation sits at iota_p
inline HElement search_norm(const SplittingFieldData& H, const Subfield& K, long e, long bound) {
  long m = K.squarefree;
  Int c2 = K.radicand / m;  // sqrt(R) = c sqrt(m)
  Int c = isqrt(c2);
  bool half = ((m % 4) + 4) % 4 == 1;
  Int target = ipow(H.p, e) * (half ? 4 : 1);
  for (long Y = 1; Y <= bound; ++Y) {
    Int rest = target - Int(-m) * Y * Y;
    if (rest < 0) break;
    if (!is_square(rest)) continue;
    Int X = isqrt(rest);
    if (half && (X - Y) % 2 != 0) continue;
    Rat den = half ? Rat(2) : Rat(1);
    HElement a{K.r, Rat(X) / den, frac(Y, c) / den};
    a.x.canonicalize();
    a.y.canonicalize();
    HElement b = apply(a, K.r == Radical::F ? Signs{-1, 1} : K.r == Radical::K1 ? Signs{1, -1} : Signs{-1, 1});
    long va = valuation_at(H, a, {1, 1}), vb = valuation_at(H, b, {1, 1});
    if (va == vb) continue;
    return va > vb ? a : b;
  }
  fail(ErrorKind::SearchExhausted, "no element of norm " + to_string(ipow(H.p, e)) + " in " + K.name + " with |y| <= " + std::to_string(bound));
}

// exact solve A x = b over Q, free variables set to zero
inline std::optional<std::vector<Rat>> solve(std::vector<std::vector<Rat>> A, std::vector<Rat> b) {
  size_t rows = A.size(), cols = rows ? A[0].size() : 0;
  std::vector<long> pivcol;
  size_t r = 0;
  for (size_t col = 0; col < cols && r < rows; ++col) {
    size_t piv = r;
    while (piv < rows && A[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(A[piv], A[r]);
    std::swap(b[piv], b[r]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][col] == 0) continue;
      Rat f = A[i][col] / A[r][col];
      for (size_t j = 0; j < cols; ++j) A[i][j] -= f * A[r][j];
      b[i] -= f * b[r];
    }
    pivcol.push_back(static_cast<long>(col));
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Rat> x(cols, Rat(0));
  for (size_t i = 0; i < r; ++i) x[pivcol[i]] = b[i] / A[i][pivcol[i]];
  return x;
}

}  // namespace detail

// u0 with positive valuation at w0 and valuation 0 at every other place of H above p.
inline PUnit find_p_unit(const SplittingFieldData& H, const PUnitSearch& opt = {}) {
  std::vector<HElement> gens;
  for (auto& K : H.subfields) {
    if (!K.p_splits) continue;
    if (K.r == Radical::F) {
      PrimeIdeal P = primes_above(H.F, Int(H.p)).front();
      std::optional<FieldElement> pi;
      for (long k = 1; k <= K.class_number * opt.exponent_scale && !pi; ++k)
        if (k % opt.exponent_scale == 0) pi = principal_generator(H.F, power(H.F, P.ideal, k));
      require(pi.has_value(), ErrorKind::SearchExhausted, "no generator for a power of the prime of F");
      // a + b w with w = (t + c sqrt rF)/2
      Rat cc = H.F.disc() % 4 == 0 ? Rat(2) : Rat(1);
      gens.push_back({Radical::F, pi->a + pi->b * H.F.t() / 2, pi->b * cc / 2});
      gens.back().x.canonicalize();
      gens.back().y.canonicalize();
    } else {
      gens.push_back(detail::search_norm(H, K, K.class_number * opt.exponent_scale, opt.bound));
    }
  }
  gens.push_back({Radical::One, Rat(H.p), Rat(0)});

  // rows: places, columns: generators
  std::vector<std::vector<Rat>> A(H.places, std::vector<Rat>(gens.size()));
  for (long w = 0; w < H.places; ++w) {
    size_t i = 0;
    while (H.place_of[i] != w) ++i;
    for (size_t j = 0; j < gens.size(); ++j) A[w][j] = valuation_at(H, gens[j], H.embeddings[i]);
  }
  std::vector<Rat> target(H.places, Rat(0));
  target[0] = 1;
  auto x = detail::solve(A, target);
  require(x.has_value(), ErrorKind::SearchExhausted, "subfield p-units do not reach the target valuations");
  Int den = 1;
  for (auto& q : *x) den = lcm(den, Int(q.get_den()));
  PUnit u;
  for (size_t j = 0; j < gens.size(); ++j) {
    Rat e = (*x)[j] * den;
    if (e == 0) continue;
    u.gens.push_back(gens[j]);
    u.exps.push_back(Int(e).get_si());
  }
  return u;
}

struct LInvariantReport {
  long ord = 0;                     // ord_p(u_phi)
  QuadPadic log;                    // log_p(u_phi), lands in Q_p
  PadicNumber L;
  std::vector<QuadPadic> f;         // per embedding of F: -(sum_g phi(g) log sigma~ g^-1 u0) / ord
  PUnit u0;
  PrecisionLedger ledger;
};

namespace detail {

// log_p(iota_p sigma~ g u0) for each g in Gal(H/F), weighted by phi(g); kfrob = power of Frobenius
inline QuadPadic twisted_log(const SplittingFieldData& H, const PUnit& u, const Signs& sigma, int kfrob, long prec) {
  std::optional<QuadPadic> acc;
  std::array<Signs, 2> gal = {Signs{1, 1}, Signs{1, -1}};
  std::array<int, 2> phi = {1, -1};
  for (int g = 0; g < 2; ++g)
    for (size_t i = 0; i < u.gens.size(); ++i) {
      QuadPadic z = H.image(u.gens[i], sigma * gal[g], prec);
      if (kfrob % 2) z = z.frobenius();
      QuadPadic l = padic_log(z).scale(Rat(phi[g] * u.exps[i]));
      acc = acc ? *acc + l : l;
    }
  return *acc;
}

inline long ord_phi(const SplittingFieldData& H, const PUnit& u) {
  return valuation_at(H, u, {1, 1}) - valuation_at(H, u, {1, -1});
}

// sigma~ for each embedding of F; those inducing the chosen prime stay at w0 (Frobenius twist)
struct SigmaChoice {
  Signs s;
  int kfrob;
  bool in_sigma_p;
};

inline std::vector<SigmaChoice> sigma_choices(const SplittingFieldData& H, int alt) {
  std::vector<SigmaChoice> out{{{1, 1}, 0, true}};
  if (H.d == 2) {
    if (!H.p_split_in_F) out.push_back({{1, 1}, 1, true});
    else out.push_back({{-1, alt ? -1 : 1}, 0, false});
  }
  return out;
}

inline std::vector<QuadPadic> f_values(const SplittingFieldData& H, const PUnit& u, long ord, long prec, int alt) {
  std::vector<QuadPadic> f;
  for (auto& sc : sigma_choices(H, alt))
    f.push_back(twisted_log(H, u, sc.s, sc.kfrob, prec).scale(frac(-1, ord)));
  return f;
}

inline long max_gen_valuation(const SplittingFieldData& H, const PUnit& u) {
  long m = 0;
  for (auto& a : u.gens)
    for (auto& s : H.embeddings) m = std::max(m, valuation_at(H, a, s));
  return m;
}

}  // namespace detail

// L(phi) = -log_p(u_phi)/ord_p(u_phi), u_phi the phi-part of u0
inline LInvariantReport l_invariant(const SplittingFieldData& H, const PUnit& u0, long N) {
  require(N >= 1, ErrorKind::PreconditionViolated, "precision must be positive");
  LInvariantReport rep;
  rep.u0 = u0;
  rep.ord = detail::ord_phi(H, u0);
  require(rep.ord != 0, ErrorKind::PreconditionViolated, "u0 has no phi-part valuation");
  long guard = detail::max_gen_valuation(H, u0);
  rep.ledger.input = N;
  std::optional<QuadPadic> lg;
  for (auto& sc : detail::sigma_choices(H, 0)) {
    if (!sc.in_sigma_p) continue;
    QuadPadic t = detail::twisted_log(H, u0, sc.s, sc.kfrob, N + guard);
    lg = lg ? *lg + t : t;
  }
  rep.log = *lg;
  rep.f = detail::f_values(H, u0, rep.ord, N + guard, 0);
  QuadPadic Lq = rep.log.scale(frac(-1, rep.ord));
  require(Lq.b().is_zero(), ErrorKind::InconsistentValues, "L-invariant is not in Q_p");
  long logprec = rep.log.precision();
  long vord = vp(Int(rep.ord), H.p);
  rep.ledger.add("log", std::max(0L, N - logprec));
  rep.ledger.add("divide-ord", vord);
  rep.L = Lq.a().with_precision(std::min(Lq.a().precision(), rep.ledger.output()));
  return rep;
}

inline LInvariantReport l_invariant(const HeckeCharacter& phi, long p, long N, const PUnitSearch& opt = {}, int choice = 0) {
  SplittingFieldData H = splitting_field(phi, p, choice);
  return l_invariant(H, find_p_unit(H, opt), N);
}

struct LSumCheck {
  PadicNumber L, L_inverse, sum;
  bool nonzero = false;
};

inline LSumCheck l_invariant_sum_check(const HeckeCharacter& phi, long p, long N, int choice = 0) {
  SplittingFieldData H = splitting_field(phi, p, choice);
  require(H.d_p == H.d, ErrorKind::PreconditionViolated, "needs a unique prime of F above p");
  auto a = l_invariant(H, find_p_unit(H), N);
  SplittingFieldData Hi = splitting_field(phi.inverse(), p, choice);
  auto b = l_invariant(Hi, find_p_unit(Hi), N);
  LSumCheck out{a.L, b.L, a.L + b.L};
  if (out.sum.is_zero())
    fail(ErrorKind::InconclusivePrecision, "L(phi) + L(phi^-1) vanishes to precision " + std::to_string(out.sum.precision()));
  out.nonzero = true;
  return out;
}

struct RankCheck {
  long d = 1, d_p = 1;
  long rank = 0;
  long observed = 0, expected = 0;
  bool alt_agrees = true;
  std::optional<PadicNumber> ord_multiple;  // loc_p of the ramified cocycle as a multiple of ord_p
};

namespace detail {

// rank of a matrix over Q_{p^2}, entries zero to precision count as zero
inline long padic_rank(std::vector<std::vector<QuadPadic>> A) {
  size_t rows = A.size(), cols = rows ? A[0].size() : 0, r = 0;
  for (size_t col = 0; col < cols && r < rows; ++col) {
    size_t piv = rows;
    long best = LONG_MAX;
    for (size_t i = r; i < rows; ++i)
      if (!A[i][col].is_zero() && A[i][col].valuation() < best) best = A[i][col].valuation(), piv = i;
    if (piv == rows) continue;
    std::swap(A[piv], A[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (A[i][col].is_zero()) continue;
      QuadPadic f = A[i][col] / A[r][col];
      for (size_t j = col; j < cols; ++j) A[i][j] = A[i][j] - f * A[r][j];
    }
    ++r;
  }
  return static_cast<long>(r);
}

inline long cocycle_rank(const SplittingFieldData& H, const PUnit& u, long ord, long prec, int alt) {
  auto f = f_values(H, u, ord, prec, alt);
  auto sc = sigma_choices(H, alt);
  std::vector<std::vector<QuadPadic>> A;
  for (size_t i = 0; i < sc.size(); ++i) {
    std::vector<QuadPadic> row{f[i]};
    for (size_t j = 0; j < sc.size(); ++j) {
      if (!sc[j].in_sigma_p) continue;
      row.push_back(QuadPadic(PadicNumber(H.p, i == j ? 1 : 0, prec)));
    }
    A.push_back(row);
  }
  return padic_rank(A);
}

}  // namespace detail

// rows: embeddings sigma of F; columns: the log cocycle f_sigma and the ord cocycles at sigma in Sigma_p
inline RankCheck cocycle_rank_check(const HeckeCharacter& phi, long p, long N, int choice = 0) {
  SplittingFieldData H = splitting_field(phi, p, choice);
  require(H.d <= 2, ErrorKind::PreconditionViolated, "degree at most 2");
  PUnit u = find_p_unit(H);
  long ord = detail::ord_phi(H, u);
  long guard = detail::max_gen_valuation(H, u);
  RankCheck rc;
  rc.d = H.d;
  rc.d_p = H.d_p;
  rc.rank = detail::cocycle_rank(H, u, ord, N + guard, 0);
  long lower = detail::cocycle_rank(H, u, ord, std::max(1L, N - 2) + guard, 0);
  if (lower != rc.rank)
    fail(ErrorKind::RankUnstable, "rank " + std::to_string(rc.rank) + " at N, " + std::to_string(lower) + " at N-2");
  rc.alt_agrees = detail::cocycle_rank(H, u, ord, N + guard, 1) == rc.rank;
  rc.observed = rc.d - rc.rank;
  rc.expected = std::max(rc.d - rc.d_p - 1, 0L);
  if (H.d_p == H.d) {
    auto rep = l_invariant(H, u, N);
    rc.ord_multiple = rep.L;
  }
  return rc;
}

}  // namespace tz
