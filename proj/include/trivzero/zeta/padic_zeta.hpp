#pragma once
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "trivzero/core/parallel.hpp"
#include "trivzero/padic/fit.hpp"
#include "trivzero/zeta/shintani.hpp"

namespace tz {

// Optional persistent store for classical values (set by the application layer).
struct LValueStore {
  virtual ~LValueStore() = default;
  virtual std::optional<CyclotomicNumber> get(const std::string& key) = 0;
  virtual void put(const std::string& key, const CyclotomicNumber& v) = 0;
};

inline std::shared_ptr<LValueStore>& lvalue_store() {
  static std::shared_ptr<LValueStore> s;
  return s;
}

namespace detail {
inline std::shared_ptr<const ShintaniEngine> shintani_engine(std::shared_ptr<const RayClassGroup> G) {
  static std::mutex mu;
  static std::map<const RayClassGroup*, std::shared_ptr<const ShintaniEngine>> table;
  std::lock_guard lk(mu);
  auto it = table.find(G.get());
  if (it != table.end()) return it->second;
  auto E = std::make_shared<const ShintaniEngine>(G);
  table.emplace(G.get(), E);
  return E;
}
}  // namespace detail

// L(1-k, chi) for the primitive character attached to chi
inline CyclotomicNumber classical_L_value(const HeckeCharacter& chi, long k) {
  const HeckeCharacter& prim = chi.primitive();
  std::string key = prim.id() + ";k" + std::to_string(k);
  static std::mutex mu;
  static std::map<std::string, CyclotomicNumber> memo;
  {
    std::lock_guard lk(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  std::optional<CyclotomicNumber> v;
  if (auto& st = lvalue_store()) v = st->get(key);
  if (!v) {
    if (prim.field().is_rational())
      v = bernoulli_L_value(prim, k);
    else
      v = detail::shintani_engine(prim.group_ptr())->L_value(prim, k);
    if (auto& st = lvalue_store()) st->put(key, *v);
  }
  std::lock_guard lk(mu);
  memo.emplace(key, *v);
  return *v;
}

inline Int weight_point(long p, const Int& u, long k) {
  require(k >= 1, ErrorKind::PreconditionViolated, "weights start at 1");
  require(mod(u - 1, Int(p)) == 0 && vp(Int(u - 1), p) == 1, ErrorKind::PreconditionViolated,
          "u must generate 1 + pZ_p");
  return ipow(u, k - 1) - 1;
}

inline long embed_order_check(const HeckeCharacter& phi, long p) {
  long n = phi.order();
  require((p - 1) % n == 0 || n <= 2, ErrorKind::UnsupportedCharacterOrder,
          "character order " + std::to_string(n) + " must divide p-1");
  return n;
}

// Exact value L(1-k, phi) * prod_{q | p} (1 - phi(q) Nq^(k-1)), k = 1 mod (p-1)
inline CyclotomicNumber interp_value_exact(const HeckeCharacter& phi, long p, long k) {
  require((k - 1) % (p - 1) == 0, ErrorKind::PreconditionViolated, "interpolation weights must be 1 mod (p-1)");
  const HeckeCharacter& prim = phi.primitive();
  CyclotomicNumber v = classical_L_value(prim, k);
  for (auto& P : primes_above(prim.field(), Int(p))) {
    auto c = prim(P.ideal);
    if (!c) continue;
    long n = prim.order();
    v = v * (CyclotomicNumber(Rat(1), n) - CyclotomicNumber(*c, n).scale(Rat(ipow(P.norm(), k - 1))));
  }
  return v;
}

inline PadicNumber interp_point(const HeckeCharacter& phi, long p, long k, long prec) {
  embed_order_check(phi, p);
  return interp_value_exact(phi, p, k).embed(p, prec);
}

struct PadicZetaResult {
  PadicSeries series;
  PrecisionLedger ledger;
  std::vector<long> weights;  // all weights, the last `held_out` used for validation
  long held_out = 2;
  Int u;
  std::vector<long> residual_valuations;
};

inline PadicZetaResult fit_padic_zeta(const HeckeCharacter& phi, long p, long M, long N, Int u = 0, long r = 2) {
  if (u == 0) u = 1 + p;
  require(M >= 0 && N > 0 && r >= 1, ErrorKind::PreconditionViolated, "bad fit parameters");
  embed_order_check(phi, p);
  std::vector<long> ks;
  for (long j = 0; j <= M + r; ++j) ks.push_back(1 + j * (p - 1));
  auto ys = parallel_map<PadicNumber>(ks.size(), [&](size_t i) { return interp_point(phi, p, ks[i], N); });
  std::vector<Rat> xs;
  for (long k : ks) xs.emplace_back(weight_point(p, u, k));
  std::vector<Rat> fx(xs.begin(), xs.begin() + M + 1);
  std::vector<PadicNumber> fy(ys.begin(), ys.begin() + M + 1);
  FitResult fit = fit_series(fx, fy);
  long vmin = LONG_MAX;
  for (auto& x : xs)
    if (x != 0) vmin = std::min(vmin, vp(x, p));
  // coefficient i of the interpolant matches the series only mod p^((M+1-i) vmin)
  std::vector<long> caps;
  for (long i = 0; i <= M; ++i) caps.push_back((M + 1 - i) * vmin);
  if (xs[0] == 0) caps[0] = LONG_MAX;  // X = 0 is a node: the constant term is the value there
  PadicZetaResult res{fit.series.cap_precision(caps), fit.ledger, ks, r, u, {}};
  long after_vand = res.ledger.output();
  res.ledger.add("truncation", std::max(0L, after_vand - (M + 1) * vmin));
  long Nout = res.ledger.output();
  if (Nout <= 0)
    fail(ErrorKind::TruncationInsufficient, "the fit consumes all " + std::to_string(N) + " input digits; raise N or lower M");
  for (long j = M + 1; j <= M + r; ++j) {
    PadicNumber pred = res.series.evaluate(PadicNumber(p, xs[j], N + 64));
    PadicNumber diff = pred - ys[j];
    long v = diff.is_zero() ? diff.precision() : diff.valuation();
    res.residual_valuations.push_back(v);
    if (v < Nout)
      fail(ErrorKind::TruncationInsufficient, "held-out weight " + std::to_string(ks[j]) + " misses by p^" +
                                                  std::to_string(v) + ", ledger promises p^" + std::to_string(Nout));
  }
  return res;
}

// s(q) = log_p(Nq) / log_p(u)
inline PadicNumber s_exponent(const Int& Nq, long p, const Int& u, long N) {
  PadicNumber lu = padic_log(PadicNumber(p, u, N + 1));
  return padic_log(PadicNumber(p, Nq, N + 1)) / lu;
}

// primes dividing the tame level but not the conductor of phi
inline std::vector<PrimeIdeal> extra_primes(const CharacterPair& pr) {
  const BaseField& F = pr.phi.field();
  std::vector<PrimeIdeal> out;
  if (pr.tame_level.is_unit()) return out;
  for (auto& [P, e] : factor(F, pr.tame_level))
    if (divides(F, P.ideal, pr.phi.conductor()) == false) out.push_back(P);
  return out;
}

inline PadicZetaResult imprimitive_zeta(const CharacterPair& pr, long M, long N, Int u = 0) {
  long p = pr.p;
  if (u == 0) u = 1 + p;
  PadicZetaResult res = fit_padic_zeta(pr.phi, p, M, N, u);
  PadicSeries s = res.series;
  long before = s.coeff(0).precision();
  for (auto& P : extra_primes(pr)) {
    PadicNumber c = embed(pr.phi(P.ideal)->inverse(), p, N + 4).scale(Rat(1) / Rat(P.norm()));
    PadicSeries b = binomial_series(-s_exponent(P.norm(), p, u, N + 4), M);
    std::vector<PadicNumber> f;
    for (long i = 0; i <= M; ++i) f.push_back(PadicNumber(p, i == 0 ? 1 : 0, N + 4) - c * b.coeff(i));
    s = s * PadicSeries(f);
  }
  res.series = s;
  res.ledger.add("euler-factors", std::max(0L, before - s.coeff(0).precision()));
  return res;
}

// closed formula for zeta_{phi1,phi2}(0)
inline CyclotomicNumber trivial_zero_closed_value(const CharacterPair& pr) {
  const HeckeCharacter& phi = pr.phi;
  long n = phi.order();
  CyclotomicNumber v = classical_L_value(phi, 1);
  for (auto& P : primes_above(phi.field(), Int(pr.p))) {
    auto c = phi(P.ideal);
    if (c) v = v * (CyclotomicNumber(Rat(1), n) - CyclotomicNumber(*c, n));
  }
  for (auto& P : extra_primes(pr))
    v = v * (CyclotomicNumber(Rat(1), n) - CyclotomicNumber(phi(P.ideal)->inverse(), n).scale(Rat(1) / Rat(P.norm())));
  return v;
}

struct TrivialZeroReport {
  PadicZetaResult zeta;
  CyclotomicNumber closed_value;
  PadicNumber closed_value_padic;
  bool value_matches = false;
  long apparent_order = 0;
  bool leading_is_unit = false;
  std::vector<PrimeIdeal> irregular;
  std::string order_statement;
};

inline TrivialZeroReport trivial_zero_report(const CharacterPair& pr, long M, long N, Int u = 0) {
  TrivialZeroReport R{imprimitive_zeta(pr, M, N, u), trivial_zero_closed_value(pr), PadicNumber(), false, 0, false, {}, ""};
  long p = pr.p;
  R.closed_value_padic = R.closed_value.embed(p, N);
  R.value_matches = (R.zeta.series.coeff(0) - R.closed_value_padic).is_zero();
  R.irregular = irregular_primes(pr.phi, p);
  long order = -1;
  for (long i = 0; i <= R.zeta.series.degree(); ++i)
    if (!R.zeta.series.coeff(i).is_zero()) {
      order = i;
      break;
    }
  if (order < 0) fail(ErrorKind::InconclusiveOrder, "all retained coefficients vanish to precision");
  R.apparent_order = order;
  R.leading_is_unit = R.zeta.series.coeff(order).valuation() == 0;
  long irr = static_cast<long>(R.irregular.size());
  if (irr >= 2)
    R.order_statement = "observed order " + std::to_string(order) + " with " + std::to_string(irr) +
                        " irregular primes; order >= 2 at this precision";
  else
    R.order_statement = "order " + std::to_string(order);
  return R;
}

}  // namespace tz
