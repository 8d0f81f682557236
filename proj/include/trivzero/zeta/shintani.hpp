#pragma once
#include <map>
#include <mutex>
#include <vector>

#include "trivzero/zeta/bernoulli.hpp"

namespace tz {

// Unimodular chain A = w_0, w_1, ..., w_s = B (consecutive pairs are Z-bases of O, positively
// oriented), splitting the cone spanned by A and B. A, B integral, primitive.
inline std::vector<FieldElement> cone_chain(const FieldElement& A, const FieldElement& B, long max_steps = 100000) {
  auto det = [](const FieldElement& x, const FieldElement& y) -> Int { return x.a.get_num() * y.b.get_num() - x.b.get_num() * y.a.get_num(); };
  require(A.is_integral() && B.is_integral(), ErrorKind::DecompositionFailure, "cone generators must be integral");
  require(det(A, B) > 0, ErrorKind::DecompositionFailure, "cone generators badly oriented");
  std::vector<FieldElement> chain{A};
  FieldElement cur = A;
  for (long step = 0; step < max_steps; ++step) {
    Int n = det(cur, B);
    if (n == 1) {
      chain.push_back(B);
      return chain;
    }
    require(n > 1, ErrorKind::DecompositionFailure, "chain lost orientation");
    // v with det(cur, v) = 1
    Int s, t;
    Int g = xgcd(cur.a.get_num(), cur.b.get_num(), s, t);
    require(g == 1, ErrorKind::DecompositionFailure, "cone generator not primitive");
    FieldElement v(Rat(-t), Rat(s));  // det(cur, v) = a*s + b*t = 1
    // B = alpha cur + n v
    Int alpha = det(B, v);  // det(B, v) = alpha det(cur, v)
    Int q = ceil_div(alpha, n);
    FieldElement w = add(v, scale(cur, Rat(q)));
    chain.push_back(w);
    cur = w;
  }
  fail(ErrorKind::DecompositionFailure, "convergent chain did not close");
}

// Partial zeta values of narrow ray classes at non-positive integers by Shintani's method.
class ShintaniEngine {
 public:
  // start = 0: cone <1, eta>; start = 1: cone <w, eta*w> for another totally positive w
  ShintaniEngine(std::shared_ptr<const RayClassGroup> G, int start = 0, int eta_power = 1) : G_(std::move(G)), F_(G_->field()) {
    require(!F_.is_rational(), ErrorKind::PreconditionViolated, "Shintani engine needs a real quadratic field");
    FieldElement ep = totally_positive_unit(F_);
    FieldElement e = ep;
    eta_power_ = 1;
    while (!contains(F_, G_->modulus(), sub(e, FieldElement(1)))) {
      e = mul(F_, e, ep);
      ++eta_power_;
    }
    eta_power_ *= eta_power;
    eta_ = power(F_, e, eta_power);
    FieldElement w(1);
    if (start) {
      Int x = 0;
      while (!totally_positive(F_, FieldElement(Rat(x), 1))) ++x;
      w = FieldElement(Rat(x + start), 1);
    }
    chain_ = cone_chain(w, mul(F_, w, eta_));
    choose_representatives();
  }

  const std::vector<FieldElement>& chain() const { return chain_; }
  const FieldElement& eta() const { return eta_; }

  // zeta(C, 1-k), C given by group element index
  Rat partial_zeta(long idx, long k) const {
    require(k >= 1, ErrorKind::PoleAtOne, "need k >= 1");
    const Ideal& a0 = reps_.at(idx);
    const auto& T = tables(k);
    Ideal J = multiply(F_, G_->modulus(), conj(F_, a0));
    Int Nn = a0.norm();
    Int a = J.a;
    // Bernoulli values B_l(j/a)/l! for j = 0..a, computed lazily
    std::map<long, std::vector<Rat>> bt;
    auto bvals = [&](long j) -> const std::vector<Rat>& {
      auto it = bt.find(j);
      if (it != bt.end()) return it->second;
      std::vector<Rat> v;
      Rat x = frac(j, a);
      for (long l = 0; l <= 2 * k; ++l) v.push_back(bernoulli_poly(l, x) / Rat(factorial(l)));
      return bt.emplace(j, std::move(v)).first->second;
    };
    Rat total = 0;
    Int count = J.a / J.c;
    for (size_t i = 0; i + 1 < chain_.size(); ++i) {
      const FieldElement& w1 = chain_[i];
      const FieldElement& w2 = chain_[i + 1];
      // coordinates in basis (w1, w2): solve x = c1 w1 + c2 w2
      Int d = w1.a.get_num() * w2.b.get_num() - w1.b.get_num() * w2.a.get_num();  // = 1
      for (Int y = 0; y < count; ++y) {
        Int rx = Nn + y * J.b, ry = y * J.c;
        Int c1 = (rx * w2.b.get_num() - ry * w2.a.get_num()) * d;
        Int c2 = (w1.a.get_num() * ry - w1.b.get_num() * rx) * d;
        long j1 = mod(c1 - 1, a).get_si() + 1;
        long j2 = mod(c2, a).get_si();
        const auto& b1 = bvals(j1);
        const auto& b2 = bvals(j2);
        Rat s = 0;
        for (long l1 = 0; l1 <= 2 * k; ++l1) s += b1[l1] * b2[2 * k - l1] * T[i][l1];
        total += s;
      }
    }
    Rat kf(factorial(k - 1));
    return total * kf * kf / 2 * rpow(Rat(a), 2 * k - 2) * rpow(Rat(Nn), 1 - k);
  }

  // L(1-k, chi) for chi defined on this engine's group
  CyclotomicNumber L_value(const HeckeCharacter& chi, long k) const {
    require(chi.modulus() == G_->modulus(), ErrorKind::PreconditionViolated, "character on a different modulus");
    long n = chi.order();
    CyclotomicNumber s(Rat(0), n);
    for (long i = 0; i < G_->order(); ++i) s += CyclotomicNumber(chi.value_at_index(i), n).scale(partial_zeta(i, k));
    return s;
  }

 private:
  // T_i[l1] = Tr C(l1, 2k - l1) for subcone i
  const std::vector<std::vector<Rat>>& tables(long k) const {
    std::lock_guard lk(mu_);
    auto it = tables_.find(k);
    if (it != tables_.end()) return it->second;
    std::vector<std::vector<Rat>> all;
    for (size_t i = 0; i + 1 < chain_.size(); ++i) all.push_back(cone_table(chain_[i], chain_[i + 1], k));
    return tables_.emplace(k, std::move(all)).first->second;
  }

  std::vector<Rat> cone_table(const FieldElement& v1, const FieldElement& v2, long k) const {
    Rat N1 = norm(F_, v1), N2 = norm(F_, v2);
    // powers v^e for e in [-2k, 2k]
    auto powers = [&](const FieldElement& v) {
      std::map<long, FieldElement> P;
      P[0] = FieldElement(1);
      FieldElement vi = inv(F_, v);
      for (long e = 1; e <= 2 * k; ++e) {
        P[e] = mul(F_, P[e - 1], v);
        P[-e] = mul(F_, P[-(e - 1)], vi);
      }
      return P;
    };
    auto P1 = powers(v1), P2 = powers(v2);
    std::vector<Rat> N1p(k), N2p(k);
    for (long t = 0; t < k; ++t) {
      N1p[t] = rpow(N1, t);
      N2p[t] = rpow(N2, t);
    }
    std::vector<Rat> T(2 * k + 1, Rat(0));
    for (long l1 = 0; l1 <= 2 * k; ++l1) {
      long l2 = 2 * k - l1;
      Rat sum = 0;
      for (long t = 0; t < k; ++t) {
        long t2 = k - 1 - t;
        Int c = binom(l1 - 1, t) * binom(l2 - 1, t2);
        if (c == 0) continue;
        // v1^(l1-1-t) v1'^t = N1^t v1^(l1-1-2t)
        const FieldElement& x = P1.at(l1 - 1 - 2 * t);
        const FieldElement& y = P2.at(l2 - 1 - 2 * t2);
        sum += Rat(c) * N1p[t] * N2p[t2] * trace(F_, mul(F_, x, y));
      }
      T[l1] = sum;
    }
    return T;
  }

  // small integral ideals in each class
  void choose_representatives() {
    reps_.assign(G_->order(), Ideal{0, 0, 0});
    long filled = 0;
    for (long B = 16; filled < G_->order(); B *= 2) {
      require(B < 1000000, ErrorKind::BoundTooSmall, "no small representatives");
      for (auto& [I, f] : ideals_up_to(F_, B)) {
        if (!G_->coprime_to_modulus(I)) continue;
        long i = G_->index(I);
        if (reps_[i].a == 0) {
          reps_[i] = I;
          ++filled;
        }
      }
    }
  }

  std::shared_ptr<const RayClassGroup> G_;
  BaseField F_;
  FieldElement eta_;
  long eta_power_ = 1;
  std::vector<FieldElement> chain_;
  std::vector<Ideal> reps_;
  mutable std::mutex mu_;
  mutable std::map<long, std::vector<std::vector<Rat>>> tables_;
};

// Siegel's closed formula, used as an independent check: zeta_F(-1) = (1/60) sum sigma_1((D - b^2)/4)
inline Rat siegel_zeta_minus_one(long D) {
  Rat s = 0;
  long r = isqrt(Int(D)).get_si();
  for (long b = -r; b <= r; ++b) {
    if (b * b >= D || ((D - b * b) % 4) != 0) continue;
    long n = (D - b * b) / 4;
    long sig = 0;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) sig += d;
    s += sig;
  }
  return s / 60;
}

}  // namespace tz
