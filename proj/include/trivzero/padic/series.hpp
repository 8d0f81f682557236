#pragma once
#include <algorithm>
#include <string>
#include <vector>

#include "trivzero/padic/padic_number.hpp"

namespace tz {

// Truncated power series sum c_i X^i over Q_p, each coefficient with its own precision.
class PadicSeries {
 public:
  PadicSeries() = default;
  explicit PadicSeries(std::vector<PadicNumber> c) : c_(std::move(c)) {
    require(!c_.empty(), ErrorKind::PreconditionViolated, "empty series");
  }

  long prime() const { return c_.front().prime(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const PadicNumber& coeff(long i) const { return c_.at(i); }
  const std::vector<PadicNumber>& coeffs() const { return c_; }
  long precision() const {
    long m = c_.front().precision();
    for (auto& x : c_) m = std::min(m, x.precision());
    return m;
  }

  PadicSeries cap_precision(const std::vector<long>& caps) const {
    std::vector<PadicNumber> out = c_;
    for (size_t i = 0; i < out.size() && i < caps.size(); ++i)
      if (caps[i] < out[i].precision()) out[i] = out[i].with_precision(caps[i]);
    return PadicSeries(out);
  }

  friend PadicSeries operator+(const PadicSeries& a, const PadicSeries& b) {
    size_t n = std::min(a.c_.size(), b.c_.size());
    std::vector<PadicNumber> c;
    for (size_t i = 0; i < n; ++i) c.push_back(a.c_[i] + b.c_[i]);
    return PadicSeries(c);
  }
  friend PadicSeries operator-(const PadicSeries& a, const PadicSeries& b) {
    size_t n = std::min(a.c_.size(), b.c_.size());
    std::vector<PadicNumber> c;
    for (size_t i = 0; i < n; ++i) c.push_back(a.c_[i] - b.c_[i]);
    return PadicSeries(c);
  }
  friend PadicSeries operator*(const PadicSeries& a, const PadicSeries& b) {
    size_t n = std::min(a.c_.size(), b.c_.size());
    std::vector<PadicNumber> c;
    for (size_t k = 0; k < n; ++k) {
      PadicNumber s = a.c_[0] * b.c_[k];
      for (size_t i = 1; i <= k; ++i) s += a.c_[i] * b.c_[k - i];
      c.push_back(s);
    }
    return PadicSeries(c);
  }
  PadicSeries scale(const PadicNumber& x) const {
    std::vector<PadicNumber> c;
    for (auto& a : c_) c.push_back(a * x);
    return PadicSeries(c);
  }

  // requires v(x) >= 1 so the tail is bounded by the last coefficient
  PadicNumber evaluate(const PadicNumber& x) const {
    require(x.valuation() >= 1, ErrorKind::PreconditionViolated, "evaluation point must have v >= 1");
    PadicNumber s = c_.back();
    for (long i = degree() - 1; i >= 0; --i) s = s * x + c_[i];
    return s;
  }

  const PadicNumber& derivative_at_zero() const { return c_.at(1); }

 private:
  std::vector<PadicNumber> c_;
};

// (1+X)^s = sum binom(s, n) X^n for s in Z_p, truncated at degree M.
inline PadicSeries binomial_series(const PadicNumber& s, long M) {
  long p = s.prime();
  long N = s.precision();
  std::vector<PadicNumber> c{PadicNumber(p, 1, N)};
  PadicNumber term(p, 1, N);
  for (long n = 1; n <= M; ++n) {
    term = (term * (s - PadicNumber(p, n - 1, N))).scale(frac(1, n));
    c.push_back(term);
  }
  return PadicSeries(c);
}

}  // namespace tz
