#pragma once
#include <algorithm>
#include <climits>
#include <string>
#include <vector>

#include "trivzero/padic/series.hpp"

namespace tz {

struct PrecisionStep {
  std::string name;
  long loss;
};

// Digits lost at each stage; output precision is input minus the total.
struct PrecisionLedger {
  long input = 0;
  std::vector<PrecisionStep> steps;

  void add(std::string name, long loss) { steps.push_back({std::move(name), loss}); }
  long total_loss() const {
    long s = 0;
    for (auto& st : steps) s += st.loss;
    return s;
  }
  long output() const { return input - total_loss(); }
};

namespace detail {
// exact inverse of a square rational matrix by Gauss-Jordan
inline std::vector<std::vector<Rat>> invert(std::vector<std::vector<Rat>> A) {
  size_t n = A.size();
  std::vector<std::vector<Rat>> I(n, std::vector<Rat>(n, 0));
  for (size_t i = 0; i < n; ++i) I[i][i] = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && A[piv][c] == 0) ++piv;
    if (piv == n) fail(ErrorKind::SingularSystem, "interpolation nodes are not distinct");
    std::swap(A[c], A[piv]);
    std::swap(I[c], I[piv]);
    Rat inv = 1 / A[c][c];
    for (size_t j = 0; j < n; ++j) {
      A[c][j] *= inv;
      I[c][j] *= inv;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == c || A[r][c] == 0) continue;
      Rat f = A[r][c];
      for (size_t j = 0; j < n; ++j) {
        A[r][j] -= f * A[c][j];
        I[r][j] -= f * I[c][j];
      }
    }
  }
  return I;
}
}  // namespace detail

struct FitResult {
  PadicSeries series;
  PrecisionLedger ledger;
};

// Interpolating polynomial through (x_j, y_j), nodes taken as exact rationals.
// Coefficient i gets precision min_j(prec(y_j) + v(Vinv_ij)); the ledger records v_p(det V).
inline FitResult fit_series(const std::vector<Rat>& xs, const std::vector<PadicNumber>& ys) {
  require(!xs.empty() && xs.size() == ys.size(), ErrorKind::PreconditionViolated, "fit needs matching nonempty data");
  long p = ys.front().prime();
  size_t n = xs.size();
  std::vector<std::vector<Rat>> V(n, std::vector<Rat>(n));
  Rat det = 1;
  for (size_t i = 0; i < n; ++i) {
    Rat pw = 1;
    for (size_t j = 0; j < n; ++j) {
      V[i][j] = pw;
      pw *= xs[i];
    }
    for (size_t k = i + 1; k < n; ++k) det *= xs[k] - xs[i];
  }
  if (det == 0) fail(ErrorKind::SingularSystem, "interpolation nodes are not distinct");
  auto Vi = detail::invert(V);
  long N = LONG_MAX;
  for (auto& y : ys) N = std::min(N, y.precision());
  std::vector<PadicNumber> c;
  for (size_t i = 0; i < n; ++i) {
    Rat s = 0;
    long prec = LONG_MAX;
    for (size_t j = 0; j < n; ++j) {
      s += Vi[i][j] * ys[j].lift();
      if (Vi[i][j] != 0) prec = std::min(prec, ys[j].precision() + vp(Vi[i][j], p));
    }
    c.emplace_back(p, s, prec);
  }
  FitResult r{PadicSeries(c), {}};
  r.ledger.input = N;
  r.ledger.add("vandermonde", vp(det, p));
  return r;
}

}  // namespace tz
