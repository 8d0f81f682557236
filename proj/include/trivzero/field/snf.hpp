#pragma once
#include <vector>

#include "trivzero/core/integer.hpp"

namespace tz {

// Smith form of an integer relation matrix R (rows = relations) by row operations and
// tracked column operations: P R Q = diag(d). Only Q and Q^{-1} are kept.
struct SmithForm {
  std::vector<Int> d;                   // length = number of columns, 0 for free part
  std::vector<std::vector<Int>> Q, Qinv;  // r x r
};

inline SmithForm smith_form(std::vector<std::vector<Int>> A, size_t r) {
  SmithForm S;
  S.Q.assign(r, std::vector<Int>(r, 0));
  S.Qinv.assign(r, std::vector<Int>(r, 0));
  for (size_t i = 0; i < r; ++i) S.Q[i][i] = S.Qinv[i][i] = 1;
  size_t m = A.size();

  auto col_addmul = [&](size_t j, size_t t, const Int& q) {  // col_j -= q col_t
    for (size_t i = 0; i < m; ++i) A[i][j] -= q * A[i][t];
    for (size_t i = 0; i < r; ++i) S.Q[i][j] -= q * S.Q[i][t];
    for (size_t k = 0; k < r; ++k) S.Qinv[t][k] += q * S.Qinv[j][k];
  };
  auto col_swap = [&](size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < m; ++k) std::swap(A[k][i], A[k][j]);
    for (size_t k = 0; k < r; ++k) std::swap(S.Q[k][i], S.Q[k][j]);
    std::swap(S.Qinv[i], S.Qinv[j]);
  };

  for (size_t t = 0; t < r; ++t) {
    while (true) {
      // smallest nonzero entry in the remaining block
      size_t bi = m, bj = r;
      Int best = 0;
      for (size_t i = t; i < m; ++i)
        for (size_t j = t; j < r; ++j)
          if (A[i][j] != 0 && (best == 0 || abs(A[i][j]) < best)) {
            best = abs(A[i][j]);
            bi = i;
            bj = j;
          }
      if (bi == m) break;
      std::swap(A[t], A[bi]);
      col_swap(t, bj);
      bool clean = true;
      for (size_t i = t + 1; i < m; ++i) {
        if (A[i][t] == 0) continue;
        Int q = floor_div(A[i][t], A[t][t]);
        for (size_t j = t; j < r; ++j) A[i][j] -= q * A[t][j];
        if (A[i][t] != 0) clean = false;
      }
      for (size_t j = t + 1; j < r; ++j) {
        if (A[t][j] == 0) continue;
        Int q = floor_div(A[t][j], A[t][t]);
        col_addmul(j, t, q);
        if (A[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility condition
      bool divisible = true;
      for (size_t i = t + 1; i < m && divisible; ++i)
        for (size_t j = t + 1; j < r; ++j)
          if (A[i][j] % A[t][t] != 0) {
            for (size_t k = t; k < r; ++k) A[t][k] += A[i][k];
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (t < m && A[t][t] < 0) A[t][t] = -A[t][t];  // row negation, untracked
    S.d.push_back(t < m ? A[t][t] : Int(0));
  }
  return S;
}

}  // namespace tz
