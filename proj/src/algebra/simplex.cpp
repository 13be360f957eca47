#include "rrk/algebra/simplex.hpp"

#include <stdexcept>

namespace rrk::algebra {

std::optional<std::vector<Rational>> find_nonnegative_solution(const RationalMatrix& A,
                                                               const std::vector<Rational>& b) {
  const std::size_t m = A.size();
  if (b.size() != m) throw std::invalid_argument("simplex: row count mismatch");
  const std::size_t n = m ? A[0].size() : 0;
  for (const auto& row : A)
    if (row.size() != n) throw std::invalid_argument("simplex: ragged matrix");
  if (m == 0) return std::vector<Rational>(n, 0);

  // Tableau columns: n originals, m artificials, then rhs.
  const std::size_t W = n + m + 1;
  std::vector<std::vector<Rational>> T(m, std::vector<Rational>(W, 0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) T[i][j] = flip ? Rational(-A[i][j]) : A[i][j];
    T[i][n + i] = 1;
    T[i][W - 1] = flip ? Rational(-b[i]) : b[i];
    basis[i] = n + i;
  }
  // Reduced costs of the phase-one objective (sum of artificials).
  std::vector<Rational> z(W, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < W; ++j)
      if (j < n || j == W - 1) z[j] -= T[i][j];

  for (;;) {
    std::size_t enter = W;
    for (std::size_t j = 0; j < n + m; ++j)
      if (z[j] < 0) {
        enter = j;
        break;
      }
    if (enter == W) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rational ratio = T[i][W - 1] / T[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction cannot occur in phase one

    Rational piv = T[leave][enter];
    for (auto& v : T[leave]) v /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rational f = T[i][enter];
      for (std::size_t j = 0; j < W; ++j)
        if (T[leave][j] != 0) T[i][j] -= f * T[leave][j];
    }
    if (z[enter] != 0) {
      Rational f = z[enter];
      for (std::size_t j = 0; j < W; ++j)
        if (T[leave][j] != 0) z[j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }

  if (z[W - 1] != 0) return std::nullopt;  // -(sum of artificials) < 0
  std::vector<Rational> x(n, 0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = T[i][W - 1];
  return x;
}

}  // namespace rrk::algebra
