#include "ppower/simplex.hpp"

namespace ppower {

LpSolution simplex_maximize(const std::vector<std::vector<Rat>>& a,
                            const std::vector<Rat>& b, const std::vector<Rat>& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw SimplexError("b size does not match row count");
  for (const auto& row : a) {
    if (row.size() != n) throw SimplexError("A row size does not match c");
  }
  for (const Rat& bi : b) {
    if (bi < 0) throw SimplexError("requires b >= 0 (slack basis must be feasible)");
  }

  // Tableau: columns 0..n-1 originals, n..n+m-1 slacks, last column = rhs.
  // Row m is the objective (reduced costs, maximization).
  std::vector<std::vector<Rat>> t(m + 1, std::vector<Rat>(n + m + 1, Rat(0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][n + m] = b[i];
  }
  for (std::size_t j = 0; j < n; ++j) t[m][j] = c[j];

  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  LpSolution solution;
  while (true) {
    // Bland: entering column = smallest index with positive reduced cost
    std::size_t enter = n + m;
    for (std::size_t j = 0; j < n + m; ++j) {
      if (t[m][j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter == n + m) break;  // optimal

    // Leaving row: minimum ratio, smallest basis index on ties
    std::size_t leave = m;
    Rat best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] > 0) {
        Rat ratio = t[i][n + m] / t[i][enter];
        if (leave == m || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
    }
    if (leave == m) throw SimplexError("LP is unbounded");

    // Pivot
    Rat pivot = t[leave][enter];
    for (auto& entry : t[leave]) entry /= pivot;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave) continue;
      Rat factor = t[i][enter];
      if (factor == 0) continue;
      for (std::size_t j = 0; j <= n + m; ++j) t[i][j] -= factor * t[leave][j];
    }
    basis[leave] = enter;
    ++solution.pivots;
  }

  solution.value = -t[m][n + m];
  solution.x.assign(n, Rat(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) solution.x[basis[i]] = t[i][n + m];
  }
  return solution;
}

}  // namespace ppower
