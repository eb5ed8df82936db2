#include "ppower/linalg.hpp"

#include "ppower/power.hpp"

#include <utility>

namespace ppower {

namespace {

Int mod_reduce(const Int& v, unsigned p) {
  Int r = v % p;
  if (r < 0) r += p;
  return r;
}

void check_rect(const std::vector<std::vector<Int>>& m, const char* who) {
  for (const auto& row : m)
    if (row.size() != m[0].size()) throw InvalidInput(std::string(who) + ": ragged matrix");
}

/// Rank of a square diagonal matrix, or -1 if the matrix is not diagonal.
/// Entrywise-transformed Gram matrices of genuine witnesses are diagonal, so
/// this keeps their rank checks quadratic instead of cubic.
int diagonal_rank(const std::vector<std::vector<Int>>& m) {
  if (m.empty() || m.size() != m[0].size()) return -1;
  int rank = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (i == j) continue;
      if (m[i][j] != 0) return -1;
    }
    if (m[i][i] != 0) ++rank;
  }
  return rank;
}

}  // namespace

unsigned rank_mod_p(std::vector<std::vector<Int>> m, unsigned p) {
  if (p < 2) throw InvalidInput("rank_mod_p: modulus must be at least 2");
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  check_rect(m, "rank_mod_p");
  const std::size_t cols = m[0].size();
  for (auto& row : m)
    for (auto& v : row) v = mod_reduce(v, p);

  if (int dr = diagonal_rank(m); dr >= 0) return static_cast<unsigned>(dr);

  unsigned rank = 0;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows && m[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[pivot_row]);
    // Scale the pivot row by the pivot's inverse (Fermat: a^(p-2) mod p).
    Int inv = 1;
    {
      Int b = m[pivot_row][col];
      unsigned e = p - 2;
      while (e > 0) {
        if (e & 1u) inv = (inv * b) % p;
        b = (b * b) % p;
        e >>= 1;
      }
    }
    for (std::size_t j = col; j < cols; ++j) m[pivot_row][j] = (m[pivot_row][j] * inv) % p;
    for (std::size_t i = pivot_row + 1; i < rows; ++i) {
      if (m[i][col] == 0) continue;
      Int factor = m[i][col];
      for (std::size_t j = col; j < cols; ++j)
        m[i][j] = mod_reduce(m[i][j] - factor * m[pivot_row][j], p);
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

unsigned rank_exact(std::vector<std::vector<Int>> m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  check_rect(m, "rank_exact");
  const std::size_t cols = m[0].size();

  if (int dr = diagonal_rank(m); dr >= 0) return static_cast<unsigned>(dr);

  // Bareiss fraction-free elimination: every division below is exact.
  unsigned rank = 0;
  Int prev_pivot = 1;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows && m[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[pivot_row]);
    const Int pivot = m[pivot_row][col];
    for (std::size_t i = pivot_row + 1; i < rows; ++i) {
      // When the leading entry is zero the update only rescales the row by
      // pivot/prev_pivot, which is the identity when those agree.
      if (m[i][col] == 0 && pivot == prev_pivot) continue;
      for (std::size_t j = col + 1; j < cols; ++j)
        m[i][j] = (m[i][j] * pivot - m[i][col] * m[pivot_row][j]) / prev_pivot;
      m[i][col] = 0;
    }
    prev_pivot = pivot;
    ++pivot_row;
    ++rank;
  }
  return rank;
}

}  // namespace ppower
