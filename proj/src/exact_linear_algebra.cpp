#include "eigensteps/exact_linear_algebra.hpp"

#include <utility>

namespace eigensteps {

int row_reduce(RationalMatrix& m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const Rational inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational factor = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
    }
    ++row;
  }
  return static_cast<int>(row);
}

int rank(RationalMatrix m) { return row_reduce(m); }

std::optional<std::vector<Rational>> solve_unique(const RationalMatrix& a, const std::vector<Rational>& b) {
  const std::size_t n = a.size();
  RationalMatrix aug(n);
  for (std::size_t r = 0; r < n; ++r) {
    aug[r] = a[r];
    aug[r].push_back(b[r]);
  }
  if (row_reduce(aug) < static_cast<int>(n)) return std::nullopt;
  // full rank: the left block is the identity
  for (std::size_t r = 0; r < n; ++r) {
    if (aug[r][r] != 1) return std::nullopt;
  }
  std::vector<Rational> x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = aug[r][n];
  return x;
}

}  // namespace eigensteps
