#include "latcover/linalg.hpp"

#include <utility>

namespace latcover::linalg {

namespace {

// Reduces `a` in place to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && sgn(a[p][col]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const Rational inv = 1 / a[row][col];
    for (auto& v : a[row]) v *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || sgn(a[r][col]) == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = col; c < a[r].size(); ++c) a[r][c] -= f * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Matrix a) {
  if (a.empty()) return 0;
  const std::size_t ncols = a.front().size();
  return row_reduce(a, ncols).size();
}

std::optional<Matrix> inverse(Matrix a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    a[i].resize(2 * n);
    a[i][n + i] = 1;
  }
  const auto pivots = row_reduce(a, n);
  if (pivots.size() != n) return std::nullopt;
  Matrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

std::vector<Rational> null_vector(Matrix a) {
  if (a.empty()) throw DegenerateError("null_vector: empty matrix");
  const std::size_t n = a.front().size();
  const auto pivots = row_reduce(a, n);
  if (pivots.size() + 1 != n) throw DegenerateError("null_vector: kernel is not one-dimensional");
  std::size_t free_col = 0;
  for (std::size_t c = 0, k = 0; c < n; ++c) {
    if (k < pivots.size() && pivots[k] == c) {
      ++k;
    } else {
      free_col = c;
      break;
    }
  }
  std::vector<Rational> x(n);
  x[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -a[r][free_col];
  return x;
}

std::vector<Rational> multiply(const Matrix& a, const std::vector<Rational>& x) {
  std::vector<Rational> y(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

}  // namespace latcover::linalg
