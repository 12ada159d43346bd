#include "cnull/linear_algebra.hpp"

#include "cnull/error.hpp"

namespace cnull {

std::optional<std::vector<Rat>> solve_linear_system(RatMatrix a, std::vector<Rat> b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw Error(ErrorKind::LengthMismatch, "right-hand side length");
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  for (const auto& row : a) {
    if (row.size() != cols) throw Error(ErrorKind::LengthMismatch, "ragged matrix");
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    std::swap(b[pivot], b[rank]);
    const Rat inv = 1 / a[rank][col];
    for (std::size_t j = col; j < cols; ++j) a[rank][j] *= inv;
    b[rank] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      const Rat factor = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= factor * a[rank][j];
      b[i] -= factor * b[rank];
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < rows; ++i) {
    if (b[i] != 0) return std::nullopt;
  }
  std::vector<Rat> x(cols, Rat(0));
  for (std::size_t i = 0; i < rank; ++i) x[pivot_cols[i]] = b[i];
  return x;
}

}  // namespace cnull
