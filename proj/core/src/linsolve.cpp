#include "walg/linsolve.hpp"

#include <utility>

namespace walg {

std::vector<Scalar> solve_linear(std::vector<std::vector<Scalar>> A, std::vector<Scalar> b) {
  const size_t rows = A.size();
  const size_t cols = rows ? A[0].size() : 0;
  std::vector<int> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && A[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[r]);
    std::swap(b[p], b[r]);
    Scalar inv = A[r][c].inverse();
    for (size_t j = c; j < cols; ++j) A[r][j] *= inv;
    b[r] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c].is_zero()) continue;
      Scalar f = A[i][c];
      for (size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (!b[i].is_zero()) throw Error(ErrorCode::NoSolution, "inconsistent linear system");
  if (r < cols)
    throw Error(ErrorCode::NonUniqueSolution,
                "linear system has " + std::to_string(cols - r) + " free parameter(s)");
  std::vector<Scalar> x(cols);
  for (size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

}  // namespace walg
