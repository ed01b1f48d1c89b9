#ifndef SALLY_LINALG_HPP
#define SALLY_LINALG_HPP

#include <cstddef>
#include <vector>

namespace sally {

// Dense exact linear algebra over any of our field element types.
// Rows are plain vectors; everything is small enough that plain
// Gaussian elimination is fine.

template <class F>
size_t row_echelon(std::vector<std::vector<F>>& rows) {
  size_t rank = 0;
  size_t ncols = rows.empty() ? 0 : rows[0].size();
  for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    F inv = rows[rank][col].inv();
    for (size_t c = col; c < ncols; ++c) rows[rank][c] = rows[rank][c] * inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      F factor = rows[r][col];
      for (size_t c = col; c < ncols; ++c)
        rows[r][c] = rows[r][c] - factor * rows[rank][c];
    }
    ++rank;
  }
  rows.resize(rank);
  return rank;
}

template <class F>
size_t matrix_rank(std::vector<std::vector<F>> rows) {
  return row_echelon(rows);
}

// Basis of {x : A x = 0} for the matrix whose rows are the constraints.
template <class F>
std::vector<std::vector<F>> kernel_basis(std::vector<std::vector<F>> rows, size_t ncols,
                                         const F& one) {
  row_echelon(rows);
  std::vector<long> pivot_of_col(ncols, -1);
  std::vector<size_t> pivots;
  for (size_t r = 0; r < rows.size(); ++r) {
    size_t c = 0;
    while (c < ncols && rows[r][c].is_zero()) ++c;
    if (c < ncols) {
      pivot_of_col[c] = static_cast<long>(r);
      pivots.push_back(c);
    }
  }
  std::vector<std::vector<F>> basis;
  for (size_t free_col = 0; free_col < ncols; ++free_col) {
    if (pivot_of_col[free_col] >= 0) continue;
    std::vector<F> v(ncols, one - one);  // zero of the right field
    v[free_col] = one;
    for (size_t c = 0; c < ncols; ++c) {
      if (pivot_of_col[c] < 0) continue;
      v[c] = -rows[pivot_of_col[c]][free_col];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace sally

#endif
