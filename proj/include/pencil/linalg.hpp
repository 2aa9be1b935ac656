#pragma once

#include <cstdint>
#include <vector>

#include "pencil/rational.hpp"
#include "pencil/zp.hpp"

namespace pencil {

template <class E>
using Matrix = std::vector<std::vector<E>>;

// Row echelon form by Gaussian elimination over a field; returns the pivot
// columns. M is reduced in place.
template <class E>
std::vector<int> row_echelon(Matrix<E>& M) {
  std::vector<int> pivots;
  int rows = static_cast<int>(M.size());
  if (rows == 0) return pivots;
  int cols = static_cast<int>(M[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!detail::elem_is_zero(M[i][c])) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(M[piv], M[r]);
    E iv = inv(M[r][c]);
    for (int j = c; j < cols; ++j) M[r][j] = M[r][j] * iv;
    for (int i = r + 1; i < rows; ++i) {
      if (detail::elem_is_zero(M[i][c])) continue;
      E f = M[i][c];
      for (int j = c; j < cols; ++j) M[i][j] = M[i][j] - f * M[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class E>
int matrix_rank(Matrix<E> M) {
  return static_cast<int>(row_echelon(M).size());
}

// Rank of a rational matrix by fraction-free elimination over Z.
int matrix_rank_q(const Matrix<Rat>& M);

// Rank modulo p of a rational matrix whose denominators are units mod p.
int matrix_rank_mod(const Matrix<Rat>& M, std::uint32_t p);

// Pivot rows and columns of a maximal nonsingular minor modulo p.
struct MinorSelection {
  std::vector<int> rows, cols;
};
MinorSelection select_minor_mod(const Matrix<Rat>& M, std::uint32_t p);

// Determinant of a square rational matrix (fraction-free).
Rat determinant_q(const Matrix<Rat>& M);

}  // namespace pencil
