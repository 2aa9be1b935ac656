#include "pencil/linalg.hpp"

#include <numeric>

namespace pencil {

namespace {

// Rows scaled to integers; returns the product of the scale factors used.
Matrix<Int> integer_rows(const Matrix<Rat>& M, Rat* scale) {
  Matrix<Int> A;
  Rat s = 1;
  for (auto& row : M) {
    Int den = 1;
    for (auto& x : row) den = lcm(den, Int(x.get_den()));
    std::vector<Int> r;
    for (auto& x : row) r.push_back(x.get_num() * (den / x.get_den()));
    A.push_back(std::move(r));
    s *= Rat(den);
  }
  if (scale) *scale = s;
  return A;
}

// Fraction-free echelon elimination; returns rank and the sign-adjusted last
// pivot (the determinant for square full-rank input).
int bareiss_echelon(Matrix<Int>& A, Int* det) {
  int rows = static_cast<int>(A.size());
  int cols = rows ? static_cast<int>(A[0].size()) : 0;
  Int prev = 1;
  int r = 0;
  bool neg = false;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (A[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) {
      std::swap(A[piv], A[r]);
      neg = !neg;
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        Int t = A[r][c] * A[i][j] - A[i][c] * A[r][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        A[i][j] = t;
      }
      A[i][c] = 0;
    }
    prev = A[r][c];
    ++r;
  }
  if (det) *det = neg ? Int(-prev) : prev;
  return r;
}

}  // namespace

int matrix_rank_q(const Matrix<Rat>& M) {
  Matrix<Int> A = integer_rows(M, nullptr);
  return bareiss_echelon(A, nullptr);
}

Rat determinant_q(const Matrix<Rat>& M) {
  require(M.empty() || M.size() == M[0].size(), "determinant of non-square matrix");
  if (M.empty()) return 1;
  Rat s;
  Matrix<Int> A = integer_rows(M, &s);
  Int d;
  int r = bareiss_echelon(A, &d);
  if (r < static_cast<int>(M.size())) return 0;
  return Rat(d) / s;
}

int matrix_rank_mod(const Matrix<Rat>& M, std::uint32_t p) {
  Matrix<Zp> A;
  for (auto& row : M) {
    std::vector<Zp> r;
    for (auto& x : row) r.push_back(reduce_mod(x, p));
    A.push_back(std::move(r));
  }
  return matrix_rank(std::move(A));
}

MinorSelection select_minor_mod(const Matrix<Rat>& M, std::uint32_t p) {
  MinorSelection sel;
  int rows = static_cast<int>(M.size());
  if (rows == 0) return sel;
  int cols = static_cast<int>(M[0].size());
  Matrix<Zp> A;
  for (auto& row : M) {
    std::vector<Zp> r;
    for (auto& x : row) r.push_back(reduce_mod(x, p));
    A.push_back(std::move(r));
  }
  std::vector<int> perm(rows);
  std::iota(perm.begin(), perm.end(), 0);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (A[i][c].v != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(A[piv], A[r]);
    std::swap(perm[piv], perm[r]);
    Zp iv = inv(A[r][c]);
    for (int i = r + 1; i < rows; ++i) {
      if (A[i][c].v == 0) continue;
      Zp f = A[i][c] * iv;
      for (int j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
    }
    sel.rows.push_back(perm[r]);
    sel.cols.push_back(c);
    ++r;
  }
  return sel;
}

}  // namespace pencil
