#pragma once

#include <string>
#include <vector>

#include "pencil/algebraic.hpp"
#include "pencil/bivariate.hpp"
#include "pencil/linalg.hpp"
#include "pencil/zp.hpp"

namespace pencil {

// Matrix of the linear map (g, h) -> f*g_Y - g*f_Y - f*h_X + h*f_X on pairs
// with deg_X g <= m-1, deg_Y g <= n, deg_X h <= m, deg_Y h <= n-1. Columns
// list the g-coefficients (a, b) in lexicographic order, then those of h;
// rows are the monomials X^i Y^j with i < 2m, j < 2n.
template <class E>
Matrix<E> gao_matrix(const BPoly<E>& f, int m, int n) {
  E z = f.zero();
  int cols = m * (n + 1) + (m + 1) * n;
  Matrix<E> M(4 * m * n, std::vector<E>(cols, z));
  BPoly<E> fx = f.dx(), fy = f.dy();
  int col = 0;
  auto put = [&](const BPoly<E>& p) {
    for (auto& [k, c] : p.terms()) {
      check(k.first < 2 * m && k.second < 2 * n, "Gao system term out of range");
      M[k.first * 2 * n + k.second][col] = c;
    }
    ++col;
  };
  E one = one_like(z);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b <= n; ++b) {
      BPoly<E> p = BPoly<E>::monomial(-one, a, b) * fy;
      if (b > 0) p += BPoly<E>::monomial(from_int_like(z, b), a, b - 1) * f;
      put(p);
    }
  for (int a = 0; a <= m; ++a)
    for (int b = 0; b < n; ++b) {
      BPoly<E> p = BPoly<E>::monomial(one, a, b) * fx;
      if (a > 0) p += BPoly<E>::monomial(from_int_like(z, -a), a - 1, b) * f;
      put(p);
    }
  return M;
}

// Number of absolutely irreducible factors of a squarefree nonconstant f,
// as the dimension of the solution space of the system above. Over a prime
// field the characteristic must exceed 2*deg(f)^2.
long absolute_factor_count(const BPolyQ& f);
long absolute_factor_count(const BPoly<NF>& f);
long absolute_factor_count(const BPoly<Zp>& f);

// An upper bound for the number of absolute factors of a squarefree f,
// from the system reduced modulo primes; 1 certifies absolute
// irreducibility.
long factor_count_upper_bound(const BPolyQ& f);
long factor_count_upper_bound(const BPoly<NF>& f);

// absolute_factor_count(X^2 + Y^u).
long absolute_irreducibility_parity_demo(long u);

// Number of absolutely irreducible factors of the generic member f - c*w
// (c transcendental); greater than 1 exactly for composite pencils.
long generic_factor_count(const BPolyQ& f, const BPolyQ& w);

// Finite superset of the parameters c at which f - c*w is absolutely
// reducible or not squarefree, unless the pencil is composite.
struct ReducibilityCandidates {
  AlgebraicSet candidates;
  std::vector<std::string> notes;
  bool degenerate = false;
  long generic_count = 1;
};
ReducibilityCandidates pencil_reducibility_candidates(const BPolyQ& f, const BPolyQ& w);

}  // namespace pencil
