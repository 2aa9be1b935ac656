#pragma once

#include "pencil/bivariate.hpp"
#include "pencil/linalg.hpp"

namespace pencil {

// Sylvester resultant with respect to Y, rows of g above rows of h, using
// the formal degrees deg_Y g and deg_Y h. Computed modulo many primes by
// evaluation at X-values and interpolation, then lifted by the Chinese
// remainder theorem against a coefficient-norm bound.
UPolyQ resultant_y(const BPolyQ& g, const BPolyQ& h);

// j-th subresultant S_j(X, Y) of g and h with respect to Y
// (0 <= j < min(deg_Y g, deg_Y h), or j = 0). S_0 is the resultant.
BPolyQ subresultant_y(const BPolyQ& g, const BPolyQ& h, int j);

// Res_Y(g, h - T) as a polynomial in (X, T), returned with T in the Y slot.
BPolyQ resultant_y_shifted(const BPolyQ& g, const BPolyQ& h);

// det(A + c*B) as a polynomial in c for square integer matrices.
UPolyQ pencil_determinant(const Matrix<Int>& A, const Matrix<Int>& B);

// Integer-coefficient polynomial norms used for bounds.
Int sum_abs_coeffs(const BPolyQ& g);

}  // namespace pencil
