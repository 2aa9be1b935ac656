#pragma once

#include "pencil/bivariate.hpp"

namespace pencil {

// Generators f*w_X - w*f_X and f*w_Y - w*f_Y of the critical locus of the
// pencil f - c*w (for w = 1 these are -f_X and -f_Y), and their gcd.
struct CriticalGenerators {
  BPolyQ A, B, G;
};
CriticalGenerators critical_generators(const BPolyQ& f, const BPolyQ& w);

// Values of f/w along the curve G = 0, on which f/w is locally constant
// away from w = 0. Components inside w = 0 set `infinity`.
struct CurveValues {
  UPolyQ values = UPolyQ::constant(Rat(1));  // squarefree, roots are the values
  bool infinity = false;
};
CurveValues values_along(const BPolyQ& f, const BPolyQ& w, const BPolyQ& G);

}  // namespace pencil
