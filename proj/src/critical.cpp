#include "pencil/critical.hpp"

namespace pencil {

namespace {

// 0, 1, -1, 2, -2, ...
Rat sample(int i) { return i == 0 ? Rat(0) : (i % 2 ? Rat((i + 1) / 2) : Rat(-(i / 2))); }

constexpr int kMaxSamples = 200;

// Values of f/w at the roots of the squarefree P(Y) = curve(x0, Y).
UPolyQ values_on_fiber(const UPolyQ& P, const UPolyQ& F, const UPolyQ& W) {
  UPolyQ phi = (F * inverse_mod(W, P)) % P;
  return minpoly_mod(phi, P);
}

UPolyQ values_in_y(const BPolyQ& f, const BPolyQ& w, const BPolyQ& curve) {
  for (int i = 0; i < kMaxSamples; ++i) {
    Rat x0 = sample(i);
    UPolyQ P = curve.eval_x(x0);
    if (P.deg() != curve.deg_y() || gcd_q(P, P.derivative()).deg() > 0) continue;
    UPolyQ W = w.eval_x(x0);
    if (W.is_zero() || gcd_q(P, W).deg() > 0) continue;
    return values_on_fiber(P, f.eval_x(x0), W);
  }
  throw InternalError("no regular fiber found for curve values");
}

}  // namespace

CriticalGenerators critical_generators(const BPolyQ& f, const BPolyQ& w) {
  CriticalGenerators cg;
  cg.A = f * w.dx() - w * f.dx();
  cg.B = f * w.dy() - w * f.dy();
  cg.G = poly_gcd(cg.A, cg.B);
  return cg;
}

CurveValues values_along(const BPolyQ& f, const BPolyQ& w, const BPolyQ& G) {
  CurveValues out;
  if (G.is_zero() || G.is_constant()) return out;
  BPolyQ rad = squarefree_part(G);
  BPolyQ on_w = poly_gcd(rad, w);
  out.infinity = !on_w.is_constant();
  BPolyQ curve = exact_div(rad, on_w);
  if (curve.is_constant()) return out;
  UPolyQ vertical = detail::rec_content(curve.y_coeffs(), Rat(0));
  BPolyQ prim = exact_div(curve, BPolyQ::from_x(vertical));
  UPolyQ vals = UPolyQ::constant(Rat(1));
  if (prim.deg_y() > 0) vals = vals * values_in_y(f, w, prim);
  if (vertical.deg() > 0) vals = vals * values_in_y(f.swap_xy(), w.swap_xy(), BPolyQ::from_y(vertical));
  out.values = squarefree_part_q(vals);
  return out;
}

}  // namespace pencil
