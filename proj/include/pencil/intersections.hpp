#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pencil/algebraic.hpp"
#include "pencil/bivariate.hpp"

namespace pencil {

// Intersection number; nullopt stands for infinity.
using Mult = std::optional<long>;
inline constexpr std::nullopt_t kInfinite = std::nullopt;

inline Mult add(const Mult& a, const Mult& b) {
  if (!a || !b) return kInfinite;
  return *a + *b;
}
std::string to_string(const Mult& m);

// Q as the degree-one field Q[t]/(t).
NumberFieldPtr rational_field();

BPoly<NF> lift(const BPolyQ& f, const NumberFieldPtr& K);

// A point of the affine plane, or (x : y : 0) on the line at infinity, with
// coordinates in a number field. A point over a field of degree d stands for
// all d conjugate points. Infinite points are normalized so that the first
// nonzero coordinate is 1.
struct PlanePoint {
  NumberFieldPtr field;
  NF x, y;
  bool at_infinity = false;

  static PlanePoint rational(const Rat& x, const Rat& y);
  int degree() const { return field->minpoly.deg(); }
};
std::string to_string(const PlanePoint& q);

// f evaluated at an affine point.
NF eval_at(const BPolyQ& f, const PlanePoint& q);

// Galois orbit of common zeros of a coprime pair; every point of the orbit
// has the same intersection multiplicity.
struct CommonZeroOrbit {
  PlanePoint point;
  long multiplicity = 0;
};

// All common zeros of coprime g, h, one record per Galois orbit.
std::vector<CommonZeroOrbit> common_zeros(const BPolyQ& g, const BPolyQ& h);

// I(F, G; origin) by Fulton's algorithm over any coefficient field.
template <class E>
Mult fulton_at_origin(BPoly<E> F, BPoly<E> G) {
  E z = F.zero();
  long acc = 0;
  auto on_axis = [&](const BPoly<E>& P) { return P.eval_y(z); };  // P(X, 0)
  while (true) {
    if (F.is_zero() || G.is_zero()) return kInfinite;
    if (!detail::elem_is_zero(F.constant_term()) || !detail::elem_is_zero(G.constant_term())) return acc;
    UPoly<E> a = on_axis(F), b = on_axis(G);
    if (a.is_zero() && b.is_zero()) return kInfinite;
    if (a.is_zero() || (!b.is_zero() && b.deg() < a.deg())) {
      std::swap(F, G);
      std::swap(a, b);
    }
    if (b.is_zero()) {
      // G = Y * G1: I(F, G) = I(F, Y) + I(F, G1) and I(F, Y) = ord_X F(X, 0).
      acc += a.ord();
      BPoly<E> G1(z);
      for (auto& [k, c] : G.terms()) G1.add_term(k.first, k.second - 1, c);
      G = std::move(G1);
      continue;
    }
    int r = a.deg(), s = b.deg();
    G = a.lc() * G - b.lc() * (BPoly<E>::monomial(one_like(z), s - r, 0) * F);
  }
}

// I(g, h; Q) at an affine point.
Mult intersection_multiplicity(const BPolyQ& g, const BPolyQ& h, const PlanePoint& q);

// I(g, h; A): infinite iff g and h share a nonconstant factor.
Mult affine_total(const BPolyQ& g, const BPolyQ& h);

// (I(g, h; f), I(g, h; A \ f)) for coprime g, h.
struct SplitTotals {
  long on_curve = 0, off_curve = 0;
};
SplitTotals split_totals(const BPolyQ& g, const BPolyQ& h, const BPolyQ& f);

// The maximum over constants mu of I(g, h - mu; A), the set of deficient
// values, and the summed deficiency over nonzero deficient values.
struct IHat {
  Mult value;
  AlgebraicSet alpha;
  Mult beta;
  // Per irreducible factor q of the deficient locus: I(g, h - lambda; A) at
  // each root lambda of q.
  std::vector<std::pair<ZVec, long>> deficient_values;
};
IHat i_hat(const BPolyQ& g, const BPolyQ& h);

// rho(f) = I(f_X, f_Y; A \ f) + beta(f_Y, f; A).
Mult legacy_rank_rho(const BPolyQ& f);

// Values of f along the irreducible curve p = 0 when f is constant there
// (several conjugate values when p splits over the algebraic closure);
// nullopt when f is not constant along p.
std::optional<AlgebraicSet> residue_constant(const BPolyQ& f, const BPolyQ& p);

// Raised when the Newton-Puiseux recursion exceeds its depth bound.
struct DepthBoundError : std::runtime_error {
  DepthBoundError(const std::string& what, long partial) : std::runtime_error(what), partial_count(partial) {}
  long partial_count;
};

struct InfinityData {
  // One point per irreducible rational factor of the degree form.
  std::vector<PlanePoint> points;
  // Number of distinct points over the algebraic closure.
  long geometric_count = 0;
  // Branches at each point of `points` (not multiplied by the degree).
  std::vector<long> branches;
  long tau = 0;
};

// Points at infinity only; branches and tau are left empty.
InfinityData points_at_infinity(const BPolyQ& f);
// Points at infinity with their branch counts and tau.
InfinityData infinity_data(const BPolyQ& f);

// Number of branches of f at an affine or infinite point (0 if the point is
// not on the curve). depth_bound 0 selects 2 * deg(f)^2.
long branch_count(const BPolyQ& f, const PlanePoint& q, int depth_bound = 0);

// Number of places at infinity of a squarefree f.
long tau_places_at_infinity(const BPolyQ& f);

}  // namespace pencil
