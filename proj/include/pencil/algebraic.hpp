#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pencil/upoly_q.hpp"

namespace pencil {

// Closed rectangle [re_lo, re_hi] x [im_lo, im_hi] with rational corners.
// Real roots get boxes of zero height on the real axis.
struct Box {
  Rat re_lo, re_hi, im_lo, im_hi;
  bool on_real_axis() const { return im_lo == 0 && im_hi == 0; }
  bool intersects(const Box& o) const {
    return !(re_hi < o.re_lo || o.re_hi < re_lo || im_hi < o.im_lo || o.im_hi < im_lo);
  }
  Rat re_mid() const { return (re_lo + re_hi) / 2; }
  Rat im_mid() const { return (im_lo + im_hi) / 2; }
};

// A complex algebraic number: irreducible primitive integer minimal
// polynomial with positive leading coefficient, an isolating box, and the
// index of the root in the canonical isolation of the minimal polynomial.
struct AlgebraicNumber {
  ZVec minpoly;
  Box box;
  int index = 0;
  std::optional<Rat> rational;

  static AlgebraicNumber from_rational(const Rat& r);
  int degree() const { return static_cast<int>(minpoly.size()) - 1; }
  bool is_rational() const { return rational.has_value(); }
  bool is_real() const { return box.on_real_axis(); }
  double approx_re() const;
  double approx_im() const;
};

// Equality: same minimal polynomial and the same root of it.
bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b);
inline bool operator!=(const AlgebraicNumber& a, const AlgebraicNumber& b) { return !(a == b); }
// Total order: degree, coefficients from the leading one down, then the
// canonical root order (real part, then imaginary part of box midpoints).
bool operator<(const AlgebraicNumber& a, const AlgebraicNumber& b);
std::string to_string(const AlgebraicNumber& a);

// One AlgebraicNumber per complex root of a squarefree p, sorted.
std::vector<AlgebraicNumber> isolate_roots(const UPolyQ& p);

// Roots of an irreducible primitive integer polynomial in canonical order,
// with boxes certified at the given refinement level (boxes shrink as the
// level grows; level 0 fixes the canonical order).
std::vector<Box> canonical_boxes(const ZVec& minpoly, int level);

// The same number with a box refined to the given level.
AlgebraicNumber refine(const AlgebraicNumber& a, int level);

// Index of the root of minpoly isolated by an arbitrary certified box.
int locate_root(const ZVec& minpoly, const Box& box);

// Real-root isolation of a squarefree polynomial by Descartes' rule of signs
// and bisection: disjoint open intervals, or a == b for rational roots.
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const UPolyQ& p);

// Finite Galois-stable set of algebraic numbers: the roots of a squarefree
// rational polynomial, stored as its sorted irreducible factors.
class AlgebraicSet {
 public:
  AlgebraicSet() = default;
  static AlgebraicSet from_polynomial(const UPolyQ& p);
  static AlgebraicSet from_rationals(const std::vector<Rat>& values);

  UPolyQ defining() const;
  const std::vector<ZVec>& factors() const { return factors_; }
  std::vector<AlgebraicNumber> members() const;
  std::vector<Rat> rational_members() const;
  std::size_t size() const;
  bool empty() const { return factors_.empty(); }
  bool contains(const Rat& c) const;
  bool contains_factor(const ZVec& q) const;

  AlgebraicSet unite(const AlgebraicSet& o) const;
  AlgebraicSet intersect(const AlgebraicSet& o) const;
  AlgebraicSet minus(const AlgebraicSet& o) const;
  bool subset_of(const AlgebraicSet& o) const;

  friend bool operator==(const AlgebraicSet& a, const AlgebraicSet& b) { return a.factors_ == b.factors_; }
  friend bool operator!=(const AlgebraicSet& a, const AlgebraicSet& b) { return !(a == b); }

 private:
  void add_factor(const ZVec& q);
  std::vector<ZVec> factors_;
};

// Rational members first, in increasing order.
std::string to_string(const AlgebraicSet& s);

// Canonical form of an irreducible factor (primitive, positive leading coefficient).
ZVec canonical_factor(const UPolyQ& q);
// Lexicographic comparison from the leading coefficient down, degree first.
bool zvec_less(const ZVec& a, const ZVec& b);

}  // namespace pencil
