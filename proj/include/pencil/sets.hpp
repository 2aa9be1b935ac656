#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pencil/absolute.hpp"
#include "pencil/algebraic.hpp"
#include "pencil/bivariate.hpp"

namespace pencil {

// The pencil f - c*w; w = 1 for special pencils.
struct PencilInput {
  BPolyQ f, w;
  bool normalized = false;
  // Normalized coordinates: optionally swap X and Y, then X -> X + lambda*Y.
  bool swapped = false;
  long lambda = 0;
  // f, w and 1 are linearly dependent.
  bool dependent = false;

  bool special() const { return w.is_constant(); }
  // A polynomial in original coordinates carried to the normalized ones.
  BPolyQ apply(const BPolyQ& g) const;
};

// Checks gcd(f, w) = 1, deg f >= deg w and f nonconstant.
PencilInput make_pencil(const BPolyQ& f, const BPolyQ& w);
PencilInput make_pencil(const BPolyQ& f);

// f (and a nonconstant w) with Y-degree equal to the total degree, using
// the identity, the swap, or the shear X -> X + lambda*Y with the smallest
// natural lambda.
PencilInput normalize(const PencilInput& in);

struct SingsetResult {
  AlgebraicSet set;
  // Over a prime field where both partial derivatives vanish identically,
  // every member of the pencil is singular.
  bool all_of_k = false;
  // The member w (c = infinity) is singular somewhere off the base points.
  bool infinity = false;
};
SingsetResult singset(const PencilInput& in);
SingsetResult singset_prime_field(const BPolyQ& f, std::uint32_t p);

struct MultsetResult {
  AlgebraicSet set;
  bool infinity = false;
  BPolyQ hhat;
  // Rational members with the multiple factor gcd(hhat, f - c*w).
  std::vector<std::pair<Rat, BPolyQ>> witnesses;
  // hhat = prod over the set of gcd(f - c, f_X, f_Y), for special pencils.
  std::optional<bool> product_identity;
};
MultsetResult multset(const PencilInput& in);

struct FiberLayer {
  int e = 1;        // multiplicity
  long count = 0;   // absolutely irreducible factors at this multiplicity
  int y_degree = 0; // Y-degree of the layer polynomial
};

// One member of the pencil: c is the set of roots of `minpoly`, or infinity.
struct RefinedFiber {
  ZVec minpoly;
  bool at_infinity = false;
  std::vector<FiberLayer> layers;

  // e(c) in nondecreasing order.
  std::vector<int> exponents() const;
  long weighted_count() const;
  bool reducible() const { return weighted_count() > 1; }
};
std::string to_string(const RefinedFiber& r);
std::string exponents_string(const RefinedFiber& r);

// Fiber f - c*w at the roots of an irreducible q (or at infinity: w).
RefinedFiber analyze_fiber(const BPolyQ& f, const BPolyQ& w, const ZVec& q);
RefinedFiber analyze_fiber_at_infinity(const BPolyQ& w);

struct RedsetResult {
  bool composite = false;
  long generic_count = 1;
  AlgebraicSet candidates;
  AlgebraicSet set;
  std::vector<RefinedFiber> fibers;  // reducible members, one per factor
  bool infinity = false;
  std::optional<RefinedFiber> fiber_at_infinity;
};
RedsetResult redset_refined(const PencilInput& in);

// Places at infinity of a generic member f - c0 of a special pencil, at two
// values c0 off the candidate set; |redset| <= tau - 1.
struct PlacesBound {
  long tau = 0;
  bool stable = true;
  bool holds = true;
};
PlacesBound redset_places_bound(const PencilInput& in, const RedsetResult& r);

struct PrimMember {
  ZVec minpoly;
  bool at_infinity = false;
  int mu = 1;
  long count = 0;
};
struct PrimsetResult {
  AlgebraicSet primset, uniset;
  bool prim_infinity = false, uni_infinity = false;
  std::vector<PrimMember> members;
  long plus_size() const { return static_cast<long>(primset.size()) + prim_infinity; }
};
PrimsetResult primset(const PencilInput& in);

struct CompositeResult {
  bool composite = false;
  long generic_count = 1;
  // multset empty implies noncomposite; false only when violated.
  bool multset_check = true;
};
CompositeResult is_composite(const PencilInput& in);

struct RefsetComparison {
  bool equal = false;
  std::vector<std::string> left, right;  // e(c) per member, sorted
  std::vector<std::pair<std::string, std::string>> bijection;
};
// Refsets of two special pencils, compared as multisets of exponent
// sequences with conjugate members counted separately.
RefsetComparison refset_equal(const BPolyQ& f, const BPolyQ& g);

}  // namespace pencil
