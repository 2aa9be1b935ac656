#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pencil/rational.hpp"
#include "pencil/upoly.hpp"
#include "pencil/zp.hpp"

namespace pencil {

using UPolyQ = UPoly<Rat>;
using ZVec = std::vector<Int>;  // integer polynomial, lowest degree first

UPolyQ upoly_q(std::vector<Rat> c);
UPolyQ upoly_q_int(const std::vector<long>& c);
UPolyQ from_zvec(const ZVec& v);

// Primitive integer representative with positive leading coefficient.
ZVec primitive_int(const UPolyQ& p);
UPolyQ primitive_q(const UPolyQ& p);
Int content_int(const ZVec& v);

// Monic gcd over Q via a multi-prime modular algorithm.
UPolyQ gcd_q(UPolyQ a, UPolyQ b);

// Squarefree decomposition over Q: monic factors with increasing multiplicity.
std::vector<std::pair<UPolyQ, int>> squarefree_q(const UPolyQ& a);
UPolyQ squarefree_part_q(const UPolyQ& a);

// Res(a, b) using the formal degrees deg a, deg b.
Rat resultant_q(const UPolyQ& a, const UPolyQ& b);

// Complete factorization over Q. Factors are primitive integer polynomials
// with positive leading coefficient; a = unit * prod f_i^{e_i}.
struct FactorizationQ {
  Rat unit;
  std::vector<std::pair<UPolyQ, int>> factors;
};
FactorizationQ factor_univariate_rationals(const UPolyQ& a);

// Irreducible factors (no multiplicities) of a nonzero polynomial.
std::vector<UPolyQ> irreducible_factors_q(const UPolyQ& a);

// Irreducibility check by degree analysis or by factor-degree patterns
// modulo two primes (used only as a consistency check).
bool looks_irreducible_mod_primes(const UPolyQ& a);

// Polynomial through the points (x_i, y_i).
UPolyQ interpolate_q(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

// prod over roots x of r (with multiplicity) of (T - phi(x)), i.e. the
// characteristic polynomial of multiplication by phi in Q[x]/(r); monic in T.
UPolyQ charpoly_mod(const UPolyQ& phi, const UPolyQ& r);

// Minimal polynomial of phi in the reduced algebra Q[x]/(r), r squarefree.
UPolyQ minpoly_mod(const UPolyQ& phi, const UPolyQ& r);

// Multiplicity of the roots of an irreducible q as roots of a (0 if none).
int multiplicity_of(const UPolyQ& q, const UPolyQ& a);

// Reduction of a rational polynomial mod p (denominators must be units).
std::vector<Zp> reduce_poly_mod(const UPolyQ& a, std::uint32_t p);
bool has_unit_denominators(const UPolyQ& a, std::uint32_t p);

// Primes below 2^31 in decreasing order, generated on demand.
std::uint32_t large_prime(std::size_t i);

}  // namespace pencil
