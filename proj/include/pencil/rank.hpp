#pragma once

#include <vector>

#include "pencil/intersections.hpp"
#include "pencil/sets.hpp"

namespace pencil {

// The rank formulas need f nonconstant with a constant leading coefficient
// in Y; they raise PreconditionError otherwise, and on infinite
// intersection totals.

// (1 - N) + deg_Y [f] + I(f, f'; A) - I(f_X, f'; f) with [f] = gcd(f, f_X, f_Y),
// h = gcd(f_X, f_Y) and f' = f_Y / h.
long rho_a(const BPolyQ& f);
// (1 - N) + I(f, f_Y; A) - I(f_X, f_Y; f) for squarefree f.
long rho_a_squarefree(const BPolyQ& f);

struct DefsetMember {
  ZVec minpoly;
  long rho_a = 0;
  long fiber_gcd_degree = 0;  // deg_Y [f - c]
};

// rho_a(f - c) for every c at once: (1 - N) + K(c) + I(f - c, f'; A) - J(c),
// where K and J count multiplicities of c among the values of f on the
// components of h and at the common zeros of f_X and f'.
class RankData {
 public:
  explicit RankData(const BPolyQ& f);

  int N() const { return N_; }
  const BPolyQ& hhat() const { return hhat_; }
  const BPolyQ& fprime() const { return fprime_; }
  // (1 - N) + max_c I(f - c, f'; A).
  long rho_pi() const { return 1 - N_ + D_; }
  DefsetMember at(const ZVec& q) const;
  long at(const Rat& c) const;
  // Roots of K, J and of the leading coefficient of Res_Y(f', f - T).
  AlgebraicSet candidates() const;

 private:
  BPolyQ f_, hhat_, fprime_;
  int N_ = 0;
  long D_ = 0;
  UPolyQ K_, J_;
  std::vector<UPolyQ> s_;
};

long rho_pi(const BPolyQ& f);

struct DefsetResult {
  AlgebraicSet set;
  std::vector<DefsetMember> members;
};
DefsetResult defset(const BPolyQ& f);

struct RankReport {
  BPolyQ f;  // normalized
  int N = 0;
  BPolyQ hhat, fprime;
  long rho_a = 0;
  std::optional<long> rho_a_squarefree;
  long rho_pi = 0;
  // (1 - N) + i_hat(f, f') with the arguments in the literal order.
  Mult rho_pi_literal;
  std::vector<long> rho_a_generic;
  DefsetResult defset;
  long v_inf = 0;
  bool strict_star = false;
  long deficiency_sum = 0;  // sum over defset of rho_pi - rho_a(f - c)
  long zeta = 0;
  long jungian_residual = 0;
  long euler_residual = 0;
  // rho_pi - rho_a(f - c) >= -deg_Y [f - c] on every member.
  bool fiber_lower_bound = true;
  // Same defset after a further shear of the coordinates.
  bool shear_stable = true;

  AlgebraicSet singset, multset;
  bool singset_minus_multset_in_defset = true;
  long defset_size = 0, defset_bound = 0;
  long defset_off_multset_size = 0;
  long singset_size = 0, singset_bound = 0;
  bool defset_bound_holds() const { return defset_size <= defset_bound; }
  bool defset_off_multset_bound_holds() const { return defset_off_multset_size <= defset_bound; }
  bool singset_bound_holds() const { return singset_size <= singset_bound; }
};
RankReport rank_report(const BPolyQ& f);

}  // namespace pencil
