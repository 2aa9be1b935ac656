#include "pencil/rank.hpp"

#include "pencil/elimination.hpp"

namespace pencil {

namespace {

void require_proper(const BPolyQ& f) {
  require(!f.is_constant() && f.deg_y() >= 1, "rank of a polynomial without Y");
  require(f.lc_y().deg() == 0, "rank formulas need a constant leading coefficient in Y");
}

long finite(const Mult& m) {
  if (!m) throw PreconditionError("infinite intersection total in a rank formula");
  return *m;
}

BPolyQ quotient_or_zero(const BPolyQ& a, const BPolyQ& b) { return a.is_zero() ? a : exact_div(a, b); }

// prod over roots y of L(x0, Y), with multiplicity, of (T - f(x0, y)).
UPolyQ component_values(const BPolyQ& f, const BPolyQ& hhat, const Rat& x0) {
  UPolyQ K = UPolyQ::constant(Rat(1));
  if (hhat.is_constant()) return K;
  for (auto& [layer, j] : squarefree_decompose(hhat).factors) {
    if (layer.is_constant()) continue;
    UPolyQ L = layer.eval_x(x0);
    K = K * charpoly_mod(f.eval_x(x0) % L, L).pow(j);
  }
  return K;
}

int mult_or_zero(const UPolyQ& q, const UPolyQ& a) { return a.deg() < 1 ? 0 : multiplicity_of(q, a); }

std::size_t geometric_size(const AlgebraicSet& s) {
  std::size_t n = 0;
  for (auto& q : s.factors()) n += q.size() - 1;
  return n;
}

}  // namespace

long rho_a(const BPolyQ& f) {
  require_proper(f);
  BPolyQ hhat = poly_gcd(f.dx(), f.dy());
  BPolyQ fprime = exact_div(f.dy(), hhat);
  long N = f.deg_y();
  long bracket = poly_gcd(f, hhat).deg_y();
  return (1 - N) + bracket + finite(affine_total(f, fprime)) - split_totals(f.dx(), fprime, f).on_curve;
}

long rho_a_squarefree(const BPolyQ& f) {
  require_proper(f);
  auto sd = squarefree_decompose(f);
  require(sd.factors.size() == 1 && sd.factors[0].second == 1, "formula needs a squarefree polynomial");
  BPolyQ hhat = poly_gcd(f.dx(), f.dy());
  long N = f.deg_y();
  long on_curve = split_totals(quotient_or_zero(f.dx(), hhat), exact_div(f.dy(), hhat), f).on_curve;
  return (1 - N) + finite(affine_total(f, f.dy())) - on_curve;
}

RankData::RankData(const BPolyQ& f) : f_(f) {
  require_proper(f);
  N_ = f.deg_y();
  hhat_ = poly_gcd(f.dx(), f.dy());
  fprime_ = exact_div(f.dy(), hhat_);
  K_ = component_values(f, hhat_, Rat(0));
  check(K_ == component_values(f, hhat_, Rat(1)), "component values depend on the sample line");
  J_ = UPolyQ::constant(Rat(1));
  if (!fprime_.is_constant()) {
    s_ = resultant_y_shifted(fprime_, f).x_coeffs();
    UPolyQ common(Rat(0));
    for (auto& sk : s_) common = gcd_q(common, sk);
    if (common.deg() >= 1) throw PreconditionError("f' shares a component with a member of the pencil");
    D_ = static_cast<long>(s_.size()) - 1;
    for (auto& z : common_zeros(f.dx(), fprime_)) {
      NF v = eval_at(f, z.point);
      J_ = J_ * charpoly_mod(v.v, v.K->minpoly).pow(static_cast<unsigned>(z.multiplicity));
    }
  }
}

DefsetMember RankData::at(const ZVec& q) const {
  UPolyQ qq = from_zvec(q);
  long I = 0;
  if (!s_.empty()) {
    I = -1;
    for (long k = D_; k >= 0 && I < 0; --k)
      if (!divides(qq, s_[k])) I = k;
    check(I >= 0, "no finite intersection number at a value");
  }
  DefsetMember m;
  m.minpoly = q;
  m.fiber_gcd_degree = mult_or_zero(qq, K_);
  m.rho_a = (1 - N_) + m.fiber_gcd_degree + I - mult_or_zero(qq, J_);
  return m;
}

long RankData::at(const Rat& c) const { return at(canonical_factor(upoly_q({-c, Rat(1)}))).rho_a; }

AlgebraicSet RankData::candidates() const {
  UPolyQ all = K_ * J_;
  if (!s_.empty()) all = all * s_.back();
  if (all.deg() < 1) return {};
  return AlgebraicSet::from_polynomial(squarefree_part_q(all));
}

long rho_pi(const BPolyQ& f) { return RankData(f).rho_pi(); }

DefsetResult defset(const BPolyQ& f) {
  RankData rd(f);
  DefsetResult out;
  AlgebraicSet cands = rd.candidates();
  for (auto& q : cands.factors()) {
    DefsetMember m = rd.at(q);
    if (m.rho_a == rd.rho_pi()) continue;
    out.members.push_back(m);
    out.set = out.set.unite(AlgebraicSet::from_polynomial(from_zvec(q)));
  }
  return out;
}

RankReport rank_report(const BPolyQ& f0) {
  RankReport r;
  PencilInput in = normalize(make_pencil(f0));
  const BPolyQ& f = in.f;
  r.f = f;
  RankData rd(f);
  r.N = rd.N();
  r.hhat = rd.hhat();
  r.fprime = rd.fprime();
  r.rho_pi = rd.rho_pi();
  r.rho_a = rho_a(f);
  check(r.rho_a == rd.at(Rat(0)), "direct and tabulated rho_a disagree");
  auto sd = squarefree_decompose(f);
  if (sd.factors.size() == 1 && sd.factors[0].second == 1) r.rho_a_squarefree = rho_a_squarefree(f);
  IHat literal = i_hat(f, r.fprime);
  if (literal.value) r.rho_pi_literal = 1 - r.N + *literal.value;

  AlgebraicSet avoid = rd.candidates();
  for (long k = 0; r.rho_a_generic.size() < 2; ++k) {
    Rat c0(29 + 17 * k, 3);
    if (avoid.contains(c0)) continue;
    r.rho_a_generic.push_back(rho_a(f - BPolyQ::constant(c0)));
  }

  r.defset = defset(f);
  for (auto& m : r.defset.members) {
    long d = static_cast<long>(m.minpoly.size()) - 1;
    r.deficiency_sum += d * (r.rho_pi - m.rho_a);
    if (r.rho_pi - m.rho_a < -m.fiber_gcd_degree) r.fiber_lower_bound = false;
  }
  InfinityData inf = points_at_infinity(f);
  r.v_inf = inf.geometric_count;
  BPolyQ form = f.degree_form();
  r.strict_star = form.terms().size() == 1 && form.deg_y() == r.N;
  r.zeta = -r.v_inf - r.rho_pi + r.deficiency_sum;
  r.jungian_residual = r.rho_pi - (1 - r.v_inf + r.deficiency_sum);
  r.euler_residual = r.rho_pi - r.deficiency_sum;

  for (long lambda = 1; lambda < 64; ++lambda) {
    BPolyQ g = f.shear_x(Rat(lambda));
    if (g.deg_y() != g.total_degree()) continue;
    r.shear_stable = defset(g).set == r.defset.set;
    break;
  }

  r.singset = singset(in).set;
  r.multset = multset(in).set;
  r.singset_minus_multset_in_defset = r.singset.minus(r.multset).subset_of(r.defset.set);
  long h = r.hhat.deg_y();
  r.defset_size = static_cast<long>(geometric_size(r.defset.set));
  r.defset_off_multset_size = static_cast<long>(geometric_size(r.defset.set.minus(r.multset)));
  r.defset_bound = 1 + r.rho_a + h;
  r.singset_size = static_cast<long>(geometric_size(r.singset));
  r.singset_bound = 1 + r.rho_a + 2 * h;
  return r;
}

}  // namespace pencil
