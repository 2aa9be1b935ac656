#include "pencil/absolute.hpp"

#include <algorithm>
#include <numeric>

#include "pencil/critical.hpp"
#include "pencil/elimination.hpp"
#include "pencil/ratfunc.hpp"

namespace pencil {

namespace {

constexpr int kMaxShears = 64;

Rat shear_value(int i) { return i == 0 ? Rat(0) : (i % 2 ? Rat((i + 1) / 2) : Rat(-(i / 2))); }

template <class E>
bool is_squarefree(const BPoly<E>& f) {
  auto sd = squarefree_decompose(f);
  return sd.factors.size() == 1 && sd.factors[0].second == 1;
}

// An image of f under a linear change of variables with both partial
// degrees positive and gcd(f, f_X) = 1.
template <class E>
BPoly<E> prepare(BPoly<E> f) {
  if (f.deg_y() == 0) f = f.swap_xy();
  E z = f.zero();
  for (int i = 0; i < kMaxShears; ++i) {
    BPoly<E> g = f.shear_y(from_int_like(z, shear_value(i).get_num().get_si()));
    if (g.deg_x() < 1 || g.deg_y() < 1) continue;
    if (poly_gcd(g, g.dx()).is_constant()) return g;
  }
  throw InternalError("no shear separates the factors from the X-direction");
}

template <class E>
Matrix<E> system_for(const BPoly<E>& f) {
  return gao_matrix(f, f.deg_x(), f.deg_y());
}

int nullity_mod(const Matrix<Rat>& M) {
  int cols = static_cast<int>(M[0].size());
  int best = cols;
  for (std::size_t i = 0; i < 2 && best > 1; ++i) {
    try {
      best = std::min(best, cols - matrix_rank_mod(M, large_prime(i)));
    } catch (const PreconditionError&) {
    }
  }
  return best;
}

int nullity_q(const Matrix<Rat>& M) {
  if (nullity_mod(M) == 1) return 1;
  return static_cast<int>(M[0].size()) - matrix_rank_q(M);
}

// A root of m modulo a prime p, if the reduction is defined and has one.
std::optional<Zp> root_mod(const UPolyQ& m, std::uint32_t p) {
  std::vector<Zp> c;
  for (int i = 0; i <= m.deg(); ++i) {
    if (divisible_by(m[i], p)) return std::nullopt;
    c.push_back(reduce_mod(m[i], p));
  }
  for (std::uint32_t x = 0; x < p; ++x) {
    Zp X = Zp::raw(p, x), acc = Zp::raw(p, 0);
    for (int i = m.deg(); i >= 0; --i) acc = acc * X + c[i];
    if (acc.v == 0) return X;
  }
  return std::nullopt;
}

std::optional<Matrix<Zp>> reduce_at_root(const Matrix<NF>& M, std::uint32_t p, Zp r) {
  Matrix<Zp> A;
  for (auto& row : M) {
    std::vector<Zp> out;
    for (auto& x : row) {
      Zp acc = Zp::raw(p, 0);
      for (int i = x.v.deg(); i >= 0; --i) {
        if (divisible_by(x.v[i], p)) return std::nullopt;
        acc = acc * r + reduce_mod(x.v[i], p);
      }
      out.push_back(acc);
    }
    A.push_back(std::move(out));
  }
  return A;
}

int nullity_nf_mod(const Matrix<NF>& M, const UPolyQ& m) {
  int cols = static_cast<int>(M[0].size());
  int best = cols, tried = 0;
  for (std::uint32_t p = 40009; tried < 3 && best > 1 && p < 60000; p += 2) {
    if (!is_prime_u32(p)) continue;
    auto r = root_mod(m, p);
    if (!r) continue;
    auto A = reduce_at_root(M, p, *r);
    if (!A) continue;
    ++tried;
    best = std::min(best, cols - matrix_rank(std::move(*A)));
  }
  return best;
}

int nullity_nf(const Matrix<NF>& M, const UPolyQ& m) {
  if (nullity_nf_mod(M, m) == 1) return 1;
  return static_cast<int>(M[0].size()) - matrix_rank(M);
}

const UPolyQ& field_modulus(const BPoly<NF>& f) {
  static const UPolyQ t = UPolyQ::x(Rat(0));
  return f.zero().K ? f.zero().K->minpoly : t;
}

template <class E>
long homogeneous_or_linear(const BPoly<E>& f) {
  if (f.total_degree() == 1) return 1;
  if (f.is_homogeneous()) return f.total_degree();
  return 0;
}

template <class E>
BPoly<E> checked_input(const BPoly<E>& f) {
  require(!f.is_constant(), "absolute factor count of a constant");
  require(is_squarefree(f), "absolute factor count needs a squarefree polynomial");
  return f;
}

}  // namespace

long absolute_factor_count(const BPolyQ& f) {
  checked_input(f);
  if (long s = homogeneous_or_linear(f)) return s;
  return nullity_q(system_for(prepare(f)));
}

long absolute_factor_count(const BPoly<NF>& f) {
  checked_input(f);
  if (long s = homogeneous_or_linear(f)) return s;
  return nullity_nf(system_for(prepare(f)), field_modulus(f));
}

long factor_count_upper_bound(const BPolyQ& f) {
  require(!f.is_constant(), "factor count of a constant");
  if (long s = homogeneous_or_linear(f)) return s;
  if (f.deg_x() < 1 || f.deg_y() < 1) return f.total_degree();
  return nullity_mod(system_for(f));
}

long factor_count_upper_bound(const BPoly<NF>& f) {
  require(!f.is_constant(), "factor count of a constant");
  if (long s = homogeneous_or_linear(f)) return s;
  if (f.deg_x() < 1 || f.deg_y() < 1) return f.total_degree();
  return nullity_nf_mod(system_for(f), field_modulus(f));
}

long absolute_factor_count(const BPoly<Zp>& f) {
  require(!f.is_constant(), "absolute factor count of a constant");
  long d = f.total_degree();
  if (static_cast<long>(f.zero().p) <= 2 * d * d) throw PreconditionError("characteristic too small for the factor count");
  checked_input(f);
  if (long s = homogeneous_or_linear(f)) return s;
  Matrix<Zp> M = system_for(prepare(f));
  return static_cast<long>(M[0].size()) - matrix_rank(std::move(M));
}

long absolute_irreducibility_parity_demo(long u) {
  require(u >= 1, "parity demo needs u >= 1");
  BPolyQ f = BPolyQ::monomial(Rat(1), 2, 0) + BPolyQ::monomial(Rat(1), 0, static_cast<int>(u));
  return absolute_factor_count(f);
}

namespace {

struct PencilSystem {
  BPolyQ f, w;  // sheared, integer coefficients
  int m = 0, n = 0;
  Matrix<Rat> Mf, Mw;
};

BPolyQ integer_scaled(const BPolyQ& f, const Int& L) { return Rat(L) * f; }

Int common_denominator(const BPolyQ& f, const BPolyQ& w) {
  Int L = 1;
  for (auto* p : {&f, &w})
    for (auto& [k, c] : p->terms()) L = lcm(L, Int(c.get_den()));
  return L;
}

// Shear of the pencil after which a sample member c0 keeps the generic
// partial degrees, which are positive, and is coprime to its X-derivative.
PencilSystem pencil_system(const BPolyQ& f0, const BPolyQ& w0) {
  Int L = common_denominator(f0, w0);
  BPolyQ f = integer_scaled(f0, L), w = integer_scaled(w0, L);
  const Rat c0(7, 11);
  if (f.deg_y() == 0 && w.deg_y() == 0) {
    f = f.swap_xy();
    w = w.swap_xy();
  }
  for (int i = 0; i < kMaxShears; ++i) {
    Rat s = shear_value(i);
    BPolyQ fs = f.shear_y(s), ws = w.shear_y(s);
    int m = std::max(fs.deg_x(), ws.deg_x()), n = std::max(fs.deg_y(), ws.deg_y());
    if (m < 1 || n < 1) continue;
    BPolyQ sample = fs - c0 * ws;
    if (sample.deg_x() != m || sample.deg_y() != n) continue;
    if (!poly_gcd(sample, sample.dx()).is_constant()) continue;
    PencilSystem ps{fs, ws, m, n, gao_matrix(fs, m, n), gao_matrix(ws, m, n)};
    return ps;
  }
  throw InternalError("no shear gives a regular generic member");
}

Matrix<Rat> member_matrix(const PencilSystem& ps, const Rat& c) {
  Matrix<Rat> M = ps.Mf;
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = 0; j < M[i].size(); ++j)
      if (ps.Mw[i][j] != 0) M[i][j] -= c * ps.Mw[i][j];
  return M;
}

long generic_nullity(const PencilSystem& ps) {
  int cols = static_cast<int>(ps.Mf[0].size());
  for (long k : {3L, 17L, 101L})
    if (cols - matrix_rank_mod(member_matrix(ps, Rat(k, 13)), large_prime(0)) == 1) return 1;
  Matrix<RatFunc> M;
  RatFunc c = RatFunc::parameter();
  for (std::size_t i = 0; i < ps.Mf.size(); ++i) {
    std::vector<RatFunc> row;
    for (std::size_t j = 0; j < ps.Mf[i].size(); ++j) row.push_back(RatFunc(ps.Mf[i][j]) - c * RatFunc(ps.Mw[i][j]));
    M.push_back(std::move(row));
  }
  return cols - matrix_rank(std::move(M));
}

bool both_homogeneous_same_degree(const BPolyQ& f, const BPolyQ& w) {
  return f.is_homogeneous() && w.is_homogeneous() && f.total_degree() == w.total_degree();
}

// det of the minor (rows, cols) of Mf - c*Mw as a polynomial in c.
UPolyQ minor_determinant(const PencilSystem& ps, const MinorSelection& sel) {
  std::size_t k = sel.rows.size();
  Matrix<Int> A(k, std::vector<Int>(k)), B(k, std::vector<Int>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Rat& a = ps.Mf[sel.rows[i]][sel.cols[j]];
      const Rat& b = ps.Mw[sel.rows[i]][sel.cols[j]];
      check(a.get_den() == 1 && b.get_den() == 1, "pencil system is not integral");
      A[i][j] = a.get_num();
      B[i][j] = -b.get_num();
    }
  return pencil_determinant(A, B);
}

// A maximal nonsingular minor of the member at c, with rows tried in the
// given order.
MinorSelection select_minor(const PencilSystem& ps, const Rat& c, const std::vector<int>& order) {
  Matrix<Rat> M = member_matrix(ps, c), P;
  for (int r : order) P.push_back(M[r]);
  MinorSelection sel = select_minor_mod(P, large_prime(1));
  for (int& r : sel.rows) r = order[r];
  return sel;
}

}  // namespace

long generic_factor_count(const BPolyQ& f, const BPolyQ& w) {
  require(!f.is_constant(), "generic count of a constant pencil");
  if (both_homogeneous_same_degree(f, w)) return f.total_degree();
  return generic_nullity(pencil_system(f, w));
}

ReducibilityCandidates pencil_reducibility_candidates(const BPolyQ& f, const BPolyQ& w) {
  require(!f.is_constant() && !w.is_zero(), "pencil needs a nonconstant f and nonzero w");
  if (!poly_gcd(f, w).is_constant()) throw PreconditionError("f and w have a common factor");
  ReducibilityCandidates rc;
  if (both_homogeneous_same_degree(f, w)) {
    rc.generic_count = f.total_degree();
    rc.degenerate = rc.generic_count > 1;
    rc.notes.push_back("pencil of binary forms");
    return rc;
  }
  PencilSystem ps = pencil_system(f, w);
  rc.generic_count = generic_nullity(ps);
  if (rc.generic_count > 1) {
    rc.degenerate = true;
    rc.notes.push_back("generic member has " + std::to_string(rc.generic_count) + " absolute factors");
    return rc;
  }
  int rows = static_cast<int>(ps.Mf.size());
  int cols = static_cast<int>(ps.Mf[0].size());
  std::vector<int> forward(rows), backward(rows);
  std::iota(forward.begin(), forward.end(), 0);
  std::reverse_copy(forward.begin(), forward.end(), backward.begin());
  UPolyQ locus(Rat(0));
  int used = 0;
  for (auto& [order, c] : {std::pair{forward, Rat(3, 13)}, std::pair{backward, Rat(-5, 7)}}) {
    MinorSelection sel = select_minor(ps, c, order);
    if (static_cast<int>(sel.rows.size()) != cols - 1) continue;
    UPolyQ d = minor_determinant(ps, sel);
    if (d.is_zero()) continue;
    locus = gcd_q(locus, d);
    ++used;
    rc.notes.push_back("minor of order " + std::to_string(cols - 1) + " with determinant degree " + std::to_string(d.deg()));
  }
  check(used > 0, "no nonsingular minor of the generic system");
  if (locus.deg() > 0) rc.candidates = AlgebraicSet::from_polynomial(squarefree_part_q(locus));
  CriticalGenerators cg = critical_generators(f, w);
  CurveValues mult = values_along(f, w, cg.G);
  if (mult.values.deg() > 0) {
    rc.candidates = rc.candidates.unite(AlgebraicSet::from_polynomial(mult.values));
    rc.notes.push_back("non-squarefree members from the critical curve");
  }
  return rc;
}

}  // namespace pencil
