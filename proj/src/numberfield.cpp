#include "pencil/numberfield.hpp"

namespace pencil {

NumberFieldPtr make_number_field(const UPolyQ& m, const std::string& name) {
  require(m.deg() >= 1, "number field modulus must have degree >= 1");
  auto fac = factor_univariate_rationals(m);
  if (!(fac.factors.size() == 1 && fac.factors[0].second == 1))
    throw PreconditionError("number field modulus is reducible over Q");
  auto K = std::make_shared<NumberField>();
  K->minpoly = m.monic();
  K->name = name;
  return K;
}

std::string to_string(const NF& a) {
  std::string var = a.K ? a.K->name : "t";
  if (a.v.deg() <= 0) return to_string(a.v[0]);
  return "(" + to_string(a.v, var) + ")";
}

std::vector<std::vector<Rat>> multiplication_matrix(const NF& a) {
  check(a.K != nullptr, "multiplication matrix needs a field");
  int n = a.K->minpoly.deg();
  std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n, Rat(0)));
  UPolyQ basis = UPolyQ::constant(Rat(1));
  for (int j = 0; j < n; ++j) {
    UPolyQ col = (a.v * basis) % a.K->minpoly;
    for (int i = 0; i < n; ++i) M[i][j] = col[i];
    basis = basis.shift(1);
  }
  return M;
}

UPolyQ characteristic_polynomial(const NF& a) {
  check(a.K != nullptr, "characteristic polynomial needs a field");
  return charpoly_mod(a.v, a.K->minpoly);
}

UPolyQ minimal_polynomial(const NF& a) {
  if (!a.K || a.v.deg() <= 0) return upoly_q({-a.v[0], Rat(1)});
  return squarefree_part_q(characteristic_polynomial(a));
}

Rat norm(const NF& a) {
  if (!a.K) return a.v[0];
  UPolyQ cp = characteristic_polynomial(a);
  Rat c = cp[0];
  return (cp.deg() % 2) ? -c : c;
}

}  // namespace pencil
