#pragma once

#include <memory>
#include <string>

#include "pencil/upoly_q.hpp"

namespace pencil {

// Q[t]/(m(t)) with m monic and irreducible over Q.
struct NumberField {
  UPolyQ minpoly;
  std::string name = "t";
};

using NumberFieldPtr = std::shared_ptr<const NumberField>;

// Builds Q[t]/(m); m is made monic and checked for irreducibility.
NumberFieldPtr make_number_field(const UPolyQ& m, const std::string& name = "t");

// Element of a number field. A null field pointer denotes a rational
// constant that has not been attached to a field yet; arithmetic attaches it
// to the field of the other operand.
struct NF {
  NumberFieldPtr K;
  UPolyQ v{Rat(0)};

  NF() = default;
  NF(NumberFieldPtr k, UPolyQ val) : K(std::move(k)), v(std::move(val)) { reduce(); }
  NF(NumberFieldPtr k, const Rat& c) : K(std::move(k)), v(UPolyQ::constant(c)) {}

  static NF generator(const NumberFieldPtr& k) { return NF(k, UPolyQ::x(Rat(0))); }

  void reduce() {
    if (K && v.deg() >= K->minpoly.deg()) v = v % K->minpoly;
  }
  bool is_rational() const { return v.deg() <= 0; }
  Rat rational_value() const { return v[0]; }

  friend NF operator+(const NF& a, const NF& b) { return NF(pick(a, b), a.v + b.v); }
  friend NF operator-(const NF& a, const NF& b) { return NF(pick(a, b), a.v - b.v); }
  friend NF operator-(const NF& a) { return NF(a.K, -a.v); }
  friend NF operator*(const NF& a, const NF& b) { return NF(pick(a, b), a.v * b.v); }
  friend NF operator/(const NF& a, const NF& b) { return a * b.inverse(); }
  NF& operator+=(const NF& b) { return *this = *this + b; }
  NF& operator-=(const NF& b) { return *this = *this - b; }
  NF& operator*=(const NF& b) { return *this = *this * b; }
  friend bool operator==(const NF& a, const NF& b) { return a.v == b.v; }
  friend bool operator!=(const NF& a, const NF& b) { return !(a == b); }

  NF inverse() const {
    if (v.is_zero()) throw PreconditionError("division by zero in number field");
    if (v.deg() == 0) return NF(K, Rat(1) / v[0]);
    check(K != nullptr, "number field element without field");
    return NF(K, inverse_mod(v, K->minpoly));
  }

 private:
  static NumberFieldPtr pick(const NF& a, const NF& b) { return a.K ? a.K : b.K; }
};

inline bool is_zero(const NF& a) { return a.v.is_zero(); }
inline NF zero_like(const NF& a) { return NF(a.K, Rat(0)); }
inline NF one_like(const NF& a) { return NF(a.K, Rat(1)); }
inline NF from_int_like(const NF& a, long x) { return NF(a.K, Rat(x)); }
inline NF inv(const NF& a) { return a.inverse(); }
std::string to_string(const NF& a);

// Matrix of multiplication by a in the power basis.
std::vector<std::vector<Rat>> multiplication_matrix(const NF& a);
// Norm N_{K/Q}(a) and minimal polynomial of a over Q.
Rat norm(const NF& a);
UPolyQ minimal_polynomial(const NF& a);
UPolyQ characteristic_polynomial(const NF& a);

}  // namespace pencil
