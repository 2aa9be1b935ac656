#pragma once

#include <string>

#include "pencil/upoly_q.hpp"

namespace pencil {

// Element of the rational function field Q(c): num/den with den monic and
// gcd(num, den) = 1.
struct RatFunc {
  UPolyQ num{Rat(0)};
  UPolyQ den = UPolyQ::constant(Rat(1));

  RatFunc() = default;
  explicit RatFunc(const Rat& a) : num(UPolyQ::constant(a)) {}
  RatFunc(UPolyQ n, UPolyQ d) : num(std::move(n)), den(std::move(d)) { normalize(); }

  static RatFunc parameter() { return RatFunc(UPolyQ::x(Rat(0)), UPolyQ::constant(Rat(1))); }

  void normalize() {
    if (den.is_zero()) throw PreconditionError("rational function with zero denominator");
    if (num.is_zero()) {
      den = UPolyQ::constant(Rat(1));
      return;
    }
    UPolyQ g = gcd_q(num, den);
    if (g.deg() > 0) {
      num = exact_div(num, g);
      den = exact_div(den, g);
    }
    Rat l = den.lc();
    num = (Rat(1) / l) * num;
    den = (Rat(1) / l) * den;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den); }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num * b.den - b.num * a.den, a.den * b.den); }
  friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num, a.den); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num * b.num, a.den * b.den); }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.num.is_zero()) throw PreconditionError("division by zero rational function");
    return RatFunc(a.num * b.den, a.den * b.num);
  }
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  // Value at a rational point where the denominator does not vanish.
  Rat eval(const Rat& c) const { return num.eval(c) / den.eval(c); }
};

inline bool is_zero(const RatFunc& a) { return a.num.is_zero(); }
inline RatFunc zero_like(const RatFunc&) { return RatFunc(); }
inline RatFunc one_like(const RatFunc&) { return RatFunc(Rat(1)); }
inline RatFunc from_int_like(const RatFunc&, long x) { return RatFunc(Rat(x)); }
inline RatFunc inv(const RatFunc& a) { return RatFunc(Rat(1)) / a; }
inline std::string to_string(const RatFunc& a) {
  if (a.den.deg() == 0) return "(" + to_string(a.num, "c") + ")";
  return "(" + to_string(a.num, "c") + ")/(" + to_string(a.den, "c") + ")";
}

}  // namespace pencil
