#pragma once

#include <cstdint>
#include <string>

#include "pencil/rational.hpp"

namespace pencil {

bool is_prime_u32(std::uint32_t n);

// Element of the prime field Z/pZ; the modulus travels with the value.
struct Zp {
  std::uint32_t p = 2;
  std::uint32_t v = 0;

  Zp() = default;
  Zp(std::uint32_t mod, std::int64_t x) : p(mod) {
    std::int64_t r = x % static_cast<std::int64_t>(mod);
    if (r < 0) r += mod;
    v = static_cast<std::uint32_t>(r);
  }

  friend Zp operator+(Zp a, Zp b) {
    std::uint64_t s = std::uint64_t(a.v) + b.v;
    if (s >= a.p) s -= a.p;
    return raw(a.p, s);
  }
  friend Zp operator-(Zp a, Zp b) { return raw(a.p, a.v >= b.v ? a.v - b.v : a.v + a.p - b.v); }
  friend Zp operator-(Zp a) { return raw(a.p, a.v == 0 ? 0 : a.p - a.v); }
  friend Zp operator*(Zp a, Zp b) { return raw(a.p, std::uint64_t(a.v) * b.v % a.p); }
  friend Zp operator/(Zp a, Zp b) { return a * b.inverse(); }
  Zp& operator+=(Zp b) { return *this = *this + b; }
  Zp& operator-=(Zp b) { return *this = *this - b; }
  Zp& operator*=(Zp b) { return *this = *this * b; }
  Zp& operator/=(Zp b) { return *this = *this / b; }
  friend bool operator==(Zp a, Zp b) { return a.v == b.v; }
  friend bool operator!=(Zp a, Zp b) { return a.v != b.v; }

  Zp pow(std::uint64_t e) const {
    Zp r = raw(p, 1 % p), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }
  Zp inverse() const {
    if (v == 0) throw PreconditionError("division by zero in prime field");
    return pow(p - 2);
  }

  static Zp raw(std::uint32_t mod, std::uint64_t x) {
    Zp r;
    r.p = mod;
    r.v = static_cast<std::uint32_t>(x);
    return r;
  }
};

inline bool is_zero(const Zp& a) { return a.v == 0; }
inline Zp zero_like(const Zp& a) { return Zp::raw(a.p, 0); }
inline Zp one_like(const Zp& a) { return Zp::raw(a.p, 1); }
inline Zp from_int_like(const Zp& a, long v) { return Zp(a.p, v); }
inline Zp inv(const Zp& a) { return a.inverse(); }
inline std::string to_string(const Zp& a) { return std::to_string(a.v); }

// Reduction of a rational modulo p; the denominator must be a unit mod p.
Zp reduce_mod(const Rat& a, std::uint32_t p);
bool divisible_by(const Rat& denominator_of, std::uint32_t p);

}  // namespace pencil
