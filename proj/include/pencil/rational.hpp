#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pencil {

using Int = mpz_class;
using Rat = mpq_class;

// Thrown for violated preconditions of the public operations.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an internal consistency check fails (a bug, not bad input).
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const char* what) {
  if (!cond) throw PreconditionError(what);
}

inline void check(bool cond, const char* what) {
  if (!cond) throw InternalError(what);
}

// Field-element protocol for Rat; the same free functions exist for the
// other coefficient types so polynomial templates can stay generic.
inline bool is_zero(const Rat& a) { return sgn(a) == 0; }
inline Rat zero_like(const Rat&) { return Rat(0); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline Rat from_int_like(const Rat&, long v) { return Rat(v); }
inline Rat inv(const Rat& a) {
  if (is_zero(a)) throw PreconditionError("division by zero");
  return Rat(1) / a;
}

namespace detail {
// Unqualified call so that argument-dependent lookup finds the overload for
// every coefficient type, including those declared after this header.
template <class E>
bool elem_is_zero(const E& e) {
  return is_zero(e);
}
}  // namespace detail

inline Rat make_rat(const Int& n, const Int& d = 1) {
  if (d == 0) throw PreconditionError("zero denominator");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rat& a) { return a.get_str(); }
inline std::string to_string(const Int& a) { return a.get_str(); }

// Parses "n" or "n/d" with optional sign.
Rat parse_rat(const std::string& s);

// Smallest integer >= a.
Int ceil_rat(const Rat& a);
Int floor_rat(const Rat& a);

}  // namespace pencil
