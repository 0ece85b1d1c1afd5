#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace onebit {

using Rational = mpq_class;
using Integer = mpz_class;

inline int sign_of(const Rational& x) { return sgn(x); }

// GMP rational arithmetic assumes canonical form; the two-argument
// mpq_class constructor does not canonicalize, so value-accepting entry
// points normalize with this.
inline Rational canonical(Rational x) {
  x.canonicalize();
  return x;
}

// Parses "p/q" or a bare integer "p". Throws std::invalid_argument on
// malformed input or a zero denominator.
Rational rational_from_string(const std::string& s);

// Canonical "p/q" form; the denominator is always written.
std::string rational_to_string(const Rational& x);

Integer floor_rational(const Rational& x);
Integer ceil_rational(const Rational& x);
long floor_long(const Rational& x);
long ceil_long(const Rational& x);

// Largest c with c*c <= x, resp. smallest c with c*c >= x. Requires x >= 0.
Integer floor_sqrt(const Rational& x);
Integer ceil_sqrt(const Rational& x);

// base^exp as an exact rational. Throws InstanceTooLarge when numerator or
// denominator of the result would exceed max_bits bits.
Rational pow_checked(const Rational& base, unsigned long exp,
                     std::size_t max_bits = 4096);

}  // namespace onebit
