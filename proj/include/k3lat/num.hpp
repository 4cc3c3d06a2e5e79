#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace k3lat {

// Arbitrary-precision integers and rationals. cpp_rational keeps values in
// lowest terms with positive denominator, which is exactly the invariant we
// need; nothing in this project ever touches floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

// Representative of x modulo `modulus` in [0, modulus). modulus > 0.
inline Rat rat_mod(const Rat& x, const Rat& modulus) {
  Rat q = x / modulus;
  Int fl = floor_div(numerator(q), denominator(q));
  return x - Rat(fl) * modulus;
}

inline std::string int_str(const Int& n) { return n.str(); }

inline std::string rat_str(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Int int_pow(Int base, unsigned long exp) {
  Int out = 1;
  while (exp) {
    if (exp & 1) out *= base;
    base *= base;
    exp >>= 1;
  }
  return out;
}

// Trial division; fine for the word-sized primes that occur here.
inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace k3lat
