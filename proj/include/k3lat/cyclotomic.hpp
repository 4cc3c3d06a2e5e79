#pragma once

#include "k3lat/error.hpp"
#include "k3lat/num.hpp"

#include <vector>

namespace k3lat {

long euler_phi(long m);

// Coefficients of the m-th cyclotomic polynomial, ascending degree, monic.
std::vector<Int> cyclotomic_polynomial(long m);

// Element of Q(zeta_m) in the power basis 1, zeta, ..., zeta^(phi(m)-1),
// i.e. Q[x] modulo Phi_m. All arithmetic is exact.
class Cyclotomic {
 public:
  explicit Cyclotomic(long m);  // zero

  static Cyclotomic from_rat(long m, const Rat& r);
  static Cyclotomic zeta_pow(long m, long k);  // zeta_m^k, exponent mod m

  long order() const { return m_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic inverse() const;  // throws DivisionByZero
  Cyclotomic operator/(const Cyclotomic& o) const { return *this * o.inverse(); }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.m_ == b.m_ && a.c_ == b.c_;
  }

 private:
  long m_;
  std::vector<Rat> c_;

  void check_same(const Cyclotomic& o) const;
};

}  // namespace k3lat
