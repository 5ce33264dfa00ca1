#pragma once

#include <vector>

#include "wpcy/common.hpp"

namespace wpcy {

// Element of Z[zeta_M] held as an integer vector in the cyclic basis
// 1, zeta, ..., zeta^{M-1}.  The representation is not kept reduced;
// equality and integrality are decided modulo the M-th cyclotomic
// polynomial, which avoids choosing a basis for the ring of integers.
class CycInt {
 public:
  explicit CycInt(i64 M) : M_(M), c_(M, Int(0)) {}
  CycInt(i64 M, std::vector<Int> coeffs);
  static CycInt root_power(i64 M, i64 e);  // zeta_M^e
  static CycInt integer(i64 M, Int n);

  i64 order() const { return M_; }
  const std::vector<Int>& coeffs() const { return c_; }

  CycInt operator+(const CycInt& o) const;
  CycInt operator-(const CycInt& o) const;
  CycInt operator*(const CycInt& o) const;
  CycInt& operator+=(const CycInt& o) { return *this = *this + o; }
  CycInt& operator-=(const CycInt& o) { return *this = *this - o; }
  CycInt& operator*=(const CycInt& o) { return *this = *this * o; }
  CycInt pow(i64 e) const;  // e >= 0

  CycInt conj() const;        // zeta -> zeta^{-1}
  CycInt galois(i64 t) const;  // zeta -> zeta^t, gcd(t, M) = 1

  bool operator==(const CycInt& o) const;
  bool operator!=(const CycInt& o) const { return !(*this == o); }

  // Coefficients of the canonical representative of degree below
  // phi(M), obtained by reduction mod the M-th cyclotomic polynomial.
  std::vector<Int> reduced() const;
  bool is_integer() const;
  Int as_integer() const;  // requires is_integer()

 private:
  i64 M_;
  std::vector<Int> c_;
};

// Monic M-th cyclotomic polynomial, constant term first.
std::vector<Int> cyclotomic_polynomial(i64 M);

}  // namespace wpcy
