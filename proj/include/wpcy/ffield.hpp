#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "wpcy/common.hpp"
#include "wpcy/intmath.hpp"

namespace wpcy {

// F_{p^k} with full exp/log tables, so multiplicative arithmetic is table
// lookups.  Elements are codes 0..q-1: the base-p digits of a code are the
// coefficients of the residue polynomial, constant term first.  The modulus is
// the monic irreducible x^k + c_{k-1} x^{k-1} + ... + c_0 whose coefficient
// code sum c_i p^i is smallest; the generator is the smallest primitive
// element by code.  Both choices are deterministic, so tables and every
// downstream fixture are reproducible.
class FiniteField {
 public:
  FiniteField(i64 p, int k);

  i64 p() const { return p_; }
  int k() const { return k_; }
  i64 q() const { return q_; }
  const std::vector<i64>& modulus() const { return modulus_; }  // constant first, monic

  uint32_t zero() const { return 0; }
  uint32_t one() const { return 1; }
  bool is_zero(uint32_t a) const { return a == 0; }
  uint32_t from_int(i64 n) const { return static_cast<uint32_t>(mod_norm(n, p_)); }

  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;
  uint32_t pow(uint32_t a, i64 e) const;  // a != 0 for e < 0
  uint32_t frobenius(uint32_t a) const { return pow(a, p_); }

  uint32_t generator() const { return gen_; }
  // Discrete log base generator; a != 0.
  i64 log(uint32_t a) const;
  uint32_t exp(i64 e) const;  // generator^e, any integer e

  // Number of solutions x of x^n = a (0 if a is not an n-th power).
  i64 nth_power_solutions(i64 n, uint32_t a) const;

 private:
  i64 p_, q_;
  int k_;
  std::vector<i64> modulus_;
  uint32_t gen_ = 0;
  std::vector<uint32_t> exp_;  // size 2(q-1): exp_[i] = g^i, doubled to skip a mod
  std::vector<i64> log_;       // size q, log_[0] = -1
};

// Multiplicative character of exact order M on F^*, with chi(generator) = a
// fixed primitive M-th root of unity.  Values are reported through the
// exponent: chi(v) = zeta_M^{exponent(v)}.
struct Character {
  const FiniteField* F;
  i64 M;

  i64 exponent(uint32_t v) const { return F->log(v) % M; }
};

Character character_of_order(const FiniteField& F, i64 M);

}  // namespace wpcy
