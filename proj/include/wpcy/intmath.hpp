#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "wpcy/common.hpp"

namespace wpcy {

// a mod m normalized into [0, m).
inline i64 mod_norm(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 pow_mod(i64 base, i64 exp, i64 mod);

// Extended gcd: returns g = gcd(a,b) and writes x,y with a*x + b*y = g.
i64 ext_gcd(i64 a, i64 b, i64& x, i64& y);

// Inverse of a modulo m; requires gcd(a, m) = 1.
i64 inv_mod(i64 a, i64 m);

bool is_prime(i64 n);

// Distinct prime factors, ascending (trial division; intended for n <= ~10^12).
std::vector<i64> prime_factors(i64 n);

// Multiplicative order of a modulo m; requires gcd(a, m) = 1.
i64 mult_order(i64 a, i64 m);

inline i64 gcd_all(const std::vector<i64>& v) {
  i64 g = 0;
  for (i64 x : v) g = std::gcd(g, x);
  return g;
}

inline i64 lcm_all(const std::vector<i64>& v) {
  i64 l = 1;
  for (i64 x : v) l = std::lcm(l, x);
  return l;
}

}  // namespace wpcy
