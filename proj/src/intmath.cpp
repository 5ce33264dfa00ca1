#include "wpcy/intmath.hpp"

namespace wpcy {

i64 pow_mod(i64 base, i64 exp, i64 mod) {
  require(mod > 0 && exp >= 0, ErrorCode::BadInput, "pow_mod: bad arguments");
  unsigned __int128 acc = 1, b = static_cast<unsigned __int128>(mod_norm(base, mod));
  while (exp > 0) {
    if (exp & 1) acc = acc * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<i64>(acc);
}

i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return a >= 0 ? a : -a;
  }
  i64 x1, y1;
  i64 g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

i64 inv_mod(i64 a, i64 m) {
  i64 x, y;
  i64 g = ext_gcd(mod_norm(a, m), m, x, y);
  require(g == 1, ErrorCode::BadInput, "inv_mod: arguments not coprime");
  return mod_norm(x, m);
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  // Deterministic Miller-Rabin for 64-bit inputs with the witness set above.
  i64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    i64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = static_cast<i64>(static_cast<unsigned __int128>(x) * x % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<i64> prime_factors(i64 n) {
  require(n >= 1, ErrorCode::BadInput, "prime_factors: n must be positive");
  std::vector<i64> out;
  for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

i64 mult_order(i64 a, i64 m) {
  require(m > 1 && std::gcd(mod_norm(a, m), m) == 1, ErrorCode::BadInput,
          "mult_order: need gcd(a,m)=1");
  // Order divides the order of the whole group; walk divisors of a multiple.
  i64 x = mod_norm(a, m), acc = x, ord = 1;
  while (acc != 1) {
    acc = static_cast<i64>(static_cast<unsigned __int128>(acc) * x % m);
    ++ord;
  }
  return ord;
}

}  // namespace wpcy
