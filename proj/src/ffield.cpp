#include "wpcy/ffield.hpp"

#include <numeric>

#include "wpcy/intmath.hpp"

namespace wpcy {

namespace {

constexpr i64 kMaxFieldSize = 1000000;  // table-based fields only

// Setup-time polynomial helpers.  Residues are coefficient vectors of length
// k, constant term first; the modulus is monic of degree k.
std::vector<i64> poly_mul_mod(const std::vector<i64>& a, const std::vector<i64>& b,
                              const std::vector<i64>& mod, i64 p, int k) {
  std::vector<i64> prod(2 * k - 1, 0);
  for (int i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  for (int d = 2 * k - 2; d >= k; --d) {
    i64 c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (int i = 0; i < k; ++i) prod[d - k + i] = mod_norm(prod[d - k + i] - c * mod[i], p);
  }
  prod.resize(k);
  return prod;
}

// Does the monic polynomial g (degree dg, constant first, g[dg] = 1) divide
// the monic f (degree df)?
bool monic_divides(const std::vector<i64>& g, int dg, std::vector<i64> f, int df, i64 p) {
  for (int d = df; d >= dg; --d) {
    i64 c = f[d];
    if (c == 0) continue;
    for (int i = 0; i <= dg; ++i) f[d - dg + i] = mod_norm(f[d - dg + i] - c * g[i], p);
  }
  for (int i = 0; i < dg; ++i) {
    if (f[i] != 0) return false;
  }
  return true;
}

bool is_irreducible(const std::vector<i64>& f, int k, i64 p) {
  // Trial division by every monic polynomial of degree up to k/2; the field
  // sizes in play keep this cheap, and it needs no field arithmetic of its
  // own.
  for (int d = 1; 2 * d <= k; ++d) {
    i64 count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    std::vector<i64> g(d + 1);
    g[d] = 1;
    for (i64 c = 0; c < count; ++c) {
      i64 t = c;
      for (int i = 0; i < d; ++i) g[i] = t % p, t /= p;
      if (monic_divides(g, d, f, k, p)) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(i64 p, int k) : p_(p), k_(k) {
  require(k >= 1, ErrorCode::BadInput, "field degree must be positive");
  require(is_prime(p), ErrorCode::BadInput, "field characteristic must be prime");
  q_ = 1;
  for (int i = 0; i < k; ++i) {
    q_ *= p;
    require(q_ <= kMaxFieldSize, ErrorCode::BoundExceeded,
            "field size exceeds the table bound 10^6");
  }

  // Deterministic modulus: smallest coefficient code whose monic lift is
  // irreducible.
  modulus_.assign(k + 1, 0);
  modulus_[k] = 1;
  for (i64 c = 0;; ++c) {
    i64 t = c;
    for (int i = 0; i < k; ++i) modulus_[i] = t % p, t /= p;
    if (is_irreducible(modulus_, k, p)) break;
  }
  std::vector<i64> mod_lo(modulus_.begin(), modulus_.begin() + k);

  auto decode = [&](i64 c) {
    std::vector<i64> e(k);
    for (int i = 0; i < k; ++i) e[i] = c % p, c /= p;
    return e;
  };
  auto encode = [&](const std::vector<i64>& e) {
    i64 c = 0;
    for (int i = k - 1; i >= 0; --i) c = c * p + e[i];
    return c;
  };
  auto pmul = [&](const std::vector<i64>& a, const std::vector<i64>& b) {
    return poly_mul_mod(a, b, mod_lo, p, k);
  };

  // Smallest primitive element by code, certified through the prime
  // factorization of q-1.
  auto factors = prime_factors(q_ - 1);
  auto order_divisor_check = [&](const std::vector<i64>& g) {
    for (i64 r : factors) {
      i64 e = (q_ - 1) / r;
      std::vector<i64> acc(k, 0), base = g;
      acc[0] = 1;
      while (e > 0) {
        if (e & 1) acc = pmul(acc, base);
        base = pmul(base, base);
        e >>= 1;
      }
      if (encode(acc) == 1) return false;
    }
    return true;
  };
  for (i64 c = 1; c < q_; ++c) {
    if (order_divisor_check(decode(c))) {
      gen_ = static_cast<uint32_t>(c);
      break;
    }
  }

  exp_.assign(2 * (q_ - 1), 0);
  log_.assign(q_, -1);
  std::vector<i64> acc(k, 0), g = decode(gen_);
  acc[0] = 1;
  for (i64 i = 0; i < q_ - 1; ++i) {
    i64 c = encode(acc);
    exp_[i] = exp_[i + q_ - 1] = static_cast<uint32_t>(c);
    log_[c] = i;
    acc = pmul(acc, g);
  }
}

uint32_t FiniteField::add(uint32_t a, uint32_t b) const {
  if (k_ == 1) return static_cast<uint32_t>((a + static_cast<i64>(b)) % p_);
  i64 out = 0, mult = 1;
  for (int i = 0; i < k_; ++i) {
    out += mult * ((a % p_ + b % p_) % p_);
    a /= p_, b /= p_, mult *= p_;
  }
  return static_cast<uint32_t>(out);
}

uint32_t FiniteField::neg(uint32_t a) const {
  if (k_ == 1) return static_cast<uint32_t>((p_ - a) % p_);
  i64 out = 0, mult = 1;
  for (int i = 0; i < k_; ++i) {
    out += mult * ((p_ - a % p_) % p_);
    a /= p_, mult *= p_;
  }
  return static_cast<uint32_t>(out);
}

uint32_t FiniteField::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t FiniteField::mul(uint32_t a, uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

uint32_t FiniteField::inv(uint32_t a) const {
  require(a != 0, ErrorCode::BadInput, "inverse of zero");
  return exp_[q_ - 1 - log_[a]];
}

uint32_t FiniteField::pow(uint32_t a, i64 e) const {
  if (a == 0) {
    require(e >= 0, ErrorCode::BadInput, "negative power of zero");
    return e == 0 ? 1 : 0;
  }
  i64 r = mod_norm(log_[a] % (q_ - 1) * mod_norm(e, q_ - 1), q_ - 1);
  return exp_[r];
}

i64 FiniteField::log(uint32_t a) const {
  require(a != 0, ErrorCode::BadInput, "log of zero");
  return log_[a];
}

uint32_t FiniteField::exp(i64 e) const { return exp_[mod_norm(e, q_ - 1)]; }

i64 FiniteField::nth_power_solutions(i64 n, uint32_t a) const {
  require(n >= 1, ErrorCode::BadInput, "power map exponent must be positive");
  if (a == 0) return 1;
  i64 g = std::gcd(n % (q_ - 1) == 0 ? q_ - 1 : n % (q_ - 1), q_ - 1);
  return log_[a] % g == 0 ? g : 0;
}

Character character_of_order(const FiniteField& F, i64 M) {
  require(M >= 1 && (F.q() - 1) % M == 0, ErrorCode::BadInput,
          "character order must divide the unit group order");
  return Character{&F, M};
}

}  // namespace wpcy
