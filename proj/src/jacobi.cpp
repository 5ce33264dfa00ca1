#include "wpcy/jacobi.hpp"

#include <numeric>

#include "wpcy/intmath.hpp"

namespace wpcy {

// Let S_k(u) be the sum over nonzero (v_1..v_k) with v_1+...+v_k = u of
// prod chi^{a_i}(v_i), and b_k = a_1+...+a_k.  Scaling the tuple gives
// S_k(u) = chi^{b_k}(u) S_k(1) for u != 0, so the whole distribution is the
// pair (S_k(0), S_k(1)).  Splitting off v_{k+1} = w:
//   S_{k+1}(1) = S_k(0) + S_k(1) * sum_{w != 0,1} chi^{b_k}(1-w) chi^{a}(w)
//   S_{k+1}(0) = S_k(1) * chi^{b_k}(-1) * (q-1 if b_k + a = 0 mod M, else 0)
// and the inner sum over w is one pass over the field.
CycInt character_sum(const FiniteField& F, i64 M, const std::vector<i64>& a,
                     uint32_t target) {
  require(M >= 1 && (F.q() - 1) % M == 0, ErrorCode::BadInput,
          "character order must divide the unit group order");
  require(!a.empty(), ErrorCode::BadInput, "empty exponent vector");

  i64 q = F.q();
  i64 b = mod_norm(a[0], M);
  CycInt s0(M), s1 = CycInt::integer(M, 1);
  for (size_t i = 1; i < a.size(); ++i) {
    i64 ai = mod_norm(a[i], M);
    std::vector<Int> t(M, Int(0));
    for (uint32_t w = 2; w < q; ++w) {
      t[mod_norm(b * F.log(F.sub(1, w)) + ai * F.log(w), M)] += 1;
    }
    // w = 1 (the term 1 - w = 0) is excluded from t and contributes S_k(0).
    CycInt pair_sum(M, std::move(t));
    CycInt next1 = s0 + s1 * pair_sum;
    CycInt next0(M);
    if ((b + ai) % M == 0) {
      next0 = s1 * CycInt::root_power(M, b * F.log(F.neg(1))) *
              CycInt::integer(M, q - 1);
    }
    s0 = std::move(next0);
    s1 = std::move(next1);
    b = (b + ai) % M;
  }
  if (target == 0) return s0;
  return s1 * CycInt::root_power(M, b * F.log(target));
}

CycInt jacobi_sum(const FiniteField& F, i64 M, const std::vector<i64>& a) {
  require(a.size() >= 2, ErrorCode::BadInput,
          "exponent vector needs at least two entries");
  std::vector<i64> tail(a.begin() + 1, a.end());
  CycInt s = character_sum(F, M, tail, F.neg(1));
  int n = static_cast<int>(a.size()) - 2;
  return n % 2 == 0 ? s : s * CycInt::integer(M, -1);
}

CycInt jacobi_sum(const Character& chi, const std::vector<i64>& a) {
  return jacobi_sum(*chi.F, chi.M, a);
}

CycInt jacobi_sum_uniform(i64 p, i64 r, i64 M, const std::vector<i64>& a) {
  require(p >= 2 && is_prime(p) && r >= 1 && M >= 1, ErrorCode::BadInput,
          "need a prime p, r >= 1, M >= 1");
  require(mod_norm(pow_mod(p, r, M) + 1, M) == 0, ErrorCode::BadInput,
          "p^r must be -1 mod M");
  require(a.size() >= 2, ErrorCode::BadInput,
          "exponent vector needs at least two entries");
  i64 sum = 0;
  int sign = 1;
  for (i64 ai : a) {
    require(mod_norm(ai, M) != 0, ErrorCode::BadInput,
            "entries must be nonzero mod M");
    sum += ai;
    if (p != 2) {
      i64 mi = M / std::gcd(mod_norm(ai, M), M);
      if (((pow_mod(p, r, 2 * mi) + 1) / mi) % 2 != 0) sign = -sign;
    }
  }
  require(mod_norm(sum, M) == 0, ErrorCode::BadInput,
          "entries must sum to zero mod M");
  int n = static_cast<int>(a.size()) - 2;
  if (n % 2 != 0) sign = -sign;
  Int value = sign;
  for (int i = 0; i < n * static_cast<int>(r); ++i) value *= p;
  return CycInt::integer(M, value);
}

}  // namespace wpcy
