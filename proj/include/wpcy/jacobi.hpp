#pragma once

#include <vector>

#include "wpcy/cyclotomic.hpp"
#include "wpcy/ffield.hpp"

namespace wpcy {

// Sum over tuples (v_1, ..., v_r) of nonzero field elements with
// v_1 + ... + v_r = target of prod_i chi^{a_i}(v_i), where chi is the
// order-M character with chi(generator) = zeta_M.  Variables are split off
// one at a time, so each extra entry costs a single O(q) scan instead of a
// factor of q in the tuple enumeration.
CycInt character_sum(const FiniteField& F, i64 M, const std::vector<i64>& a,
                     uint32_t target);

// Normalized sum attached to a full exponent vector (a_0, ..., a_{n+1}):
// the leading entry is dropped, the tuple constraint is
// 1 + v_1 + ... + v_{n+1} = 0, and the result carries the sign (-1)^n.
// When the entries sum to zero mod M the value is symmetric under
// permutations of the whole vector, so which entry is dropped is immaterial.
CycInt jacobi_sum(const FiniteField& F, i64 M, const std::vector<i64>& a);

// Same sum expressed through an explicit character instead of a bare order.
CycInt jacobi_sum(const Character& chi, const std::vector<i64>& a);

// Closed form over F_{p^{2r}} when p^r = -1 (mod M): every sum with nonzero
// entries adding to zero is the rational integer
//   (-1)^n p^{rn} prod_i eps_i,  eps_i = 1 for p = 2, else (-1)^{(p^r+1)/m_i}
// with m_i the exact order M/gcd(a_i, M).  No field tables are needed, so
// this stays cheap when p^{2r} is far beyond enumeration range.
CycInt jacobi_sum_uniform(i64 p, i64 r, i64 M, const std::vector<i64>& a);

}  // namespace wpcy
