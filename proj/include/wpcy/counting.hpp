#pragma once

#include "wpcy/common.hpp"
#include "wpcy/ffield.hpp"
#include "wpcy/hypersurface.hpp"

namespace wpcy {

// Ceiling on the affine-cone size q^{nu*(n+1)} an exhaustive count may visit.
// Defaults to 10^9; the environment variable WPCY_COUNT_BOUND overrides it.
i64 count_bound();

// Number of points of the hypersurface over the degree-nu extension of F,
// by exhaustive enumeration of the affine cone and the relation
// #cone = 1 + (q^nu - 1) * #projective.  Deformation parameters are bound to
// prime-field values through `params`.  degree 0 stands for the whole
// weighted space.  Counts whose cone exceeds count_bound() are refused with
// BoundExceeded.  The scan may be split across `threads` workers; the result
// does not depend on the split.
i64 count_points(const Hypersurface& h, const FiniteField& F, int nu,
                 const ParamMap& params = {}, int threads = 1);

// Points on the affine hypersurface b_0 + b_1 x_1^{m_1} + ... + b_r x_r^{m_r}
// = 0 with all x_i ranging over F, evaluated through character sums:
//   N = q^{r-1} + sum over the admissible exponent vectors a of
//       chi^{-1}(b_0^{a_0} ... b_r^{a_r}) * (unsigned Jacobi sum of a),
// where chi has exact order M = lcm(m_i) and a_i runs over the nonzero
// multiples of M/m_i with a_0 = -(a_1 + ... + a_r).  Needs q = 1 (mod M).
// The b_i are nonzero field element codes.
i64 count_affine_diagonal(const std::vector<i64>& b, const std::vector<i64>& m,
                          const FiniteField& F);

// Replace each exponent m_i of a diagonal hypersurface by gcd(m_i, q-1): the
// result is a diagonal hypersurface of degree lcm of the new exponents with
// the same number of points over F, but with q = 1 (mod degree) attainable by
// character sums.  Needs the characteristic prime to the degree.
Hypersurface reduce_degree(const Hypersurface& h, const FiniteField& F);

}  // namespace wpcy
