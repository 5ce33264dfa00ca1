#pragma once

#include <vector>

#include "wpcy/common.hpp"
#include "wpcy/cyclotomic.hpp"

namespace wpcy {

// Dense polynomial over Z, coefficient of t^i at index i, no trailing zeros
// (the zero polynomial is the empty vector).  Coefficients are exact big
// integers: the factors assembled from Jacobi sums reach degrees in the
// hundreds, far past what fixed-width arithmetic could hold.
using IntPoly = std::vector<Int>;

IntPoly poly_const(Int c);
i64 poly_degree(const IntPoly& f);  // -1 for the zero polynomial
IntPoly poly_mul(const IntPoly& f, const IntPoly& g);
IntPoly poly_pow(const IntPoly& f, i64 e);  // e >= 0
Int poly_eval(const IntPoly& f, const Int& x);

// f(c*t): multiplies the t^i coefficient by c^i.
IntPoly poly_scale_arg(const IntPoly& f, const Int& c);

// prod_v (1 - v*t) over cyclotomic integers v, multiplied out exactly.  The
// multiset must be Galois stable so that every coefficient collapses to a
// rational integer; a non-integer coefficient is a ValidationFailure.
IntPoly cyc_linear_product(const std::vector<CycInt>& values);

// Power sums s_nu = sum beta^nu, nu = 1..count, of the reciprocal roots of
// f = prod (1 - beta*t), read off the coefficients by Newton's identity.
// Requires constant term 1.
std::vector<Int> reciprocal_root_power_sums(const IntPoly& f, int count);

// Whether the multiset of reciprocal roots is closed under beta -> q^w/beta,
// i.e. the coefficients satisfy c_j * c_m = q^{w*j} * c_{m-j} for all j
// (which forces c_m^2 = q^{w*m}).  This is the functional equation a factor
// of weight w must obey.
bool weil_self_reciprocal(const IntPoly& f, i64 q, int w);

}  // namespace wpcy
