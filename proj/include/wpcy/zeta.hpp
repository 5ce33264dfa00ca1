#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wpcy/charset.hpp"
#include "wpcy/common.hpp"
#include "wpcy/counting.hpp"
#include "wpcy/ffield.hpp"
#include "wpcy/hypersurface.hpp"
#include "wpcy/polyint.hpp"
#include "wpcy/resolve.hpp"
#include "wpcy/tables.hpp"

namespace wpcy {

// One block of the factored zeta-function.  `weight` is the cohomological
// degree the block belongs to, so the block sits in the numerator when the
// weight is odd and in the denominator when it is even.  A block holding
// Jacobi-sum factors is the multiplied-out product over one orbit of the
// units acting on its character vectors, recorded in `tags`; that grouping
// is what keeps every block an integer polynomial.
struct ZetaFactor {
  int weight = 0;
  IntPoly poly;
  std::vector<CharVector> tags;  // character vectors behind the block, if any
  std::string role;  // "ambient", "jacobi", "line", "curve", "exceptional", ...
};

// Factored rational shape of a zeta-function over F_q:
//   Z(t) = prod over factors of poly^{(-1)^{weight+1}}.
// `modulus` is the order of the character the tags refer to, and `motive`
// (surfaces only) lists the orbit of character vectors attached to the
// holomorphic 2-form, the input to the algebraic/transcendental split.
struct ZetaFunction {
  i64 q = 0;
  int dim = 0;
  i64 modulus = 0;
  std::vector<CharVector> motive;
  std::vector<ZetaFactor> factors;
};

// The degree-i piece P_i(t): product of the blocks of weight i.
IntPoly zeta_p(const ZetaFunction& z, int weight);

// N_1..N_count read back from the factored shape via Newton power sums:
// N_nu = sum over weights i of (-1)^i (power sums of P_i's reciprocal roots).
std::vector<Int> zeta_point_counts(const ZetaFunction& z, int count);

// True when the first counts.size() coefficients of t d/dt log Z equal the
// given point counts.
bool verify_zeta(const ZetaFunction& z, const std::vector<i64>& counts);

// Structural checks every assembled zeta-function must pass: constant terms
// 1, weights within [0, 2 dim], and each block's reciprocal roots closed
// under beta -> q^weight / beta.  Throws ValidationFailure on violation.
void validate_zeta(const ZetaFunction& z);

// Zeta-function of a quasi-smooth diagonal hypersurface of dimension 1, 2
// or 3 over F, with the middle cohomology factored into unit-orbit blocks
// of Jacobi sums.  Needs q = 1 modulo the lcm of the exponents.
ZetaFunction zeta_diagonal(const Hypersurface& h, const FiniteField& F);

// Zeta-function over the prime field for the three elliptic fiber curves,
// covering all congruence classes: good ordinary primes via Jacobi sums,
// good supersingular primes (p = -1 mod the degree) with P_1 = 1 + p t^2,
// and primes dividing the degree with P_1 = 1.
ZetaFunction zeta_elliptic_over_Q(const EllipticCurve& e, i64 p);

// Zeta-function of a quasi-diagonal hypersurface of dimension 1, 2 or 3.
// Needs q = 1 (mod M) for the modulus M of its character data.  A surface
// picks up one line block per residue in the character data's line set, a
// threefold the qt-rescaled P_1 of its auxiliary diagonal curve.
ZetaFunction zeta_quasidiagonal(const Hypersurface& h, const FiniteField& F);

// Zeta-function of the crepant resolution described by the inventory: each
// chain of ruled surfaces adds (1-qt)^n to P_2 and P_1(C, qt)^n to P_3, each
// point locus adds P_0(P, qt)^e with P_0 the Frobenius orbit polynomial of
// the locus points, and P_4 becomes P_2(qt).
ZetaFunction zeta_resolution(const ZetaFunction& z, const ResolutionInventory& inv,
                             const FiniteField& F);

// Minimal resolution of a K3 surface: every singular point of order m is
// replaced by a chain of m-1 rational curves, multiplying P_0(P, qt)^{m-1}
// into P_2 per point locus; the resolved P_2 must reach degree 22.
ZetaFunction zeta_resolution(const ZetaFunction& z, const Hypersurface& h,
                             const FiniteField& F);

// Splits the P_2 of a K3 surface into (algebraic part, transcendental part).
// Over a characteristic-p field with p^r = -1 modulo the character modulus
// for some r the surface is supersingular and the transcendental part is 1;
// otherwise it is the block whose tags form the stored motive orbit.
std::pair<IntPoly, IntPoly> transcendental_split(const ZetaFunction& z, i64 p);

// Frobenius orbit polynomial of the solutions of x^k = -1: the product of
// (1 - t^len) over the orbits of x -> x^q, for a field of size Q in odd
// characteristic p (characteristic 2 reads the roots as x^k = 1).
IntPoly point_orbit_polynomial(i64 k, i64 Q, i64 p);

}  // namespace wpcy
