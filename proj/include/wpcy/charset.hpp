#pragma once

#include <utility>
#include <vector>

#include "wpcy/common.hpp"
#include "wpcy/hypersurface.hpp"

namespace wpcy {

using CharVector = std::vector<i64>;

// All vectors a = (a_0, ..., a_n) with each a_i a nonzero multiple of w_i
// mod d and sum(a) = 0 mod d, in lexicographic order.  These index the
// middle-cohomology eigenspaces of a diagonal hypersurface of degree d in
// the weighted space with weights w, so e.g. a plane curve has genus
// half the cardinality.
std::vector<CharVector> character_set(i64 d, const Weight& w);

// Analogue for a quasi-diagonal model z0^{m0} z1 + z1^{m1} + ... + zn^{mn}.
// The modulus is M = lcm of the m_i with slot 1 excluded; entry i != 1 runs
// over nonzero multiples of step[i] = M/m_i, entry 1 is any nonzero residue,
// the entries sum to zero, and the chain relation a_0 + m_1 a_1 = 0 (mod M)
// holds.  Surfaces additionally carry the data of the lines cut out by the
// vanishing of z_1: the residues `lines` (a with 0 < a < m_3 and
// w_3 a = 0 mod w_2) contribute extra degree-2 classes, and `line_count`
// is the number d / lcm(w_2, w_3) of such lines on the surface itself.
struct QdCharacterData {
  i64 modulus = 0;                  // M
  std::vector<i64> step;            // step[i] = M/m_i (slot 1 stored as 1)
  std::vector<CharVector> vectors;  // the constrained set, lex order
  std::vector<i64> lines;           // surface case only, else empty
  i64 line_count = 0;               // surface case only, else 0
};
QdCharacterData qd_character_set(const Hypersurface& h);

// Genus of a smooth curve in a weighted plane, read off from the size of
// its character set.
i64 curve_genus(const Hypersurface& h);

// One element of a finite group acting coordinate-wise on a product
// (surface) x (curve) by roots of unity: coordinate i of the surface is
// scaled by zeta_d^{surface_exponents[i]} and coordinate j of the curve by
// zeta_e^{curve_exponents[j]}, where d and e are the two degrees.
struct QuotientGenerator {
  std::vector<i64> surface_exponents;
  std::vector<i64> curve_exponents;
};

// Character data of the quotient of the product by the group the generators
// generate.  A surface vector survives when every generator scales its
// eigenspace trivially, likewise for curve vectors; `pairs` collects the
// (a, b) whose product eigenspace is scaled trivially even though the two
// factors separately need not be.  The dimensions of the first three
// cohomology groups of the quotient are |curve_invariant|,
// 2 + |surface_invariant| and |curve_invariant| + |pairs|.
struct QuotientCharacterData {
  std::vector<CharVector> surface_invariant;
  std::vector<CharVector> curve_invariant;
  std::vector<std::pair<CharVector, CharVector>> pairs;
  i64 h1 = 0;
  i64 h2 = 0;
  i64 h3 = 0;
};
QuotientCharacterData quotient_character_sets(
    const std::vector<CharVector>& surface_set, i64 surface_degree,
    const std::vector<CharVector>& curve_set, i64 curve_degree,
    const std::vector<QuotientGenerator>& generators);

}  // namespace wpcy
