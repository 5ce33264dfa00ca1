#pragma once

#include <array>
#include <vector>

#include "wpcy/common.hpp"
#include "wpcy/hypersurface.hpp"
#include "wpcy/singular.hpp"

namespace wpcy {

// Lattice census of the triangle with vertices A(0,1,0), B(0,0,1) and
// C(m,-a,-b), for a point with stabilizer order m acting through (1,a,b).
// Interior points index the exceptional planes over the point; interior
// points of the slanted sides recover the exceptional chains of the curves
// through it, side BC matching the gcd(m,a) direction and side AC the
// gcd(m,b) one.  Points are stored as (x,y,z) slice coordinates; the third
// side carries no lattice points between A and B.
struct LatticeCount {
  i64 m = 0, a = 0, b = 0;
  i64 a1 = 0, b1 = 0;  // gcd(m,a), gcd(m,b)
  i64 e = 0;           // interior points, (m + 1 - a1 - b1)/2
  i64 ac = 0, bc = 0;  // side-interior points: b1 - 1 and a1 - 1
  std::vector<std::array<i64, 3>> interior;
  std::vector<std::array<i64, 3>> on_ac, on_bc;  // vertices excluded
};
LatticeCount triangle_lattice(i64 m, i64 a, i64 b);

// One ruled exceptional divisor chain: n = m - 1 copies of (base curve) x P1
// over a curve locus.
struct RuledEntry {
  std::vector<int> indices;
  i64 n = 0;
  i64 genus = 0;
  Hypersurface curve;  // reduced model of the base curve
};

// The exceptional planes over one point locus: e planes over each of the
// `points` geometric points, all defined over the cyclotomic field indexed
// by field_index (index 1 meaning the rational numbers).
struct PlaneEntry {
  std::vector<int> indices;
  i64 e = 0;
  i64 points = 0;
  i64 field_index = 0;
  bool vertex = false;
};

// Full census of a crepant resolution: the singular loci (with curve genera
// filled in) plus the divisor counts derived from them.  The chain lengths
// bounding each triangle are checked against the curve loci through the
// point, so the two lists are mutually consistent.
struct ResolutionInventory {
  std::vector<SingularLocus> loci;
  std::vector<RuledEntry> ruled;
  std::vector<PlaneEntry> planes;
};
ResolutionInventory resolution_inventory(const Hypersurface& h);

// How many of the `points` members of a point locus are rational over the
// field with Q elements.  The members are the roots of z^k = -1 for
// k = field_index, permuted by the Frobenius.
i64 rational_members(i64 field_index, i64 Q);

// Points the resolution adds over the field with Q elements, one entry per
// inventory row (ruled entries first, then planes).  curve_counts[i] must
// hold the point count of the i-th ruled entry's base curve over that same
// field.  A chain adds Q * n * N(C); a point locus adds e * (Q + Q^2) for
// each of its rational members.
std::vector<i64> new_point_counts(const ResolutionInventory& inv, i64 Q,
                                  const std::vector<i64>& curve_counts);

// Betti and Hodge data of the resolved threefold:
//   b2 = 1 + sum n_i + sum e_j * points_j,   h11 = b2,
//   b3 = ambient_classes + 2 * aux_genus + sum 2 * n_i * genus_i,
//   h21 = b3/2 - 1,   chi = 2 + 2*b2 - b3.
// ambient_classes counts the middle-cohomology classes of the singular
// model itself and aux_genus the genus of the auxiliary curve a
// quasi-diagonal model's middle cohomology picks up.
struct BettiData {
  i64 b2 = 0, b3 = 0, chi = 0, h11 = 0, h21 = 0;
};
BettiData betti_euler(const ResolutionInventory& inv, i64 ambient_classes,
                      i64 aux_genus);

// The same, assembling the ambient class count and auxiliary genus from the
// model; rejects anything but a five-coordinate Calabi-Yau hypersurface.
BettiData betti_euler(const Hypersurface& h);

}  // namespace wpcy
