#pragma once

#include <utility>
#include <vector>

#include "wpcy/common.hpp"
#include "wpcy/ffield.hpp"
#include "wpcy/hypersurface.hpp"

namespace wpcy {

// Data of one composition step: two hypersurfaces, each carrying a
// distinguished coordinate that appears only as the pure power x0^ell
// (resp. y0^ell), are glued into a single hypersurface on the remaining
// coordinates.  The distinguished weights w0, v0 must be coprime; the
// solved exponents (s0, t0, s, t) are the unique solutions of
//   s0*w0 + 1 = s*v0,   t0*v0 + 1 = t*w0
// with 0 <= s0 < v0 and 0 <= t0 < w0.
struct TwistData {
  i64 ell = 0;
  i64 w0 = 0, v0 = 0;
  int index1 = 0, index2 = 0;  // distinguished coordinate of each factor
  i64 s0 = 0, t0 = 0, s = 0, t = 0;
  Weight image_weight;  // first-factor tail times v0, second tail times w0
  i64 image_degree = 0;  // v0 * w0 * ell
  // Image equation as signed monomials in the raw coordinate order above:
  // the first factor's tail with sign +1, the second's with sign -1.
  std::vector<std::pair<int, std::vector<i64>>> equation;
  std::vector<int> image_perm;  // canonical model coordinate -> raw coordinate
};

// Glue V1 and V2 along their distinguished pure-power coordinates of
// exponent ell.  Returns the image hypersurface in canonical (diagonal or
// quasi-diagonal) coordinate order together with the composition data.
std::pair<Hypersurface, TwistData> twist_compose(const Hypersurface& V1,
                                                 const Hypersurface& V2,
                                                 i64 ell);

// Image of a point pair under the composition map, in the raw coordinate
// order of TwistData.  x and y are coordinate vectors over F (the
// distinguished coordinates included); points with x0 = 0 or y0 = 0 map to
// the boundary representatives, and x0 = y0 = 0 is outside the domain.
std::vector<uint32_t> twist_map_eval(const FiniteField& F, const TwistData& T,
                                     const std::vector<uint32_t>& x,
                                     const std::vector<uint32_t>& y);

}  // namespace wpcy
