#include "wpcy/resolve.hpp"

#include <algorithm>
#include <numeric>

#include "wpcy/charset.hpp"
#include "wpcy/intmath.hpp"

namespace wpcy {

namespace {

i64 floor_div(i64 a, i64 b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

}  // namespace

LatticeCount triangle_lattice(i64 m, i64 a, i64 b) {
  require(m >= 2, ErrorCode::BadInput, "stabilizer order must be at least 2");
  require(a >= 1 && a < m && b >= 1 && b < m, ErrorCode::BadInput,
          "action exponents must be nonzero residues");
  require((1 + a + b) % m == 0, ErrorCode::BadInput,
          "action exponents must sum to -1");
  LatticeCount out;
  out.m = m;
  out.a = a;
  out.b = b;
  out.a1 = std::gcd(m, a);
  out.b1 = std::gcd(m, b);
  out.e = (m + 1 - out.a1 - out.b1) / 2;
  out.ac = out.b1 - 1;
  out.bc = out.a1 - 1;
  const i64 step = (1 + a + b) / m;
  for (i64 x = 1; x < m; ++x) {
    i64 s = 1 - step * x;  // y + z on this slice
    i64 ylo = floor_div(-a * x + m - 1, m);   // alpha >= 0
    i64 yhi = s + floor_div(b * x, m);        // beta >= 0
    for (i64 y = ylo; y <= yhi; ++y) {
      i64 z = s - y;
      i64 alpha = m * y + a * x;
      i64 beta = m * z + b * x;
      if (alpha > 0 && beta > 0) {
        out.interior.push_back({x, y, z});
      } else if (alpha == 0) {
        out.on_bc.push_back({x, y, z});
      } else {
        out.on_ac.push_back({x, y, z});
      }
    }
  }
  require(static_cast<i64>(out.interior.size()) == out.e,
          ErrorCode::Undefined, "interior point count off the closed form");
  require(static_cast<i64>(out.on_ac.size()) == out.ac &&
              static_cast<i64>(out.on_bc.size()) == out.bc,
          ErrorCode::Undefined, "side point count off the closed form");
  return out;
}

i64 rational_members(i64 field_index, i64 Q) {
  require(field_index >= 1 && Q >= 2, ErrorCode::BadInput,
          "member count needs a positive index and a field size");
  if (Q % 2 == 0) return std::gcd(field_index, Q - 1);
  return std::gcd(2 * field_index, Q - 1) - std::gcd(field_index, Q - 1);
}

ResolutionInventory resolution_inventory(const Hypersurface& h) {
  require(h.weight.size() == 5, ErrorCode::BadInput,
          "resolution census needs a threefold");
  require(cy_condition(h), ErrorCode::ValidationFailure,
          "resolution census needs weights summing to the degree");
  ResolutionInventory inv;
  inv.loci = singular_loci(h);
  std::vector<int> curve_pos;  // census position of each ruled entry
  for (int i = 0; i < static_cast<int>(inv.loci.size()); ++i) {
    auto& L = inv.loci[i];
    if (L.dim != 1) continue;
    CurveData cd = locus_curve_data(L, h);
    L.genus = cd.genus;
    inv.ruled.push_back({L.indices, L.m - 1, L.genus, cd.model});
    curve_pos.push_back(i);
  }
  for (const auto& L : inv.loci) {
    if (L.dim != 0) continue;
    int lead = -1;
    for (int t = 0; t < 3 && lead < 0; ++t) {
      if (L.action[t] == 1) lead = t;
    }
    require(lead >= 0, ErrorCode::Undefined, "point action has no unit exponent");
    LatticeCount tri = triangle_lattice(L.m, L.action[(lead + 1) % 3],
                                        L.action[(lead + 2) % 3]);
    // Each slanted side with lattice points on it is the chain of a curve
    // locus through the point, in the matching coordinate direction; check
    // the census agrees.
    std::vector<int> through;
    for (int s = 1; s <= 2; ++s) {
      int slot = (lead + s) % 3;
      i64 g = std::gcd(L.m, L.action[slot]);
      if (g < 2) continue;
      std::vector<int> want = L.indices;
      if (L.vertex) want.push_back(1);
      want.push_back(L.transverse[slot]);
      std::sort(want.begin(), want.end());
      int found = -1;
      for (int c = 0; c < static_cast<int>(inv.ruled.size()); ++c) {
        if (inv.ruled[c].indices == want) found = c;
      }
      require(found >= 0 && inv.loci[curve_pos[found]].m == g,
              ErrorCode::Undefined, "triangle side without its chain curve");
      through.push_back(curve_pos[found]);
    }
    std::sort(through.begin(), through.end());
    require(through == L.contained_in, ErrorCode::Undefined,
            "curves through a point do not match its triangle sides");
    inv.planes.push_back({L.indices, tri.e, L.points, L.points, L.vertex});
  }
  return inv;
}

std::vector<i64> new_point_counts(const ResolutionInventory& inv, i64 Q,
                                  const std::vector<i64>& curve_counts) {
  require(Q >= 2, ErrorCode::BadInput, "field size must be at least 2");
  require(curve_counts.size() == inv.ruled.size(), ErrorCode::BadInput,
          "need one base-curve count per ruled entry");
  std::vector<i64> out;
  for (size_t i = 0; i < inv.ruled.size(); ++i) {
    out.push_back(Q * inv.ruled[i].n * curve_counts[i]);
  }
  for (const auto& p : inv.planes) {
    out.push_back(p.e * (Q + Q * Q) * rational_members(p.field_index, Q));
  }
  return out;
}

BettiData betti_euler(const ResolutionInventory& inv, i64 ambient_classes,
                      i64 aux_genus) {
  BettiData out;
  out.b2 = 1;
  out.b3 = ambient_classes + 2 * aux_genus;
  for (const auto& r : inv.ruled) {
    out.b2 += r.n;
    out.b3 += 2 * r.n * r.genus;
  }
  for (const auto& p : inv.planes) out.b2 += p.e * p.points;
  require(out.b3 >= 2 && out.b3 % 2 == 0, ErrorCode::Undefined,
          "middle cohomology of unexpected size");
  out.chi = 2 + 2 * out.b2 - out.b3;
  out.h11 = out.b2;
  out.h21 = out.b3 / 2 - 1;
  return out;
}

BettiData betti_euler(const Hypersurface& h) {
  require(h.weight.size() == 5, ErrorCode::BadInput,
          "Betti data needs a threefold");
  i64 ambient = 0, aux = 0;
  if (h.kind == HKind::QuasiDiagonal) {
    ambient = static_cast<i64>(qd_character_set(h).vectors.size());
    Weight tail{{h.weight.entries[2], h.weight.entries[3], h.weight.entries[4]}};
    aux = curve_genus(make_diagonal(tail, h.degree));
  } else {
    ambient = static_cast<i64>(character_set(h.degree, h.weight).size());
  }
  return betti_euler(resolution_inventory(h), ambient, aux);
}

}  // namespace wpcy
