#include "wpcy/zeta.hpp"

#include <algorithm>
#include <set>

#include "wpcy/cyclotomic.hpp"
#include "wpcy/intmath.hpp"
#include "wpcy/jacobi.hpp"
#include "wpcy/singular.hpp"

namespace wpcy {

namespace {

IntPoly linear_factor(const Int& value) {  // 1 - value * t
  if (value == 0) return poly_const(1);
  return IntPoly{Int(1), -value};
}

ZetaFactor ambient_factor(i64 q, int weight) {
  Int qe = 1;
  for (int i = 0; i < weight / 2; ++i) qe *= q;
  return {weight, linear_factor(qe), {}, "ambient"};
}

// (Z/M)^x-orbits of a set of character vectors, each orbit sorted, orbits
// ordered by their first member.  The set must be closed under the action.
std::vector<std::vector<CharVector>> unit_orbits(const std::vector<CharVector>& vecs,
                                                 i64 M) {
  std::set<CharVector> pool(vecs.begin(), vecs.end());
  std::vector<std::vector<CharVector>> orbits;
  while (!pool.empty()) {
    CharVector seed = *pool.begin();
    std::set<CharVector> orbit;
    for (i64 u = 1; u < std::max<i64>(M, 2); ++u) {
      if (std::gcd(u, M) != 1) continue;
      CharVector img(seed.size());
      for (size_t i = 0; i < seed.size(); ++i) img[i] = mod_norm(seed[i] * u, M);
      require(pool.count(img) || orbit.count(img), ErrorCode::ValidationFailure,
              "character set is not stable under the unit action");
      orbit.insert(img);
    }
    orbits.emplace_back(orbit.begin(), orbit.end());
    for (const CharVector& v : orbits.back()) pool.erase(v);
  }
  return orbits;
}

// One integer block per unit orbit of the given character vectors.
std::vector<ZetaFactor> jacobi_blocks(const std::vector<CharVector>& vecs, i64 M,
                                      const FiniteField& F, int weight,
                                      const std::string& role) {
  std::vector<ZetaFactor> out;
  for (const auto& orbit : unit_orbits(vecs, M)) {
    std::vector<CycInt> values;
    values.reserve(orbit.size());
    for (const CharVector& a : orbit) values.push_back(jacobi_sum(F, M, a));
    out.push_back({weight, cyc_linear_product(values), orbit, role});
  }
  return out;
}

ZetaFunction zeta_curve(const Hypersurface& h, const FiniteField& F);

}  // namespace

IntPoly zeta_p(const ZetaFunction& z, int weight) {
  IntPoly p = poly_const(1);
  for (const ZetaFactor& f : z.factors)
    if (f.weight == weight) p = poly_mul(p, f.poly);
  return p;
}

std::vector<Int> zeta_point_counts(const ZetaFunction& z, int count) {
  std::vector<Int> n(count, Int(0));
  for (const ZetaFactor& f : z.factors) {
    auto s = reciprocal_root_power_sums(f.poly, count);
    for (int nu = 0; nu < count; ++nu)
      if (f.weight % 2 == 0)
        n[nu] += s[nu];
      else
        n[nu] -= s[nu];
  }
  return n;
}

bool verify_zeta(const ZetaFunction& z, const std::vector<i64>& counts) {
  auto n = zeta_point_counts(z, static_cast<int>(counts.size()));
  for (size_t i = 0; i < counts.size(); ++i)
    if (n[i] != counts[i]) return false;
  return true;
}

void validate_zeta(const ZetaFunction& z) {
  require(z.q >= 2 && z.dim >= 1, ErrorCode::ValidationFailure, "empty zeta shape");
  for (const ZetaFactor& f : z.factors) {
    require(!f.poly.empty() && f.poly[0] == 1, ErrorCode::ValidationFailure,
            "zeta block without constant term 1");
    require(f.weight >= 0 && f.weight <= 2 * z.dim, ErrorCode::ValidationFailure,
            "zeta block outside the cohomological range");
    require(weil_self_reciprocal(f.poly, z.q, f.weight), ErrorCode::ValidationFailure,
            "zeta block violates the functional equation of its weight");
  }
}

ZetaFunction zeta_diagonal(const Hypersurface& h, const FiniteField& F) {
  require(h.kind == HKind::Diagonal, ErrorCode::BadInput,
          "expected a diagonal hypersurface");
  const int dim = h.weight.size() - 2;
  require(dim >= 1 && dim <= 3, ErrorCode::Unsupported,
          "zeta assembly covers dimensions 1 to 3");
  require(is_quasi_smooth(h, F.p()), ErrorCode::Undefined,
          "hypersurface is not quasi-smooth in this characteristic");
  const i64 M = lcm_all(h.exponents);
  require((F.q() - 1) % M == 0, ErrorCode::Undefined,
          "Jacobi sums need q = 1 modulo the lcm of the exponents; "
          "reduce the exponents or extend the field");
  const i64 g = h.degree / M;

  std::vector<CharVector> vecs;
  for (CharVector a : character_set(h.degree, h.weight)) {
    for (i64& ai : a) ai /= g;
    vecs.push_back(std::move(a));
  }

  ZetaFunction z;
  z.q = F.q();
  z.dim = dim;
  z.modulus = M;
  z.factors.push_back(ambient_factor(z.q, 0));
  if (dim >= 2) z.factors.push_back(ambient_factor(z.q, 2));
  for (auto& f : jacobi_blocks(vecs, M, F, dim, "jacobi"))
    z.factors.push_back(std::move(f));
  if (dim == 1) z.factors.push_back(ambient_factor(z.q, 2));
  if (dim >= 2) z.factors.push_back(ambient_factor(z.q, 4));
  if (dim == 3) z.factors.push_back(ambient_factor(z.q, 6));

  if (dim == 2) {
    CharVector base(h.weight.entries.begin(), h.weight.entries.end());
    for (i64& x : base) x = mod_norm(x / g, M);
    for (const auto& orbit : unit_orbits(vecs, M))
      if (std::find(orbit.begin(), orbit.end(), base) != orbit.end()) z.motive = orbit;
    require(!z.motive.empty(), ErrorCode::ValidationFailure,
            "weight vector missing from the surface character set");
  }
  validate_zeta(z);
  return z;
}

ZetaFunction zeta_elliptic_over_Q(const EllipticCurve& e, i64 p) {
  require(p >= 2 && is_prime(p), ErrorCode::BadInput, "p must be prime");
  const i64 d = e.model.degree;
  ZetaFunction z;
  z.q = p;
  z.dim = 1;
  if (d % p == 0) {  // additive reduction: the curve degenerates, P_1 = 1
    z.factors.push_back(ambient_factor(p, 0));
    z.factors.push_back(ambient_factor(p, 2));
    validate_zeta(z);
    return z;
  }
  if ((p - 1) % d == 0) return zeta_diagonal(e.model, FiniteField(p, 1));
  // remaining classes are p = -1 (mod d): supersingular, trace zero
  require(mod_norm(p + 1, d) == 0, ErrorCode::ValidationFailure,
          "unexpected congruence class for the fiber degree");
  z.factors.push_back(ambient_factor(p, 0));
  z.factors.push_back({1, IntPoly{Int(1), Int(0), Int(p)}, {}, "supersingular"});
  z.factors.push_back(ambient_factor(p, 2));
  validate_zeta(z);
  return z;
}

ZetaFunction zeta_quasidiagonal(const Hypersurface& h, const FiniteField& F) {
  require(h.kind == HKind::QuasiDiagonal, ErrorCode::BadInput,
          "expected a quasi-diagonal hypersurface");
  const int dim = h.weight.size() - 2;
  require(dim >= 1 && dim <= 3, ErrorCode::Unsupported,
          "zeta assembly covers dimensions 1 to 3");
  require(is_quasi_smooth(h, F.p()), ErrorCode::Undefined,
          "hypersurface is not quasi-smooth in this characteristic");
  const QdCharacterData data = qd_character_set(h);
  const i64 M = data.modulus;
  require((F.q() - 1) % M == 0, ErrorCode::Undefined,
          "Jacobi sums need q = 1 modulo the character modulus");

  ZetaFunction z;
  z.q = F.q();
  z.dim = dim;
  z.modulus = M;
  z.factors.push_back(ambient_factor(z.q, 0));
  if (dim >= 2) z.factors.push_back(ambient_factor(z.q, 2));

  if (dim == 2 && !data.lines.empty()) {
    // lines cut out by the vanishing of z_1: each contributes an eigenvalue
    // q * chi^{a M_3}(-1), a rational sign times q
    const Character chi = character_of_order(F, M);
    const i64 sign_exp = chi.exponent(F.neg(F.one()));
    for (i64 a : data.lines) {
      const i64 e = mod_norm(a * data.step[3] * sign_exp, M);
      require(e == 0 || 2 * e == M, ErrorCode::ValidationFailure,
              "line eigenvalue is not rational");
      z.factors.push_back(
          {2, linear_factor(e == 0 ? Int(z.q) : Int(-z.q)), {{a}}, "line"});
    }
  }

  for (auto& f : jacobi_blocks(data.vectors, M, F, dim, "jacobi"))
    z.factors.push_back(std::move(f));

  if (dim == 3) {
    // the closed part z_1 = 0 contributes the auxiliary diagonal curve,
    // Tate-twisted by one power of q
    Weight tail{{h.weight.entries[2], h.weight.entries[3], h.weight.entries[4]}};
    ZetaFunction zc = zeta_curve(make_diagonal(tail, h.degree), F);
    for (const ZetaFactor& f : zc.factors)
      if (f.weight == 1)
        z.factors.push_back({3, poly_scale_arg(f.poly, Int(z.q)), f.tags, "curve"});
  }

  if (dim == 1) z.factors.push_back(ambient_factor(z.q, 2));
  if (dim >= 2) z.factors.push_back(ambient_factor(z.q, 4));
  if (dim == 3) z.factors.push_back(ambient_factor(z.q, 6));

  if (dim == 2) {
    CharVector base{data.step[0],
                    mod_norm(M - data.step[0] - data.step[2] - data.step[3], M),
                    data.step[2], data.step[3]};
    for (const auto& orbit : unit_orbits(data.vectors, M))
      if (std::find(orbit.begin(), orbit.end(), base) != orbit.end()) z.motive = orbit;
    require(!z.motive.empty(), ErrorCode::ValidationFailure,
            "weight vector missing from the surface character set");
  }
  validate_zeta(z);
  return z;
}

namespace {

ZetaFunction zeta_curve(const Hypersurface& h, const FiniteField& F) {
  return h.kind == HKind::Diagonal ? zeta_diagonal(h, F) : zeta_quasidiagonal(h, F);
}

}  // namespace

IntPoly point_orbit_polynomial(i64 k, i64 Q, i64 p) {
  require(k >= 1 && Q >= 2, ErrorCode::BadInput, "bad orbit polynomial arguments");
  // roots of x^k = -1 indexed by odd residues mod 2k (all residues mod k in
  // characteristic 2, where -1 = 1); Frobenius multiplies the index by Q
  const i64 mod = (p == 2) ? k : 2 * k;
  const i64 start = (p == 2) ? 0 : 1;
  const i64 step = (p == 2) ? 1 : 2;
  std::vector<char> seen(mod, 0);
  IntPoly out = poly_const(1);
  i64 rational = 0;
  for (i64 j = start; j < mod; j += step) {
    if (seen[j]) continue;
    i64 len = 0, x = j;
    do {
      seen[x] = 1;
      x = mod_norm(x * (Q % mod), mod);
      ++len;
    } while (x != j);
    if (len == 1) ++rational;
    IntPoly cyc(len + 1, Int(0));
    cyc[0] = 1;
    cyc[len] = -1;
    out = poly_mul(out, cyc);  // 1 - t^len
  }
  require(rational == rational_members(k, Q), ErrorCode::ValidationFailure,
          "orbit polynomial disagrees with the rational member count");
  return out;
}

ZetaFunction zeta_resolution(const ZetaFunction& z, const ResolutionInventory& inv,
                             const FiniteField& F) {
  require(z.dim == 3, ErrorCode::BadInput, "inventory resolution expects a threefold");
  require(z.q == F.q(), ErrorCode::BadInput, "field mismatch with the zeta input");
  const Int q(z.q);
  ZetaFunction out = z;
  std::erase_if(out.factors, [](const ZetaFactor& f) { return f.weight == 4; });

  for (const RuledEntry& r : inv.ruled) {
    out.factors.push_back(
        {2, poly_pow(linear_factor(q), r.n), {}, "exceptional"});
    ZetaFunction zc = zeta_curve(r.curve, F);
    for (const ZetaFactor& f : zc.factors)
      if (f.weight == 1)
        out.factors.push_back(
            {3, poly_pow(poly_scale_arg(f.poly, q), r.n), f.tags, "curve"});
  }
  for (const PlaneEntry& pl : inv.planes) {
    IntPoly p0 = point_orbit_polynomial(pl.field_index, z.q, F.p());
    out.factors.push_back(
        {2, poly_pow(poly_scale_arg(p0, q), pl.e), {}, "exceptional"});
  }

  // P_4 is the Tate twist P_2(qt), block by block
  std::vector<ZetaFactor> twisted;
  for (const ZetaFactor& f : out.factors)
    if (f.weight == 2)
      twisted.push_back({4, poly_scale_arg(f.poly, q), f.tags, f.role});
  for (auto& f : twisted) out.factors.push_back(std::move(f));

  i64 expected = 1;
  for (const RuledEntry& r : inv.ruled) expected += r.n;
  for (const PlaneEntry& pl : inv.planes) expected += pl.e * pl.points;
  require(poly_degree(zeta_p(out, 2)) == expected, ErrorCode::ValidationFailure,
          "resolved middle-even degree disagrees with the inventory");
  validate_zeta(out);
  return out;
}

ZetaFunction zeta_resolution(const ZetaFunction& z, const Hypersurface& h,
                             const FiniteField& F) {
  require(z.dim == 2, ErrorCode::BadInput, "surface resolution expects a surface");
  require(z.q == F.q(), ErrorCode::BadInput, "field mismatch with the zeta input");
  const Int q(z.q);
  ZetaFunction out = z;
  for (const SingularLocus& L : singular_loci(h)) {
    require(L.dim == 0, ErrorCode::Unsupported,
            "surface resolution handles point singularities only");
    IntPoly p0 = point_orbit_polynomial(L.points, z.q, F.p());
    out.factors.push_back(
        {2, poly_pow(poly_scale_arg(p0, q), L.m - 1), {}, "exceptional"});
  }
  if (cy_condition(h))
    require(poly_degree(zeta_p(out, 2)) == 22, ErrorCode::ValidationFailure,
            "resolved K3 surface must reach the full middle cohomology");
  validate_zeta(out);
  return out;
}

std::pair<IntPoly, IntPoly> transcendental_split(const ZetaFunction& z, i64 p) {
  require(z.dim == 2, ErrorCode::BadInput, "the split applies to surfaces");
  require(z.modulus >= 2 && !z.motive.empty(), ErrorCode::BadInput,
          "zeta input carries no weight motive");
  i64 qq = z.q;
  while (qq % p == 0) qq /= p;
  require(qq == 1, ErrorCode::BadInput, "q is not a power of p");
  const i64 M = z.modulus;
  require(std::gcd(p, M) == 1, ErrorCode::Undefined,
          "split needs good reduction at p");

  bool supersingular = false;
  const i64 ord = mult_order(p % M, M);
  i64 x = 1;
  for (i64 r = 1; r <= ord && !supersingular; ++r) {
    x = mod_norm(x * (p % M), M);
    if (x == M - 1) supersingular = true;
  }

  IntPoly alg = poly_const(1), tr = poly_const(1);
  bool found = false;
  for (const ZetaFactor& f : z.factors) {
    if (f.weight != 2) continue;
    if (!supersingular && f.tags == z.motive) {
      tr = poly_mul(tr, f.poly);
      found = true;
    } else {
      alg = poly_mul(alg, f.poly);
    }
  }
  require(supersingular || found, ErrorCode::ValidationFailure,
          "motive block missing from the surface zeta");
  return {alg, tr};
}

}  // namespace wpcy
