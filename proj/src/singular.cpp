#include "wpcy/singular.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <tuple>
#include <utility>

#include "wpcy/charset.hpp"
#include "wpcy/ffield.hpp"
#include "wpcy/intmath.hpp"

namespace wpcy {

namespace {

std::vector<ResidualTerm> defining_terms(const Hypersurface& h) {
  std::vector<ResidualTerm> out;
  for (auto& m : base_monomials(h)) out.push_back({m, ""});
  for (auto& t : h.deformation) out.push_back({t.monomial, t.param});
  return out;
}

bool supported_on(const std::vector<i64>& expo, const std::vector<int>& idx) {
  for (int i = 0; i < static_cast<int>(expo.size()); ++i) {
    if (expo[i] > 0 && std::find(idx.begin(), idx.end(), i) == idx.end()) {
      return false;
    }
  }
  return true;
}

std::vector<ResidualTerm> restrict_terms(const std::vector<ResidualTerm>& terms,
                                         const std::vector<int>& idx) {
  std::vector<ResidualTerm> out;
  for (const auto& t : terms) {
    if (supported_on(t.expo, idx)) out.push_back(t);
  }
  return out;
}

i64 stratum_order(const Weight& w, const std::vector<int>& idx) {
  i64 g = 0;
  for (int i : idx) g = std::gcd(g, w.entries[i]);
  return g;
}

std::vector<int> complement(int n, const std::vector<int>& idx) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (std::find(idx.begin(), idx.end(), i) == idx.end()) out.push_back(i);
  }
  return out;
}

// Scale the transverse exponents by the inverse of the first one coprime to
// m, which is how the worked local charts are presented.
std::vector<i64> normalized_action(const Weight& w, i64 m,
                                   const std::vector<int>& transverse) {
  std::vector<i64> raw;
  for (int c : transverse) {
    i64 v = mod_norm(w.entries[c], m);
    require(v != 0, ErrorCode::Undefined,
            "transverse coordinate fixed by the whole stabilizer");
    raw.push_back(v);
  }
  int lead = -1;
  for (int t = 0; t < static_cast<int>(raw.size()); ++t) {
    if (std::gcd(raw[t], m) == 1) {
      lead = t;
      break;
    }
  }
  require(lead >= 0, ErrorCode::Undefined,
          "no transverse exponent is invertible");
  i64 u = inv_mod(raw[lead], m);
  for (auto& v : raw) v = mod_norm(v * u, m);
  return raw;
}

// Points of a two-coordinate locus: strip the common monomial factor from
// the residual pair, leaving a binary form of weighted degree D whose roots
// all have both coordinates nonzero; there are D / lcm(w_i, w_j) of them.
i64 pair_point_count(const Hypersurface& h,
                     const std::vector<ResidualTerm>& res, int i, int j) {
  require(res.size() == 2, ErrorCode::Unsupported,
          "point locus with a non-binomial residual equation");
  for (const auto& t : res) {
    require(t.param.empty(), ErrorCode::Unsupported,
            "point locus with a parameter-dependent residual equation");
  }
  i64 wi = h.weight.entries[i], wj = h.weight.entries[j];
  i64 ci = std::min(res[0].expo[i], res[1].expo[i]);
  i64 cj = std::min(res[0].expo[j], res[1].expo[j]);
  i64 d = h.degree - ci * wi - cj * wj;
  i64 l = std::lcm(wi, wj);
  require(d > 0 && d % l == 0, ErrorCode::Undefined,
          "residual binary form of unexpected degree");
  return d / l;
}

// The weight-and-exponent reduction of normalize_hypersurface, on a raw
// sub-model.
std::tuple<Weight, i64, std::vector<std::vector<i64>>> reduce_sub_model(
    Weight w, i64 d, std::vector<std::vector<i64>> mons) {
  int n = w.size();
  bool again = true;
  while (again) {
    again = false;
    i64 g = gcd_all(w.entries);
    if (g > 1) {
      for (i64& wi : w.entries) wi /= g;
      d /= g;
      again = true;
      continue;
    }
    for (int skip = 0; skip < n && !again; ++skip) {
      i64 q = 0;
      for (int i = 0; i < n; ++i) {
        if (i != skip) q = std::gcd(q, w.entries[i]);
      }
      if (q <= 1) continue;
      require(d % q == 0, ErrorCode::Undefined,
              "residual weight reduction needs a fractional substitution");
      for (int i = 0; i < n; ++i) {
        if (i != skip) w.entries[i] /= q;
      }
      d /= q;
      for (auto& m : mons) {
        require(m[skip] % q == 0, ErrorCode::Undefined,
                "residual exponent not divisible in weight reduction");
        m[skip] /= q;
      }
      again = true;
    }
  }
  return {std::move(w), d, std::move(mons)};
}

// F-points of a weighted plane curve.  One coordinate occurs as a lone pure
// power z^e, so the affine cone is counted by solving z^e = -(rest) with a
// root-count table; the projective count is (cone - 1)/(q - 1).
i64 weighted_curve_points(const Hypersurface& c, const FiniteField& F) {
  auto monos = base_monomials(c);
  const i64 q = F.q();
  const int n = c.weight.size();
  require(n == 3, ErrorCode::Unsupported, "curve counting needs three coordinates");

  auto support_size = [&](const std::vector<i64>& m) {
    int s = 0;
    for (i64 e : m) s += e > 0;
    return s;
  };
  int solo = -1, solo_mono = -1;
  for (int i = 0; i < n && solo < 0; ++i) {
    int cnt = 0, at = -1;
    for (int t = 0; t < static_cast<int>(monos.size()); ++t) {
      if (monos[t][i] > 0) {
        ++cnt;
        at = t;
      }
    }
    if (cnt == 1 && support_size(monos[at]) == 1) {
      solo = i;
      solo_mono = at;
    }
  }
  require(solo >= 0, ErrorCode::Unsupported,
          "no coordinate occurs as a lone pure power");
  i64 e = monos[solo_mono][solo];
  std::vector<i64> rc(q);
  for (i64 a = 0; a < q; ++a) {
    rc[a] = F.nth_power_solutions(e, static_cast<uint32_t>(a));
  }

  std::vector<int> vars;
  for (int i = 0; i < n; ++i) {
    if (i != solo) vars.push_back(i);
  }
  std::vector<std::array<i64, 2>> rest;  // exponents on vars[0], vars[1]
  for (int t = 0; t < static_cast<int>(monos.size()); ++t) {
    if (t != solo_mono) rest.push_back({monos[t][vars[0]], monos[t][vars[1]]});
  }

  auto pow_table = [&](i64 expo) {
    std::vector<uint32_t> tab(q);
    for (i64 x = 0; x < q; ++x) {
      tab[x] = expo == 0 ? F.one() : F.pow(static_cast<uint32_t>(x), expo);
    }
    return tab;
  };

  int with_x = 0, x_at = -1;
  for (int t = 0; t < static_cast<int>(rest.size()); ++t) {
    if (rest[t][0] > 0) {
      ++with_x;
      x_at = t;
    }
  }
  i64 cone = 0;
  if (with_x == 1) {
    // Group the first variable by the value of its power.
    std::vector<i64> mult(q, 0);
    auto xpow = pow_table(rest[x_at][0]);
    for (i64 x = 0; x < q; ++x) ++mult[xpow[x]];
    std::vector<std::pair<uint32_t, i64>> classes;
    for (i64 v = 0; v < q; ++v) {
      if (mult[v]) classes.push_back({static_cast<uint32_t>(v), mult[v]});
    }
    auto ypow = pow_table(rest[x_at][1]);
    std::vector<std::vector<uint32_t>> ytabs;
    for (int t = 0; t < static_cast<int>(rest.size()); ++t) {
      if (t != x_at) ytabs.push_back(pow_table(rest[t][1]));
    }
    for (i64 y = 0; y < q; ++y) {
      uint32_t base = 0;
      for (const auto& tab : ytabs) base = F.add(base, tab[y]);
      uint32_t yb = ypow[y];
      for (const auto& [v, cnt] : classes) {
        cone += cnt * rc[F.neg(F.add(F.mul(v, yb), base))];
      }
    }
  } else {
    require(q * q <= 400000000LL, ErrorCode::BoundExceeded,
            "curve counting field too large");
    std::vector<std::vector<uint32_t>> xt, yt;
    for (const auto& r : rest) {
      xt.push_back(pow_table(r[0]));
      yt.push_back(pow_table(r[1]));
    }
    for (i64 x = 0; x < q; ++x) {
      for (i64 y = 0; y < q; ++y) {
        uint32_t acc = 0;
        for (int t = 0; t < static_cast<int>(rest.size()); ++t) {
          acc = F.add(acc, F.mul(xt[t][x], yt[t][y]));
        }
        cone += rc[F.neg(acc)];
      }
    }
  }
  require((cone - 1) % (q - 1) == 0, ErrorCode::Undefined,
          "cone count not a union of scaling orbits");
  return (cone - 1) / (q - 1);
}

// Genus from point counts over two extensions.  The prime is chosen with
// p = -1 mod twice every character order the curve can carry, which forces
// every Frobenius eigenvalue over F_{p^2} to be -p: the count there is then
// p^2 + 1 + 2gp, and the count over F_p must come out to p + 1.
i64 genus_from_counts(const Hypersurface& c) {
  std::vector<i64> orders;
  if (c.kind == HKind::QuasiDiagonal) {
    orders.push_back(c.exponents[0]);
    for (size_t i = 2; i < c.exponents.size(); ++i) {
      orders.push_back(c.exponents[i]);
    }
  } else {
    for (const auto& m : base_monomials(c)) {
      for (i64 e : m) {
        if (e > 0) orders.push_back(e);
      }
    }
  }
  i64 mchar = 1;
  for (i64 e : orders) mchar = std::lcm(mchar, e);
  i64 step = 2 * mchar;

  auto bad = [&](i64 p) {
    if (c.degree % p == 0) return true;
    for (i64 w : c.weight.entries) {
      if (w % p == 0) return true;
    }
    for (const auto& m : base_monomials(c)) {
      for (i64 e : m) {
        if (e > 0 && e % p == 0) return true;
      }
    }
    return false;
  };
  i64 p = 0;
  for (i64 cand = step - 1; p == 0; cand += step) {
    if (cand >= 2 && is_prime(cand) && !bad(cand)) p = cand;
  }
  require(p * p <= 1000000, ErrorCode::BoundExceeded,
          "genus interpolation needs a field beyond the supported size");

  FiniteField f1(p, 1);
  i64 n1 = weighted_curve_points(c, f1);
  require(n1 == p + 1, ErrorCode::Undefined,
          "genus interpolation: nonzero trace at an inert prime");
  FiniteField f2(p, 2);
  i64 n2 = weighted_curve_points(c, f2);
  i64 excess = n2 - p * p - 1;
  require(excess >= 0 && excess % (2 * p) == 0, ErrorCode::Undefined,
          "genus interpolation: count off the Weil bound pattern");
  return excess / (2 * p);
}

}  // namespace

std::vector<i64> local_action(const SingularLocus& locus,
                              const Hypersurface& h) {
  return normalized_action(h.weight, locus.m, locus.transverse);
}

CurveData locus_curve_data(const SingularLocus& locus, const Hypersurface& h) {
  require(locus.dim == 1, ErrorCode::BadInput,
          "curve data requested for a point locus");
  Weight wsub;
  for (int c : locus.indices) wsub.entries.push_back(h.weight.entries[c]);
  std::vector<std::vector<i64>> monos;
  for (const auto& t : locus.residual) {
    require(t.param.empty(), ErrorCode::Unsupported,
            "parameter-dependent residual equation");
    std::vector<i64> e;
    for (int c : locus.indices) e.push_back(t.expo[c]);
    monos.push_back(std::move(e));
  }
  auto [w2, d2, m2] = reduce_sub_model(wsub, h.degree, std::move(monos));
  CanonicalModel cm = canonicalize_model(std::move(w2), d2, std::move(m2));
  require(cm.recognized, ErrorCode::Unsupported,
          "residual equation of unrecognized shape");
  CurveData out;
  out.model = std::move(cm.surface);
  if (out.model.kind == HKind::Diagonal) {
    out.genus = curve_genus(out.model);
  } else {
    out.genus = genus_from_counts(out.model);
  }
  return out;
}

std::vector<SingularLocus> singular_loci(const Hypersurface& h) {
  require(is_normalized(h.weight), ErrorCode::BadInput,
          "weight must be normalized");
  const int n = h.weight.size();
  const Weight& w = h.weight;
  const bool cy = cy_condition(h);
  auto terms = defining_terms(h);

  std::vector<SingularLocus> curves;
  for (int i = 0; i + 2 < n; ++i) {
    for (int j = i + 1; j + 1 < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        std::vector<int> idx = {i, j, k};
        i64 m = stratum_order(w, idx);
        if (m < 2) continue;
        SingularLocus L;
        L.dim = 1;
        L.indices = idx;
        L.m = m;
        L.residual = restrict_terms(terms, idx);
        require(!L.residual.empty(), ErrorCode::Undefined,
                "hypersurface contains a fixed plane");
        for (int c : idx) {
          bool used = false;
          for (const auto& t : L.residual) used = used || t.expo[c] > 0;
          require(used, ErrorCode::Unsupported,
                  "curve locus with an idle coordinate");
        }
        L.transverse = complement(n, idx);
        L.action = normalized_action(w, m, L.transverse);
        require(L.action == std::vector<i64>({1, m - 1}),
                ErrorCode::Undefined,
                "curve locus action is not the standard chain type");
        curves.push_back(std::move(L));
      }
    }
  }

  std::vector<SingularLocus> pts;
  for (int i = 0; i + 1 < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> idx = {i, j};
      i64 m = stratum_order(w, idx);
      if (m < 2) continue;
      // Points whose stabilizer matches a curve through them are ordinary
      // points of that curve, not a separate locus.
      i64 curve_m = 1;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        curve_m = std::max(curve_m, stratum_order(w, {i, j, k}));
      }
      if (curve_m == m) continue;
      auto res = restrict_terms(terms, idx);
      if (res.size() < 2) continue;  // the open stratum misses the hypersurface
      SingularLocus P;
      P.dim = 0;
      P.indices = idx;
      P.m = m;
      P.residual = std::move(res);
      P.transverse = complement(n, idx);
      P.action = normalized_action(w, m, P.transverse);
      if (cy) {
        i64 s = 0;
        for (i64 a : P.action) s += a;
        require(s % m == 0, ErrorCode::Undefined,
                "point locus action violates the crepancy congruence");
      }
      P.points = pair_point_count(h, P.residual, i, j);
      pts.push_back(std::move(P));
    }
  }

  if (h.kind == HKind::QuasiDiagonal && w.entries[0] >= 2) {
    SingularLocus V;
    V.dim = 0;
    V.indices = {0};
    V.vertex = true;
    V.m = w.entries[0];
    V.points = 1;
    V.residual = restrict_terms(terms, V.indices);
    require(V.residual.empty(), ErrorCode::Undefined,
            "distinguished vertex does not lie on the hypersurface");
    for (int c = 2; c < n; ++c) V.transverse.push_back(c);
    V.action = normalized_action(w, V.m, V.transverse);
    if (cy) {
      i64 s = 0;
      for (i64 a : V.action) s += a;
      require(s % V.m == 0, ErrorCode::Undefined,
              "vertex action violates the crepancy congruence");
    }
    pts.push_back(std::move(V));
  }

  std::vector<SingularLocus> out = std::move(curves);
  int ncurves = static_cast<int>(out.size());
  for (auto& P : pts) {
    for (int c = 0; c < ncurves; ++c) {
      if (!std::includes(out[c].indices.begin(), out[c].indices.end(),
                         P.indices.begin(), P.indices.end())) {
        continue;
      }
      if (restrict_terms(out[c].residual, P.indices) == P.residual) {
        P.contained_in.push_back(c);
      }
    }
    out.push_back(std::move(P));
  }
  return out;
}

}  // namespace wpcy
