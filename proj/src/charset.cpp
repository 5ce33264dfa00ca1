#include "wpcy/charset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "wpcy/intmath.hpp"

namespace wpcy {

std::vector<CharVector> character_set(i64 d, const Weight& w) {
  require(d >= 1, ErrorCode::BadInput, "degree must be positive");
  size_t n = w.entries.size();
  require(n >= 2, ErrorCode::BadInput, "need at least two coordinates");
  for (i64 wi : w.entries) {
    require(wi >= 1 && d % wi == 0, ErrorCode::BadInput,
            "every weight must divide the degree");
  }
  // Odometer over the first n-1 slots in increasing order; the last entry is
  // forced by the zero-sum condition, so the output comes out lexicographic.
  std::vector<CharVector> out;
  CharVector a(n);
  i64 wl = w.entries[n - 1];
  std::function<void(size_t, i64)> scan = [&](size_t i, i64 sum) {
    if (i == n - 1) {
      i64 last = mod_norm(-sum, d);
      if (last != 0 && last % wl == 0) {
        a[n - 1] = last;
        out.push_back(a);
      }
      return;
    }
    for (i64 v = w.entries[i]; v < d; v += w.entries[i]) {
      a[i] = v;
      scan(i + 1, sum + v);
    }
  };
  scan(0, 0);
  return out;
}

QdCharacterData qd_character_set(const Hypersurface& h) {
  require(h.kind == HKind::QuasiDiagonal, ErrorCode::BadInput,
          "needs a quasi-diagonal model");
  const std::vector<i64>& m = h.exponents;
  size_t n = m.size();
  require(n >= 3, ErrorCode::BadInput, "need at least three coordinates");

  QdCharacterData out;
  i64 M = 1;
  for (size_t i = 0; i < n; ++i) {
    if (i != 1) M = std::lcm(M, m[i]);
  }
  out.modulus = M;
  out.step.assign(n, 1);
  for (size_t i = 0; i < n; ++i) {
    if (i != 1) out.step[i] = M / m[i];
  }

  // Slot 1 is free and slot 0 is then pinned by a_0 = -m_1 a_1; the middle
  // slots run over nonzero multiples of their step and the last is forced.
  CharVector a(n);
  std::function<void(size_t, i64)> scan = [&](size_t i, i64 sum) {
    if (i == n - 1) {
      i64 last = mod_norm(-sum, M);
      if (last != 0 && last % out.step[n - 1] == 0) {
        a[n - 1] = last;
        out.vectors.push_back(a);
      }
      return;
    }
    for (i64 v = out.step[i]; v < M; v += out.step[i]) {
      a[i] = v;
      scan(i + 1, sum + v);
    }
  };
  for (i64 a1 = 1; a1 < M; ++a1) {
    i64 a0 = mod_norm(-m[1] * a1, M);
    if (a0 == 0 || a0 % out.step[0] != 0) continue;
    a[0] = a0;
    a[1] = a1;
    scan(2, a0 + a1);
  }
  std::sort(out.vectors.begin(), out.vectors.end());

  if (n == 4) {
    i64 w2 = h.weight.entries[2], w3 = h.weight.entries[3];
    for (i64 v = 1; v < m[3]; ++v) {
      if ((w3 * v) % w2 == 0) out.lines.push_back(v);
    }
    out.line_count = h.degree / std::lcm(w2, w3);
  }
  return out;
}

i64 curve_genus(const Hypersurface& h) {
  require(h.weight.entries.size() == 3, ErrorCode::BadInput,
          "genus is defined here for plane curves only");
  if (h.kind == HKind::Diagonal) {
    return static_cast<i64>(character_set(h.degree, h.weight).size()) / 2;
  }
  if (h.kind == HKind::QuasiDiagonal) {
    return static_cast<i64>(qd_character_set(h).vectors.size()) / 2;
  }
  fail(ErrorCode::Unsupported,
       "genus needs a diagonal or quasi-diagonal model");
}

namespace {

// Exponent of zeta_L picked up by the eigenspace of `a` under one generator
// side given in degree-deg exponents.
i64 pairing(const CharVector& a, const std::vector<i64>& g, i64 deg, i64 L) {
  i64 s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * g[i];
  return mod_norm((L / deg) * mod_norm(s, deg), L);
}

}  // namespace

QuotientCharacterData quotient_character_sets(
    const std::vector<CharVector>& surface_set, i64 surface_degree,
    const std::vector<CharVector>& curve_set, i64 curve_degree,
    const std::vector<QuotientGenerator>& generators) {
  require(surface_degree >= 1 && curve_degree >= 1, ErrorCode::BadInput,
          "degrees must be positive");
  for (const auto& g : generators) {
    if (!surface_set.empty()) {
      require(g.surface_exponents.size() == surface_set.front().size(),
              ErrorCode::BadInput, "generator arity mismatch (surface)");
    }
    if (!curve_set.empty()) {
      require(g.curve_exponents.size() == curve_set.front().size(),
              ErrorCode::BadInput, "generator arity mismatch (curve)");
    }
  }
  i64 L = std::lcm(surface_degree, curve_degree);

  QuotientCharacterData out;
  for (const auto& a : surface_set) {
    bool ok = true;
    for (const auto& g : generators) {
      if (pairing(a, g.surface_exponents, surface_degree, L) != 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.surface_invariant.push_back(a);
  }
  for (const auto& b : curve_set) {
    bool ok = true;
    for (const auto& g : generators) {
      if (pairing(b, g.curve_exponents, curve_degree, L) != 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.curve_invariant.push_back(b);
  }
  for (const auto& a : surface_set) {
    for (const auto& b : curve_set) {
      bool ok = true;
      for (const auto& g : generators) {
        i64 e = pairing(a, g.surface_exponents, surface_degree, L) +
                pairing(b, g.curve_exponents, curve_degree, L);
        if (mod_norm(e, L) != 0) {
          ok = false;
          break;
        }
      }
      if (ok) out.pairs.emplace_back(a, b);
    }
  }
  out.h1 = static_cast<i64>(out.curve_invariant.size());
  out.h2 = 2 + static_cast<i64>(out.surface_invariant.size());
  out.h3 = static_cast<i64>(out.curve_invariant.size() + out.pairs.size());
  return out;
}

}  // namespace wpcy
