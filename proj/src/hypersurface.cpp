#include "wpcy/hypersurface.hpp"

#include <algorithm>
#include <numeric>

#include "wpcy/intmath.hpp"

namespace wpcy {

namespace {

constexpr i64 kConeBound = 100000000;  // exhaustive smoothness checks

i64 weighted_degree(const Weight& w, const std::vector<i64>& mon) {
  require(mon.size() == w.entries.size(), ErrorCode::BadInput,
          "monomial arity mismatch");
  i64 d = 0;
  for (size_t i = 0; i < mon.size(); ++i) {
    require(mon[i] >= 0, ErrorCode::BadInput, "negative exponent");
    d += mon[i] * w.entries[i];
  }
  return d;
}

}  // namespace

i64 Weight::sum() const {
  i64 s = 0;
  for (i64 w : entries) s += w;
  return s;
}

bool is_normalized(const Weight& q) {
  int n = q.size();
  for (int skip = 0; skip < n; ++skip) {
    i64 g = 0;
    for (int i = 0; i < n; ++i) {
      if (i != skip) g = std::gcd(g, q.entries[i]);
    }
    if (n > 1 && g > 1) return false;
  }
  return true;
}

Weight normalize_weight(Weight q) {
  require(!q.entries.empty(), ErrorCode::BadInput, "empty weight");
  for (i64 w : q.entries) {
    require(w >= 1, ErrorCode::BadInput, "weights must be positive");
  }
  int n = q.size();
  bool again = true;
  while (again) {
    again = false;
    i64 g = gcd_all(q.entries);
    if (g > 1) {
      for (i64& w : q.entries) w /= g;
      again = true;
      continue;
    }
    for (int skip = 0; skip < n && !again; ++skip) {
      i64 sub = 0;
      for (int i = 0; i < n; ++i) {
        if (i != skip) sub = std::gcd(sub, q.entries[i]);
      }
      if (n > 1 && sub > 1) {
        for (int i = 0; i < n; ++i) {
          if (i != skip) q.entries[i] /= sub;
        }
        again = true;
      }
    }
  }
  return q;
}

Hypersurface make_diagonal(Weight w, i64 degree) {
  require(degree >= 1, ErrorCode::BadInput, "degree must be positive");
  Hypersurface h;
  h.weight = std::move(w);
  h.degree = degree;
  h.kind = HKind::Diagonal;
  for (i64 wi : h.weight.entries) {
    require(wi >= 1 && degree % wi == 0, ErrorCode::BadInput,
            "diagonal form needs every weight dividing the degree");
    h.exponents.push_back(degree / wi);
  }
  return h;
}

Hypersurface make_quasi_diagonal(Weight w, i64 degree, std::vector<i64> m) {
  require(degree >= 1, ErrorCode::BadInput, "degree must be positive");
  require(m.size() == w.entries.size() && m.size() >= 2, ErrorCode::BadInput,
          "exponent arity mismatch");
  require(w.entries[0] * m[0] + w.entries[1] == degree, ErrorCode::BadInput,
          "leading quasi-diagonal exponent does not match the degree");
  for (size_t i = 1; i < m.size(); ++i) {
    require(m[i] >= 1 && w.entries[i] * m[i] == degree, ErrorCode::BadInput,
            "pure-power exponent does not match the degree");
  }
  require(m[0] >= 1, ErrorCode::BadInput, "exponents must be positive");
  Hypersurface h;
  h.weight = std::move(w);
  h.degree = degree;
  h.kind = HKind::QuasiDiagonal;
  h.exponents = std::move(m);
  return h;
}

Hypersurface make_deformed(Weight w, i64 degree,
                           std::vector<DeformationTerm> terms) {
  Hypersurface h = make_diagonal(std::move(w), degree);
  h.kind = HKind::Deformed;
  for (const auto& t : terms) {
    require(weighted_degree(h.weight, t.monomial) == degree, ErrorCode::BadInput,
            "deformation monomial has the wrong weighted degree");
  }
  h.deformation = std::move(terms);
  return h;
}

bool cy_condition(const Hypersurface& h) { return h.weight.sum() == h.degree; }

std::vector<std::vector<i64>> base_monomials(const Hypersurface& h) {
  int n = h.weight.size();
  std::vector<std::vector<i64>> out;
  for (int i = 0; i < n; ++i) {
    std::vector<i64> e(n, 0);
    e[i] = h.exponents[i];
    if (h.kind == HKind::QuasiDiagonal && i == 0) e[1] += 1;
    out.push_back(std::move(e));
  }
  return out;
}

bool is_quasi_smooth(const Hypersurface& h, i64 field_char,
                     const ParamMap& params) {
  require(field_char == 0 || is_prime(field_char), ErrorCode::BadInput,
          "characteristic must be zero or prime");
  if (h.kind == HKind::Diagonal) {
    if (field_char == 0) return true;
    for (i64 di : h.exponents) {
      if (di % field_char == 0) return false;
    }
    return true;
  }
  require(field_char > 0, ErrorCode::Unsupported,
          "no symbolic smoothness criterion for this shape; pass a prime");

  struct Term {
    std::vector<i64> e;
    i64 c;
  };
  std::vector<Term> terms;
  for (auto& e : base_monomials(h)) terms.push_back({std::move(e), 1});
  for (const auto& t : h.deformation) {
    auto it = params.find(t.param);
    require(it != params.end(), ErrorCode::BadInput,
            "deformation parameter value missing");
    i64 c = mod_norm(it->second, field_char);
    if (c != 0) terms.push_back({t.monomial, c});
  }

  int n = h.weight.size();
  i64 p = field_char;
  i64 points = 1;
  for (int i = 0; i < n; ++i) {
    points *= p;
    require(points <= kConeBound, ErrorCode::BoundExceeded,
            "affine cone too large for the exhaustive smoothness check");
  }

  std::vector<i64> x(n, 0);
  while (true) {
    // advance odometer first so the all-zero start is skipped
    int i = 0;
    while (i < n && x[i] == p - 1) x[i++] = 0;
    if (i == n) break;
    ++x[i];

    bool singular = true;
    i64 value = 0;
    std::vector<i64> grad(n, 0);
    for (const auto& t : terms) {
      i64 m = t.c;
      for (int v = 0; v < n; ++v) m = m * pow_mod(x[v], t.e[v], p) % p;
      value = (value + m) % p;
      for (int v = 0; v < n; ++v) {
        if (t.e[v] == 0) continue;
        i64 dm = t.c * (t.e[v] % p) % p * pow_mod(x[v], t.e[v] - 1, p) % p;
        for (int u = 0; u < n; ++u) {
          if (u != v) dm = dm * pow_mod(x[u], t.e[u], p) % p;
        }
        grad[v] = (grad[v] + dm) % p;
      }
    }
    if (value != 0) singular = false;
    for (int v = 0; v < n && singular; ++v) {
      if (grad[v] != 0) singular = false;
    }
    if (singular) return false;
  }
  return true;
}

CanonicalModel canonicalize_model(Weight w, i64 degree,
                                  std::vector<std::vector<i64>> monomials) {
  int n = w.size();
  CanonicalModel out;
  out.perm.resize(n);
  for (int i = 0; i < n; ++i) out.perm[i] = i;
  for (const auto& m : monomials) {
    require(weighted_degree(w, m) == degree, ErrorCode::BadInput,
            "monomial of the wrong weighted degree");
  }

  auto support = [&](const std::vector<i64>& m) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i) {
      if (m[i] > 0) s.push_back(i);
    }
    return s;
  };

  if (static_cast<int>(monomials.size()) == n) {
    // Diagonal: one pure power per coordinate.
    std::vector<i64> exps(n, 0);
    bool ok = true;
    for (const auto& m : monomials) {
      auto s = support(m);
      if (s.size() != 1 || exps[s[0]] != 0) {
        ok = false;
        break;
      }
      exps[s[0]] = m[s[0]];
    }
    if (ok && std::count(exps.begin(), exps.end(), 0) == 0) {
      out.surface = make_diagonal(std::move(w), degree);
      return out;
    }

    // Quasi-diagonal: a unique two-variable monomial x_i^m x_j, pure powers
    // on every other coordinate (including j), nothing on i.
    int mixed = -1;
    for (size_t t = 0; t < monomials.size(); ++t) {
      if (support(monomials[t]).size() == 2) {
        if (mixed != -1) {
          mixed = -2;
          break;
        }
        mixed = static_cast<int>(t);
      }
    }
    if (mixed >= 0) {
      auto s = support(monomials[mixed]);
      for (auto [hi, lo] : {std::pair<int, int>{s[0], s[1]}, {s[1], s[0]}}) {
        if (monomials[mixed][lo] != 1) continue;
        std::vector<i64> pure(n, 0);
        bool ok = true;
        for (size_t t = 0; t < monomials.size(); ++t) {
          if (static_cast<int>(t) == mixed) continue;
          auto ps = support(monomials[t]);
          if (ps.size() != 1 || ps[0] == hi || pure[ps[0]] != 0) {
            ok = false;
            break;
          }
          pure[ps[0]] = monomials[t][ps[0]];
        }
        if (!ok) continue;
        std::vector<int> order = {hi, lo};
        for (int i = 0; i < n; ++i) {
          if (i != hi && i != lo) order.push_back(i);
        }
        Weight wp;
        std::vector<i64> mp;
        for (int i : order) wp.entries.push_back(w.entries[i]);
        mp.push_back(monomials[mixed][hi]);
        mp.push_back(pure[lo]);
        for (size_t i = 2; i < order.size(); ++i) mp.push_back(pure[order[i]]);
        out.surface = make_quasi_diagonal(std::move(wp), degree, std::move(mp));
        out.perm = std::move(order);
        return out;
      }
    }
  }

  out.surface.weight = std::move(w);
  out.surface.degree = degree;
  out.recognized = false;
  return out;
}

Normalized normalize_hypersurface(const Hypersurface& h) {
  Weight w = h.weight;
  i64 d = h.degree;
  std::vector<std::vector<i64>> mons = base_monomials(h);
  std::vector<std::vector<i64>> def;
  for (const auto& t : h.deformation) def.push_back(t.monomial);
  int n = w.size();

  bool clean = true;
  bool again = true;
  while (again && clean) {
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
      if (n <= 1 || q <= 1) continue;
      if (d % q != 0) {
        clean = false;  // substitution u = x_skip^q is not polynomial
        break;
      }
      for (int i = 0; i < n; ++i) {
        if (i != skip) w.entries[i] /= q;
      }
      d /= q;
      for (auto* list : {&mons, &def}) {
        for (auto& m : *list) {
          require(m[skip] % q == 0, ErrorCode::BadInput,
                  "exponent not divisible in weight reduction");
          m[skip] /= q;
        }
      }
      again = true;
    }
  }

  Normalized out;
  if (!clean) {
    out.surface = h;
    out.perm.resize(n);
    for (int i = 0; i < n; ++i) out.perm[i] = i;
    out.fully_reduced = false;
    return out;
  }

  CanonicalModel c = canonicalize_model(w, d, mons);
  if (!c.recognized) {
    out.surface = h;
    out.perm.resize(n);
    for (int i = 0; i < n; ++i) out.perm[i] = i;
    out.fully_reduced = false;
    return out;
  }
  out.surface = std::move(c.surface);
  out.perm = std::move(c.perm);
  if (!def.empty()) {
    out.surface.kind = HKind::Deformed;
    for (size_t t = 0; t < def.size(); ++t) {
      std::vector<i64> m(n);
      for (int i = 0; i < n; ++i) m[i] = def[t][out.perm[i]];
      out.surface.deformation.push_back({h.deformation[t].param, std::move(m)});
    }
  }
  return out;
}

}  // namespace wpcy
