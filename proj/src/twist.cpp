#include "wpcy/twist.hpp"

#include <numeric>

#include "wpcy/intmath.hpp"

namespace wpcy {

namespace {

// Index of the coordinate that occurs only as the pure power of exponent
// ell, or -1.  Smallest such index wins when several qualify.
int distinguished_index(const std::vector<std::vector<i64>>& monomials,
                        i64 ell) {
  if (monomials.empty()) return -1;
  size_t n = monomials.front().size();
  for (size_t i = 0; i < n; ++i) {
    bool pure_found = false, elsewhere = false;
    for (const auto& m : monomials) {
      bool pure = true;
      for (size_t k = 0; k < n; ++k) {
        if (k != i && m[k] != 0) pure = false;
      }
      if (pure && m[i] == ell) {
        pure_found = true;
      } else if (m[i] != 0) {
        elsewhere = true;
      }
    }
    if (pure_found && !elsewhere) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

std::pair<Hypersurface, TwistData> twist_compose(const Hypersurface& V1,
                                                 const Hypersurface& V2,
                                                 i64 ell) {
  require(ell >= 1, ErrorCode::BadInput, "exponent must be positive");
  require(V1.kind != HKind::Deformed && V2.kind != HKind::Deformed,
          ErrorCode::BadInput,
          "composition needs diagonal or quasi-diagonal factors");

  auto mono1 = base_monomials(V1);
  auto mono2 = base_monomials(V2);
  int i1 = distinguished_index(mono1, ell);
  int i2 = distinguished_index(mono2, ell);
  require(i1 >= 0 && i2 >= 0, ErrorCode::BadInput,
          "each factor needs a coordinate occurring only as a pure power "
          "of the given exponent");

  TwistData T;
  T.ell = ell;
  T.index1 = i1;
  T.index2 = i2;
  T.w0 = V1.weight.entries[i1];
  T.v0 = V2.weight.entries[i2];
  require(std::gcd(T.w0, T.v0) == 1, ErrorCode::GcdObstruction,
          "composition undefined when the distinguished weights share a "
          "factor");

  for (i64 c = 0; c < T.v0; ++c) {
    if ((c * T.w0 + 1) % T.v0 == 0) {
      T.s0 = c;
      break;
    }
  }
  T.s = (T.s0 * T.w0 + 1) / T.v0;
  for (i64 c = 0; c < T.w0; ++c) {
    if ((c * T.v0 + 1) % T.w0 == 0) {
      T.t0 = c;
      break;
    }
  }
  T.t = (T.t0 * T.v0 + 1) / T.w0;

  int n1 = V1.weight.size(), n2 = V2.weight.size();
  for (int k = 0; k < n1; ++k) {
    if (k != i1) T.image_weight.entries.push_back(T.v0 * V1.weight.entries[k]);
  }
  for (int k = 0; k < n2; ++k) {
    if (k != i2) T.image_weight.entries.push_back(T.w0 * V2.weight.entries[k]);
  }
  T.image_degree = T.v0 * T.w0 * ell;

  std::vector<std::vector<i64>> support;
  for (const auto& m : mono1) {
    if (m[i1] != 0) continue;  // the distinguished pure power drops out
    std::vector<i64> e;
    for (int k = 0; k < n1; ++k) {
      if (k != i1) e.push_back(m[k]);
    }
    e.resize(n1 - 1 + n2 - 1, 0);
    T.equation.emplace_back(+1, e);
    support.push_back(std::move(e));
  }
  for (const auto& m : mono2) {
    if (m[i2] != 0) continue;
    std::vector<i64> e(n1 - 1, 0);
    for (int k = 0; k < n2; ++k) {
      if (k != i2) e.push_back(m[k]);
    }
    T.equation.emplace_back(-1, e);
    support.push_back(std::move(e));
  }

  CanonicalModel cm =
      canonicalize_model(T.image_weight, T.image_degree, support);
  require(cm.recognized, ErrorCode::Unsupported,
          "image equation is neither diagonal nor quasi-diagonal");
  T.image_perm = cm.perm;
  return {cm.surface, T};
}

std::vector<uint32_t> twist_map_eval(const FiniteField& F, const TwistData& T,
                                     const std::vector<uint32_t>& x,
                                     const std::vector<uint32_t>& y) {
  int n1 = static_cast<int>(x.size()), n2 = static_cast<int>(y.size());
  require(n1 - 1 + n2 - 1 == T.image_weight.size(), ErrorCode::BadInput,
          "coordinate count mismatch");
  uint32_t x0 = x[T.index1], y0 = y[T.index2];
  require(x0 != 0 || y0 != 0, ErrorCode::Undefined,
          "map undefined where both distinguished coordinates vanish");

  std::vector<uint32_t> out;
  if (x0 == 0 || y0 == 0) {
    // Boundary representatives: the surviving factor's tail, zeros opposite.
    for (int k = 0; k < n1; ++k) {
      if (k != T.index1) out.push_back(x0 == 0 ? x[k] : 0);
    }
    for (int k = 0; k < n2; ++k) {
      if (k != T.index2) out.push_back(x0 == 0 ? 0 : y[k]);
    }
    return out;
  }
  for (int k = 0; k < n1; ++k) {
    if (k == T.index1) continue;
    i64 w = T.image_weight.entries[out.size()] / T.v0;
    uint32_t c = F.mul(F.pow(x0, T.s0 * w), F.pow(y0, T.t * w));
    out.push_back(F.mul(c, x[k]));
  }
  for (int k = 0; k < n2; ++k) {
    if (k == T.index2) continue;
    i64 v = T.image_weight.entries[out.size()] / T.w0;
    uint32_t c = F.mul(F.pow(x0, T.s * v), F.pow(y0, T.t0 * v));
    out.push_back(F.mul(c, y[k]));
  }
  return out;
}

}  // namespace wpcy
