#include "wpcy/polyint.hpp"

namespace wpcy {

namespace {

void trim(IntPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

}  // namespace

IntPoly poly_const(Int c) {
  IntPoly f{std::move(c)};
  trim(f);
  return f;
}

i64 poly_degree(const IntPoly& f) { return static_cast<i64>(f.size()) - 1; }

IntPoly poly_mul(const IntPoly& f, const IntPoly& g) {
  if (f.empty() || g.empty()) return {};
  IntPoly h(f.size() + g.size() - 1, Int(0));
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j) h[i + j] += f[i] * g[j];
  trim(h);
  return h;
}

IntPoly poly_pow(const IntPoly& f, i64 e) {
  require(e >= 0, ErrorCode::BadInput, "polynomial power needs a nonnegative exponent");
  IntPoly acc = poly_const(1);
  IntPoly base = f;
  for (; e > 0; e >>= 1) {
    if (e & 1) acc = poly_mul(acc, base);
    if (e > 1) base = poly_mul(base, base);
  }
  return acc;
}

Int poly_eval(const IntPoly& f, const Int& x) {
  Int v = 0;
  for (size_t i = f.size(); i-- > 0;) v = v * x + f[i];
  return v;
}

IntPoly poly_scale_arg(const IntPoly& f, const Int& c) {
  IntPoly g = f;
  Int ci = 1;
  for (size_t i = 1; i < g.size(); ++i) {
    ci *= c;
    g[i] *= ci;
  }
  trim(g);
  return g;
}

IntPoly cyc_linear_product(const std::vector<CycInt>& values) {
  if (values.empty()) return poly_const(1);
  i64 M = values.front().order();
  std::vector<CycInt> c;
  c.reserve(values.size() + 1);
  c.push_back(CycInt::integer(M, 1));
  for (const CycInt& v : values) {
    require(v.order() == M, ErrorCode::BadInput, "mixed cyclotomic orders in one product");
    c.push_back(CycInt(M));
    for (size_t k = c.size() - 1; k > 0; --k) c[k] -= v * c[k - 1];
  }
  IntPoly f(c.size());
  for (size_t k = 0; k < c.size(); ++k) {
    require(c[k].is_integer(), ErrorCode::ValidationFailure,
            "product of conjugate linear factors has an irrational coefficient");
    f[k] = c[k].as_integer();
  }
  trim(f);
  return f;
}

std::vector<Int> reciprocal_root_power_sums(const IntPoly& f, int count) {
  require(!f.empty() && f[0] == 1, ErrorCode::BadInput,
          "power sums need a polynomial with constant term 1");
  std::vector<Int> s(count + 1, Int(0));
  for (int nu = 1; nu <= count; ++nu) {
    Int v = 0;
    if (static_cast<size_t>(nu) < f.size()) v = -Int(nu) * f[nu];
    for (int j = 1; j < nu; ++j)
      if (static_cast<size_t>(j) < f.size()) v -= f[j] * s[nu - j];
    s[nu] = v;
  }
  return std::vector<Int>(s.begin() + 1, s.end());
}

bool weil_self_reciprocal(const IntPoly& f, i64 q, int w) {
  i64 m = poly_degree(f);
  if (m <= 0) return m == 0;
  Int qw = 1;
  for (int i = 0; i < w; ++i) qw *= q;  // q^w
  const Int& lead = f[m];
  if (lead * lead != boost::multiprecision::pow(qw, static_cast<unsigned>(m)))
    return false;
  Int qwj = 1;
  for (i64 j = 0; j <= m; ++j) {
    if (f[j] * lead != qwj * f[m - j]) return false;
    qwj *= qw;
  }
  return true;
}

}  // namespace wpcy
