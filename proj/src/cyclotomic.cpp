#include "wpcy/cyclotomic.hpp"

#include <numeric>

#include "wpcy/intmath.hpp"

namespace wpcy {

namespace {

// Exact quotient of num by the monic polynomial den (constant term first);
// the remainder must vanish.
std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
  int dn = static_cast<int>(num.size()) - 1;
  int dd = static_cast<int>(den.size()) - 1;
  std::vector<Int> quot(dn - dd + 1, Int(0));
  for (int d = dn; d >= dd; --d) {
    Int c = num[d];
    if (c == 0) continue;
    quot[d - dd] = c;
    for (int i = 0; i <= dd; ++i) num[d - dd + i] -= c * den[i];
  }
  for (const Int& c : num) {
    require(c == 0, ErrorCode::BadInput, "inexact polynomial division");
  }
  return quot;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(i64 M) {
  require(M >= 1, ErrorCode::BadInput, "cyclotomic index must be positive");
  // Divide x^M - 1 by every lower cyclotomic factor, building those the same
  // way in divisor order.
  std::vector<std::pair<i64, std::vector<Int>>> lower;
  for (i64 d = 1; d <= M; ++d) {
    if (M % d != 0) continue;
    std::vector<Int> f(d + 1, Int(0));
    f[0] = -1;
    f[d] = 1;
    for (const auto& [e, phi] : lower) {
      if (d % e == 0) f = poly_div_exact(std::move(f), phi);
    }
    if (d == M) return f;
    lower.emplace_back(d, std::move(f));
  }
  return {};  // unreachable
}

CycInt::CycInt(i64 M, std::vector<Int> coeffs) : M_(M), c_(std::move(coeffs)) {
  require(M >= 1 && static_cast<i64>(c_.size()) == M, ErrorCode::BadInput,
          "coefficient vector must have length M");
}

CycInt CycInt::root_power(i64 M, i64 e) {
  CycInt out(M);
  out.c_[mod_norm(e, M)] = 1;
  return out;
}

CycInt CycInt::integer(i64 M, Int n) {
  CycInt out(M);
  out.c_[0] = std::move(n);
  return out;
}

CycInt CycInt::operator+(const CycInt& o) const {
  require(M_ == o.M_, ErrorCode::BadInput, "mixed cyclotomic orders");
  CycInt out(M_);
  for (i64 i = 0; i < M_; ++i) out.c_[i] = c_[i] + o.c_[i];
  return out;
}

CycInt CycInt::operator-(const CycInt& o) const {
  require(M_ == o.M_, ErrorCode::BadInput, "mixed cyclotomic orders");
  CycInt out(M_);
  for (i64 i = 0; i < M_; ++i) out.c_[i] = c_[i] - o.c_[i];
  return out;
}

CycInt CycInt::operator*(const CycInt& o) const {
  require(M_ == o.M_, ErrorCode::BadInput, "mixed cyclotomic orders");
  CycInt out(M_);
  for (i64 i = 0; i < M_; ++i) {
    if (c_[i] == 0) continue;
    for (i64 j = 0; j < M_; ++j) {
      if (o.c_[j] == 0) continue;
      i64 t = i + j;
      if (t >= M_) t -= M_;
      out.c_[t] += c_[i] * o.c_[j];
    }
  }
  return out;
}

CycInt CycInt::pow(i64 e) const {
  require(e >= 0, ErrorCode::BadInput, "negative cyclotomic power");
  CycInt acc = integer(M_, 1), base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

CycInt CycInt::conj() const {
  CycInt out(M_);
  for (i64 i = 0; i < M_; ++i) out.c_[(M_ - i) % M_] = c_[i];
  return out;
}

CycInt CycInt::galois(i64 t) const {
  require(std::gcd(mod_norm(t, M_), M_) == 1 || M_ == 1, ErrorCode::BadInput,
          "galois exponent must be a unit");
  CycInt out(M_);
  for (i64 i = 0; i < M_; ++i) out.c_[mod_norm(i * t, M_)] += c_[i];
  return out;
}

std::vector<Int> CycInt::reduced() const {
  std::vector<Int> rem = c_;
  std::vector<Int> f = cyclotomic_polynomial(M_);
  int df = static_cast<int>(f.size()) - 1;
  for (int d = static_cast<int>(rem.size()) - 1; d >= df; --d) {
    Int c = rem[d];
    if (c == 0) continue;
    for (int i = 0; i <= df; ++i) rem[d - df + i] -= c * f[i];
  }
  rem.resize(df);
  return rem;
}

bool CycInt::operator==(const CycInt& o) const {
  require(M_ == o.M_, ErrorCode::BadInput, "mixed cyclotomic orders");
  for (const Int& c : (*this - o).reduced()) {
    if (c != 0) return false;
  }
  return true;
}

bool CycInt::is_integer() const {
  std::vector<Int> r = reduced();
  for (size_t i = 1; i < r.size(); ++i) {
    if (r[i] != 0) return false;
  }
  return true;
}

Int CycInt::as_integer() const {
  std::vector<Int> r = reduced();
  for (size_t i = 1; i < r.size(); ++i) {
    require(r[i] == 0, ErrorCode::BadInput, "value is not a rational integer");
  }
  return r[0];
}

}  // namespace wpcy
