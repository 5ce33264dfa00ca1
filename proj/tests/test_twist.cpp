#include <functional>

#include "doctest.h"
#include "wpcy/hypersurface.hpp"
#include "wpcy/twist.hpp"

using namespace wpcy;

namespace {

uint32_t eval_all_plus(const FiniteField& F, const Hypersurface& h,
                       const std::vector<uint32_t>& x) {
  uint32_t s = 0;
  for (const auto& m : base_monomials(h)) {
    uint32_t t = 1;
    for (size_t i = 0; i < m.size(); ++i) t = F.mul(t, F.pow(x[i], m[i]));
    s = F.add(s, t);
  }
  return s;
}

uint32_t eval_image(const FiniteField& F, const TwistData& T,
                    const std::vector<uint32_t>& z) {
  uint32_t s = 0;
  for (const auto& [sign, m] : T.equation) {
    uint32_t t = 1;
    for (size_t i = 0; i < m.size(); ++i) t = F.mul(t, F.pow(z[i], m[i]));
    s = F.add(s, sign > 0 ? t : F.neg(t));
  }
  return s;
}

std::vector<std::vector<uint32_t>> cone_points(const FiniteField& F,
                                               const Hypersurface& h) {
  size_t n = h.weight.entries.size();
  std::vector<std::vector<uint32_t>> pts;
  std::vector<uint32_t> x(n, 0);
  while (true) {
    size_t i = 0;
    while (i < n && x[i] == F.q() - 1) x[i++] = 0;
    if (i == n) break;
    ++x[i];
    if (eval_all_plus(F, h, x) == 0) pts.push_back(x);
  }
  return pts;
}

ErrorCode thrown_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code;
  }
  return ErrorCode::BadInput;  // placeholder; callers assert a specific code
}

}  // namespace

TEST_CASE("composing the degree-6 curve with the cubic fiber") {
  auto C = make_diagonal({{2, 1, 1}}, 6);
  auto E1 = make_diagonal({{1, 1, 1}}, 3);
  auto [X, T] = twist_compose(C, E1, 3);

  CHECK(X == make_diagonal({{1, 1, 2, 2}}, 6));
  CHECK(T.w0 == 2);
  CHECK(T.v0 == 1);
  CHECK(T.s0 == 0);
  CHECK(T.s == 1);
  CHECK(T.t0 == 1);
  CHECK(T.t == 1);
  CHECK(T.image_weight == Weight{{1, 1, 2, 2}});
  CHECK(T.image_degree == 6);
  CHECK(T.image_degree == T.v0 * 6);   // v0 * deg f
  CHECK(T.image_degree == T.w0 * 3);   // w0 * deg g
  std::vector<std::pair<int, std::vector<i64>>> expect = {
      {+1, {6, 0, 0, 0}},
      {+1, {0, 6, 0, 0}},
      {-1, {0, 0, 3, 0}},
      {-1, {0, 0, 0, 3}}};
  CHECK(T.equation == expect);
  CHECK(T.image_perm == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("composing a chained curve yields the chained surface") {
  auto C = make_quasi_diagonal({{5, 6, 11}}, 66, {12, 11, 6});
  auto E3 = make_diagonal({{1, 2, 3}}, 6);
  auto [X, T] = twist_compose(C, E3, 6);

  CHECK(T.index1 == 2);  // the pure power of exponent 6 sits at slot 2
  CHECK(T.index2 == 0);
  CHECK(T.w0 == 11);
  CHECK(T.v0 == 1);
  CHECK(T.image_weight == Weight{{5, 6, 22, 33}});
  CHECK(X == make_quasi_diagonal({{5, 6, 22, 33}}, 66, {12, 11, 3, 2}));
}

TEST_CASE("composing a chained curve with a weight-2 fiber coordinate") {
  auto C = make_quasi_diagonal({{2, 1, 3}}, 45, {22, 45, 15});
  auto Y10 = make_diagonal({{2, 3, 10, 15}}, 30);
  auto [X, T] = twist_compose(C, Y10, 15);

  CHECK(T.w0 == 3);
  CHECK(T.v0 == 2);
  CHECK(T.s0 == 1);
  CHECK(T.s == 2);
  CHECK(T.t0 == 1);
  CHECK(T.t == 1);
  CHECK(T.image_weight == Weight{{4, 2, 9, 30, 45}});
  CHECK(T.image_degree == 90);
  CHECK(X ==
        make_quasi_diagonal({{4, 2, 9, 30, 45}}, 90, {22, 45, 10, 3, 2}));
  CHECK(T.image_perm == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("shared distinguished weight factor is rejected") {
  auto V = make_diagonal({{2, 1, 1}}, 4);
  CHECK(thrown_code([&] { twist_compose(V, V, 2); }) ==
        ErrorCode::GcdObstruction);
}

TEST_CASE("solved exponents are unique in their ranges") {
  for (auto [w0, v0] : std::vector<std::pair<i64, i64>>{
           {2, 1}, {5, 2}, {11, 3}, {7, 5}, {3, 2}, {11, 2}}) {
    int ns = 0, nt = 0;
    for (i64 c = 0; c < v0; ++c) {
      if ((c * w0 + 1) % v0 == 0) ++ns;
    }
    for (i64 c = 0; c < w0; ++c) {
      if ((c * v0 + 1) % w0 == 0) ++nt;
    }
    CHECK(ns == 1);
    CHECK(nt == 1);
  }
}

TEST_CASE("evaluation lands on the image equation over small fields") {
  auto C1 = make_diagonal({{2, 1, 1}}, 6);
  auto E1 = make_diagonal({{1, 1, 1}}, 3);
  auto C2 = make_quasi_diagonal({{5, 6, 11}}, 66, {12, 11, 6});
  auto E3 = make_diagonal({{1, 2, 3}}, 6);

  struct Case {
    Hypersurface left, right;
    i64 ell;
  };
  std::vector<Case> cases = {{C1, E1, 3}, {C2, E3, 6}};
  for (const auto& c : cases) {
    auto [X, T] = twist_compose(c.left, c.right, c.ell);
    for (i64 p : {7, 13}) {
      FiniteField F(p, 1);
      auto left_pts = cone_points(F, c.left);
      auto right_pts = cone_points(F, c.right);
      REQUIRE(!left_pts.empty());
      REQUIRE(!right_pts.empty());
      i64 boundary = 0;
      for (const auto& x : left_pts) {
        for (const auto& y : right_pts) {
          if (x[T.index1] == 0 && y[T.index2] == 0) continue;
          if (x[T.index1] == 0 || y[T.index2] == 0) ++boundary;
          auto z = twist_map_eval(F, T, x, y);
          CHECK(eval_image(F, T, z) == 0);
        }
      }
      CHECK(boundary > 0);  // both branches of the map were exercised
    }
  }
}

TEST_CASE("evaluation outside the domain") {
  auto C = make_diagonal({{2, 1, 1}}, 6);
  auto E1 = make_diagonal({{1, 1, 1}}, 3);
  auto [X, T] = twist_compose(C, E1, 3);
  FiniteField F(7, 1);
  CHECK(thrown_code([&] {
          twist_map_eval(F, T, {0, 1, 3}, {0, 1, 3});
        }) == ErrorCode::Undefined);
}
