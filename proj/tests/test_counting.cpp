#include <cstdlib>

#include "doctest.h"
#include "oracles.hpp"
#include "wpcy/counting.hpp"
#include "wpcy/tables.hpp"

using namespace wpcy;

namespace {

// Bridge a hypersurface (plus parameter values) to the oracle monomial list.
std::vector<oracle::Monomial> oracle_monomials(const Hypersurface& h,
                                               const ParamMap& params = {}) {
  std::vector<oracle::Monomial> mons;
  for (const auto& e : base_monomials(h)) mons.push_back({e, 1});
  for (const auto& t : h.deformation) mons.push_back({t.monomial, params.at(t.param)});
  return mons;
}

}  // namespace

TEST_CASE("plane cubic point counts over small prime fields") {
  const Hypersurface e1 = elliptic_curves()[0].model;
  FiniteField F7(7, 1), F5(5, 1);
  CHECK(count_points(e1, F7, 1) == 9);
  CHECK(count_points(e1, F7, 2) == 63);  // trace -1 over F_7, so 1+49+13
  CHECK(count_points(e1, F5, 1) == 6);   // cubing is a bijection mod 5
  CHECK(count_points(e1, F5, 2) == 36);
  CHECK(count_points(e1, F7, 2) ==
        oracle::projective_count(oracle::Field(7, 2), 3,
                                 oracle_monomials(e1)));
}

TEST_CASE("a degree-zero equation counts the whole weighted space") {
  Hypersurface space;
  space.weight = Weight{{1, 1, 2}};
  space.degree = 0;
  CHECK(count_points(space, FiniteField(5, 1), 1) == 31);
  CHECK(count_points(space, FiniteField(7, 1), 1) == 57);
  CHECK(count_points(space, FiniteField(2, 2), 1) == 21);  // q = 4
  CHECK(count_points(space, FiniteField(5, 1), 2) == 651);  // q = 25
}

TEST_CASE("counts agree with the oracle across the fiber list") {
  for (const EllipticCurve& e : elliptic_curves()) {
    for (i64 p : {5, 7, 11, 13}) {
      oracle::Field G1(p, 1), G2(p, 2);
      FiniteField F(p, 1);
      CHECK(count_points(e.model, F, 1) ==
            oracle::projective_count_diagonal(G1, e.model.exponents));
      CHECK(count_points(e.model, F, 2) ==
            oracle::projective_count_diagonal(G2, e.model.exponents));
    }
  }
}

TEST_CASE("quasi-diagonal and deformed counts agree with the oracle") {
  const Hypersurface y11 = k3_fibers()[5].model;  // x0^12 x1 + x1^11 + x2^3 + x3^2
  FiniteField F13(13, 1);
  CHECK(count_points(y11, F13, 1) ==
        oracle::projective_count_qd(oracle::Field(13, 1), y11.exponents));

  // cubic pencil member x^3 + y^3 + z^3 + 2xyz
  Hypersurface pencil = make_deformed(Weight{{1, 1, 1}}, 3, {{"psi", {1, 1, 1}}});
  ParamMap params{{"psi", 2}};
  FiniteField F7(7, 1);
  i64 direct = oracle::projective_count(oracle::Field(7, 1), 3,
                                        oracle_monomials(pencil, params));
  CHECK(count_points(pencil, F7, 1, params) == direct);
  CHECK(count_points(pencil, F7, 2, params) ==
        oracle::projective_count(oracle::Field(7, 2), 3,
                                 oracle_monomials(pencil, params)));
  CHECK_THROWS_AS(count_points(pencil, F7, 1), Error);  // unbound parameter
}

TEST_CASE("thread count never changes an answer") {
  const Hypersurface k3 = make_diagonal(Weight{{1, 1, 2, 2}}, 6);
  FiniteField F7(7, 1);
  i64 base = count_points(k3, F7, 1);
  for (int threads : {2, 3, 4, 8}) CHECK(count_points(k3, F7, 1, {}, threads) == base);
  CHECK(base == oracle::projective_count_diagonal(oracle::Field(7, 1), k3.exponents));
}

TEST_CASE("the configured bound cuts off large cones") {
  const Hypersurface e1 = elliptic_curves()[0].model;
  setenv("WPCY_COUNT_BOUND", "100", 1);
  try {
    count_points(e1, FiniteField(7, 1), 2);  // cone 49^3 above the bound
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.code == ErrorCode::BoundExceeded);
  }
  unsetenv("WPCY_COUNT_BOUND");
  CHECK(count_points(e1, FiniteField(7, 1), 2) == 63);
  setenv("WPCY_COUNT_BOUND", "junk", 1);
  CHECK_THROWS_AS(count_bound(), Error);
  unsetenv("WPCY_COUNT_BOUND");
}

TEST_CASE("affine diagonal counts through character sums") {
  // 1 + x^3 + y^3 = 0 in the affine plane over F_7
  oracle::Field G7(7, 1);
  FiniteField F7(7, 1);
  CHECK(count_affine_diagonal({1, 1, 1}, {3, 3}, F7) == 6);
  CHECK(oracle::affine_diagonal_count(G7, {1, 1, 1}, {3, 3}) == 6);

  // 1 + x^2 = 0 over F_5: the two square roots of -1
  FiniteField F5(5, 1);
  CHECK(count_affine_diagonal({1, 1}, {2}, F5) == 2);
  CHECK(oracle::affine_diagonal_count(oracle::Field(5, 1), {1, 1}, {2}) == 2);

  // three variables over F_13 with mixed exponents and coefficients
  oracle::Field G13(13, 1);
  FiniteField F13(13, 1);
  std::vector<i64> m{3, 4, 6};
  for (std::vector<i64> b :
       {std::vector<i64>{1, 1, 1, 1}, {2, 5, 7, 11}, {3, 1, 12, 4}, {6, 6, 2, 9}}) {
    CHECK(count_affine_diagonal(b, m, F13) ==
          oracle::affine_diagonal_count(G13, b, m));
  }

  // exponent pairs with sign-carrying a_0 = 0 terms, swept over coefficients
  for (std::vector<i64> m2 : {std::vector<i64>{2, 3}, {4, 3}, {2, 2}}) {
    for (i64 b0 : {1, 2, 3}) {
      for (i64 b1 : {1, 5}) {
        std::vector<i64> b{b0, b1, 4};
        CHECK(count_affine_diagonal(b, m2, F13) ==
              oracle::affine_diagonal_count(G13, b, m2));
      }
    }
  }

  CHECK_THROWS_AS(count_affine_diagonal({1, 1}, {5}, F7), Error);  // 7 != 1 mod 5
}

TEST_CASE("exponent reduction preserves counts over the given field") {
  const auto& curves = elliptic_curves();
  FiniteField F5(5, 1), F7(7, 1), F11(11, 1);

  Hypersurface line = reduce_degree(curves[0].model, F5);
  CHECK(line.degree == 1);
  CHECK(line.exponents == std::vector<i64>{1, 1, 1});
  CHECK(count_points(line, F5, 1) == 6);
  CHECK(count_points(line, F5, 1) == count_points(curves[0].model, F5, 1));

  Hypersurface conic = reduce_degree(curves[1].model, F7);
  CHECK(conic.degree == 2);
  CHECK(conic.exponents == std::vector<i64>{2, 2, 2});
  CHECK(count_points(conic, F7, 1) == 8);
  CHECK(count_points(conic, F7, 1) == count_points(curves[1].model, F7, 1));

  Hypersurface k3 = make_diagonal(Weight{{1, 1, 2, 2}}, 6);
  Hypersurface red = reduce_degree(k3, F11);
  CHECK(red.degree == 2);  // gcd of each exponent with 10
  CHECK(count_points(red, F11, 1) == count_points(k3, F11, 1));
  CHECK(count_points(k3, F11, 1) ==
        oracle::projective_count_diagonal(oracle::Field(11, 1), k3.exponents));

  // reduction is tied to the field: q = 1 mod d keeps the model as is
  CHECK(reduce_degree(curves[0].model, F7) == curves[0].model);
  CHECK_THROWS_AS(reduce_degree(curves[0].model, FiniteField(3, 1)), Error);
}
