#include "doctest.h"
#include "wpcy/cyclotomic.hpp"

using namespace wpcy;

namespace {
std::vector<Int> ints(std::vector<long long> v) {
  return std::vector<Int>(v.begin(), v.end());
}
}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == ints({-1, 1}));
  CHECK(cyclotomic_polynomial(2) == ints({1, 1}));
  CHECK(cyclotomic_polynomial(3) == ints({1, 1, 1}));
  CHECK(cyclotomic_polynomial(4) == ints({1, 0, 1}));
  CHECK(cyclotomic_polynomial(6) == ints({1, -1, 1}));
  CHECK(cyclotomic_polynomial(9) == ints({1, 0, 0, 1, 0, 0, 1}));
  CHECK(cyclotomic_polynomial(12) == ints({1, 0, -1, 0, 1}));
  CHECK(cyclotomic_polynomial(105).size() == 49);  // first index with a +-2
}

TEST_CASE("root relations") {
  auto z6 = CycInt::root_power(6, 1);
  CHECK(z6 * z6 == z6 - CycInt::integer(6, 1));  // zeta_6^2 = zeta_6 - 1
  CHECK(z6.pow(6) == CycInt::integer(6, 1));
  CHECK(z6.pow(3) == CycInt::integer(6, -1));

  auto z3 = CycInt::root_power(3, 1);
  CHECK(CycInt::integer(3, 1) + z3 + z3 * z3 == CycInt::integer(3, 0));

  auto z5 = CycInt::root_power(5, 1);
  auto s = z5 + z5.pow(2) + z5.pow(3) + z5.pow(4);
  CHECK(s.is_integer());
  CHECK(s.as_integer() == -1);
  CHECK(z5 != z5.pow(2));
}

TEST_CASE("conjugation and galois action") {
  auto z = CycInt::root_power(12, 5);
  CHECK(z * z.conj() == CycInt::integer(12, 1));
  CHECK(CycInt::root_power(6, 1).galois(5) == CycInt::root_power(6, 1).conj());

  // |1 + zeta_3|^2 = 1
  auto u = CycInt::integer(3, 1) + CycInt::root_power(3, 1);
  CHECK((u * u.conj()).as_integer() == 1);

  // |1 + zeta_5|^2 = 2 + zeta + zeta^4, not an integer
  auto v = CycInt::integer(5, 1) + CycInt::root_power(5, 1);
  CHECK_FALSE((v * v.conj()).is_integer());
}
