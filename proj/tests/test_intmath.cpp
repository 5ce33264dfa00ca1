#include "doctest.h"
#include "wpcy/intmath.hpp"

using namespace wpcy;

TEST_CASE("modular helpers") {
  CHECK(mod_norm(-7, 5) == 3);
  CHECK(pow_mod(3, 6, 2401) == 729);
  CHECK(inv_mod(5, 11) == 9);
  CHECK(inv_mod(3, 10) == 7);
  CHECK(inv_mod(5, 22) == 9);
  i64 x, y;
  CHECK(ext_gcd(240, 46, x, y) == 2);
  CHECK(240 * x + 46 * y == 2);
}

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(19));
  CHECK(is_prime(361 - 2));  // 359
  CHECK_FALSE(is_prime(361));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(1000003));
}

TEST_CASE("factors and orders") {
  CHECK(prime_factors(360) == std::vector<i64>{2, 3, 5});
  CHECK(prime_factors(2401) == std::vector<i64>{7});
  CHECK(mult_order(3, 7) == 6);
  CHECK(mult_order(2, 7) == 3);
  CHECK(mult_order(19, 9) == 1);  // 19 = 1 mod 9
  CHECK(gcd_all({10, 12, 44}) == 2);
  CHECK(lcm_all({12, 11, 3, 2}) == 132);
}
