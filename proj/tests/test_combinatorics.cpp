#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "symstab/combinatorics.hpp"
#include "symstab/simplicial.hpp"

using namespace symstab;

namespace {

// direct gcd of C(n,1)..C(n,n-1) for small n
Int direct_gcd(std::int64_t n) {
  std::vector<Int> row{1};
  for (std::int64_t r = 1; r <= n; ++r) {
    std::vector<Int> next(r + 1, 1);
    for (std::int64_t i = 1; i < r; ++i) next[i] = row[i - 1] + row[i];
    row = std::move(next);
  }
  Int g = 0;
  for (std::int64_t i = 1; i < n; ++i) g = gcd(g, row[i]);
  return g;
}

}  // namespace

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("binomial gcd matches a direct computation for small n") {
  for (std::int64_t n = 2; n <= 60; ++n)
    CHECK(gcd_binomials(n) == direct_gcd(n));
}

TEST_CASE("binomial gcd dichotomy up to 10000") {
  // specific spot checks
  CHECK(gcd_binomials(8) == 2);
  CHECK(gcd_binomials(9) == 3);
  CHECK(gcd_binomials(12) == 1);
  CHECK(gcd_binomials(35) == 1);
  CHECK(gcd_binomials(9973) == 9973);  // prime

  // gcd_binomials itself asserts the dichotomy; a throw fails the test
  for (std::int64_t n = 2; n <= 10000; ++n) {
    const Int g = gcd_binomials(n);
    CHECK((g == 1 || is_prime(static_cast<std::int64_t>(g))));
  }
  CHECK_THROWS_AS(gcd_binomials(1), input_error);
}

TEST_CASE("p-adic valuation of prime power factorials") {
  for (std::int64_t p : {2, 3, 5}) {
    for (int k = 0; k <= 6; ++k) {
      ValpReport R = valp_prime_power_factorial(p, k);
      Int expect = 0, pk = 1;
      for (int i = 0; i < k; ++i) pk *= p;
      expect = (pk - 1) / (p - 1);
      CHECK(R.valuation == expect);
      CHECK(R.closed_form == expect);
      CHECK(R.coprime);
    }
  }
  CHECK_THROWS_AS(valp_prime_power_factorial(4, 2), input_error);
  CHECK_THROWS_AS(valp_prime_power_factorial(3, -1), input_error);
}
