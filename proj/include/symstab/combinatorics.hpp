#pragma once

#include <cstdint>

#include "symstab/snf.hpp"

namespace symstab {

bool is_prime(std::int64_t n);

// gcd of the binomial coefficients C(n,1), ..., C(n,n-1) for n >= 2, computed
// from exact p-adic valuations (base-p digit sums); asserts the dichotomy:
// the result is p when n is a power of the prime p and 1 otherwise.
Int gcd_binomials(std::int64_t n);

struct ValpReport {
  Int valuation;    // val_p(p^k !) by the Legendre sum
  Int closed_form;  // (p^k - 1)/(p - 1)
  bool coprime;     // p^k! / (p! * (p^{k-1}!)^p) is coprime to p (k >= 1)
};

// Throws input_error unless p is prime and k >= 0.
ValpReport valp_prime_power_factorial(std::int64_t p, int k);

}  // namespace symstab
