#include "symstab/combinatorics.hpp"

#include <vector>

#include "symstab/simplicial.hpp"  // input_error

namespace symstab {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Int gcd_binomials(std::int64_t n) {
  if (n < 2) throw input_error("gcd_binomials requires n >= 2");
  // the gcd divides C(n,1) = n, so only primes dividing n can contribute
  std::vector<std::int64_t> primes;
  std::int64_t m = n;
  for (std::int64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      primes.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) primes.push_back(m);

  Int result = 1;
  for (const std::int64_t p : primes) {
    // v_p(C(n,i)) = (s(i) + s(n-i) - s(n)) / (p-1), s = base-p digit sum
    std::vector<std::int32_t> s(n + 1);
    for (std::int64_t i = 1; i <= n; ++i)
      s[i] = s[i / p] + static_cast<std::int32_t>(i % p);
    std::int64_t vmin = -1;
    for (std::int64_t i = 1; 2 * i <= n; ++i) {
      const std::int64_t v = (s[i] + s[n - i] - s[n]) / (p - 1);
      if (vmin < 0 || v < vmin) vmin = v;
      if (vmin == 0) break;
    }
    Int f = 1;
    for (std::int64_t j = 0; j < vmin; ++j) f *= p;
    result *= f;
  }

  // dichotomy: p for prime powers n = p^k, and 1 otherwise
  const Int expected = primes.size() == 1 ? Int(primes[0]) : Int(1);
  bool prime_power = primes.size() == 1;
  if (prime_power) {
    std::int64_t t = n;
    while (t % primes[0] == 0) t /= primes[0];
    prime_power = t == 1;
  }
  if (result != (prime_power ? expected : Int(1)))
    throw std::logic_error("binomial gcd dichotomy failed at n = " +
                           std::to_string(n));
  return result;
}

namespace {

// val_p(m!) by the Legendre sum
Int legendre(Int m, std::int64_t p) {
  Int v = 0;
  while (m > 0) {
    m /= p;
    v += m;
  }
  return v;
}

Int factorial(const Int& m) {
  Int r = 1;
  for (Int i = 2; i <= m; ++i) r *= i;
  return r;
}

}  // namespace

ValpReport valp_prime_power_factorial(std::int64_t p, int k) {
  if (!is_prime(p)) throw input_error("valp requires a prime p");
  if (k < 0) throw input_error("valp requires k >= 0");
  Int pk = 1;
  for (int i = 0; i < k; ++i) pk *= p;
  ValpReport R;
  R.valuation = legendre(pk, p);
  R.closed_form = (pk - 1) / (p - 1);
  if (R.valuation != R.closed_form)
    throw std::logic_error("Legendre valuation disagrees with (p^k-1)/(p-1)");
  R.coprime = true;
  if (k >= 1) {
    // val_p of p^k! / (p! * (p^{k-1}!)^p) must vanish
    const Int v = R.valuation - legendre(Int(p), p) - Int(p) * legendre(pk / p, p);
    R.coprime = v == 0;
    if (pk <= 512) {
      // small cases: evaluate the quotient directly as a cross-check
      const Int direct =
          factorial(pk) / (factorial(Int(p)) * pow(factorial(pk / p),
                                                   static_cast<unsigned>(p)));
      if ((direct % p == 0) == R.coprime)
        throw std::logic_error("coprimality cross-check failed");
    }
  }
  return R;
}

}  // namespace symstab
