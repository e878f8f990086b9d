#pragma once

#include <string>
#include <vector>

#include "symstab/series.hpp"

namespace symstab {

// Integer polynomial, ascending coefficients, no trailing zeros; {} is zero.
using Poly = std::vector<Int>;

int poly_degree(const Poly& p);  // -1 for the zero polynomial
void poly_trim(Poly& p);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
// exact division; throws input_error if the remainder is nonzero
Poly poly_divexact(const Poly& a, const Poly& b);
// primitive gcd (positive leading coefficient) times gcd of the contents
Poly poly_gcd(Poly a, Poly b);
Int poly_eval(const Poly& p, const Int& x);
std::string poly_to_string(const Poly& p);

// A zeta function as a reduced rational function over Z.
struct RationalZeta {
  Int q;
  Poly num, den;  // reduced; den has positive nonzero constant term
};

// Reduces and validates; throws input_error on zero denominator constant term.
RationalZeta make_zeta(Int q, Poly num, Poly den);

struct PointCounts {
  Int q;
  std::vector<Int> counts;  // counts[m-1] = N_m
};

// Symmetric-power point counts c_0..c_N from N_1..N_M via the recursion
// n c_n = sum_{m<=n} N_m c_{n-m}; every c_n must come out a nonnegative
// integer or input_error is thrown.
std::vector<Int> sym_counts_from_counts(const PointCounts& P, int N);

// Exact inverse of the recursion; throws input_error on negative N_m.
PointCounts counts_from_sym_counts(const std::vector<Int>& c, Int q);

// Maclaurin expansion through order N by exact division.
PowerSeries expand_zeta(const RationalZeta& Z, int N);

// Frobenius eigenvalue data: per cohomological degree, monic integer
// polynomials whose root multisets are the eigenvalues in that degree.
struct EigenvalueData {
  std::vector<std::vector<Poly>> degrees;
};

// N_m as the signed sum over degrees of the m-th power sums of the
// eigenvalues, via Newton's identities; each must be a nonnegative integer.
PointCounts lefschetz_counts(const EigenvalueData& E, Int q, int M);

// (1-t) * Z in reduced form; asserts its coefficients are the first finite
// differences of the expansion of Z.
RationalZeta finite_difference_series(const RationalZeta& Z);

struct ConnectednessReport {
  int multiplicity = 0;  // of (1-t) in the denominator
  bool connected = false;
};
ConnectednessReport connectedness_check(const RationalZeta& Z);

// Certified growth bound for the first finite differences.
struct PoleBoundRow {
  int n;
  Rat c, delta, bound;  // |delta_n| <= C * beta^{n-1} claimed for n >= 1
};
struct PoleBoundReport {
  Rat beta_lo, beta_hi;  // certified enclosure of the largest inverse root
  bool beta_exact = false;
  Rat C;
  std::vector<PoleBoundRow> rows;
  bool pass = false;
};
// Requires (1-t)-multiplicity exactly 1 in the denominator.
PoleBoundReport second_pole_bound(const RationalZeta& Z, int N);

// All roots of p (rational coefficients, ascending) strictly inside |z| < r.
bool roots_strictly_inside(std::vector<Rat> p, const Rat& r);

}  // namespace symstab
