#pragma once

#include <string>

#include "symstab/homology.hpp"
#include "symstab/series.hpp"

namespace symstab {

// One (n, k) cell of the stabilization verdict table: the map induced on H_k
// by alpha_n : Sym^n X -> Sym^{n+1} X, against the expected range
// (isomorphism for k < n, surjection at k = n).
struct StabilityCell {
  int n = 0, k = 0;
  std::int64_t betti_src = 0, betti_tgt = 0;
  std::vector<Int> torsion_src, torsion_tgt;
  bool iso = false, surj = false, pass = false;
};

struct StabilityReport {
  std::string space;
  std::vector<StabilityCell> cells;  // ordered by (n, k)
  bool pass = false;
};

// Verifies the stabilization range on H_k for 1 <= n <= n_max and
// k <= min(k_max, n). Requires connected X. Internally caps the construction
// dimension at k_max + 1, which leaves H_0..H_{k_max} intact.
StabilityReport check_stability(SetPtr X, const std::string& name, int n_max,
                                int k_max, const BuildOptions& opt = {});

std::string stability_csv(const StabilityReport& R);

// Reduced homology of the cofibre Sym^n S^k / Sym^{n-1} S^k in degrees 0..n;
// passes when it vanishes through degree n-1.
struct ConnectivityReport {
  int n = 0, k = 0;
  std::vector<std::int64_t> reduced_betti;       // degrees 0..n
  std::vector<std::vector<Int>> reduced_torsion;  // degrees 0..n
  bool pass = false;
};

ConnectivityReport check_lemma24(int n, int k, const BuildOptions& opt = {});

// H_1(Sym^n X) compared against H_1(X) as abstract groups for 2 <= n <=
// n_max, plus isomorphy of H_1(alpha_n) for 2 <= n < n_max.
struct H1Cell {
  int n = 0;
  std::int64_t betti = 0;
  std::vector<Int> torsion;
  bool groups_equal = false;
  bool alpha_checked = false;  // H_1(alpha_n) computed for this n
  bool alpha_iso = false;
  bool pass = false;
};

struct H1Report {
  std::string space;
  std::int64_t base_betti = 0;
  std::vector<Int> base_torsion;
  std::vector<H1Cell> cells;
  bool pass = false;
};

H1Report check_h1_abelianization(SetPtr X, const std::string& name, int n_max,
                                 const BuildOptions& opt = {});

// Euler characteristic with the chain-rank and Betti-number computations
// cross-asserted.
std::int64_t euler_characteristic_checked(const SimplicialSet& X);

// chi(Sym^n X) for n <= n_max against the coefficients of (1-t)^{-chi(X)}.
struct EulerGenReport {
  std::string space;
  std::int64_t chi = 0;
  std::vector<std::int64_t> lhs;  // chi(Sym^n X), n = 0..n_max
  std::vector<Int> rhs;           // series coefficients
  bool pass = false;
};

EulerGenReport euler_generating_check(SetPtr X, const std::string& name,
                                      int n_max, const BuildOptions& opt = {});

}  // namespace symstab
