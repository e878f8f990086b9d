#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "symstab/simplicial.hpp"

namespace symstab {

// Normalized chain complex: one generator per nondegenerate simplex,
// boundaries with degenerate faces dropped. boundaries[d] maps C_d -> C_{d-1}
// (d >= 1), stored as sparse columns of (row, coefficient) pairs sorted by row.
struct ChainComplex {
  std::vector<std::int64_t> ranks;
  std::vector<std::vector<std::vector<std::pair<std::int32_t, std::int64_t>>>>
      boundaries;

  int dims() const { return static_cast<int>(ranks.size()) - 1; }
};

ChainComplex normalized_chains(const SimplicialSet& X, bool parallel = true);

// Throws std::logic_error if the composite of consecutive boundaries is
// nonzero anywhere.
void check_boundary_squares_to_zero(const ChainComplex& C);

// Alternating sum of the chain ranks.
std::int64_t euler_characteristic(const ChainComplex& C);

// Chain map induced by a simplicial map on normalized chains: a nondegenerate
// simplex goes to its image if that is nondegenerate and to zero otherwise.
// cols[d][idx] is empty (zero) or the single pair (target index, +1).
struct ChainMap {
  std::vector<std::vector<std::vector<std::pair<std::int32_t, std::int64_t>>>>
      cols;
};

ChainMap chain_map(const SimplicialMap& f);

}  // namespace symstab
