#include "symstab/chain.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace symstab {

ChainComplex normalized_chains(const SimplicialSet& X, bool parallel) {
  ChainComplex C;
  C.ranks = X.counts;
  C.boundaries.resize(X.counts.size());
  for (int d = 1; d <= X.dims(); ++d) {
    auto& cols = C.boundaries[d];
    cols.resize(X.counts[d]);
    const std::int64_t cnt = X.counts[d];
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel && cnt > 1024)
#endif
    for (std::int64_t idx = 0; idx < cnt; ++idx) {
      std::map<std::int32_t, std::int64_t> col;
      for (int i = 0; i <= d; ++i) {
        const SimplexRef f = X.face(d, static_cast<std::int32_t>(idx), i);
        if (f.word != 0) continue;  // degenerate face: zero in normalized chains
        col[f.index] += (i % 2 ? -1 : 1);
      }
      for (const auto& [row, v] : col)
        if (v != 0) cols[idx].push_back({row, v});
    }
  }
  return C;
}

void check_boundary_squares_to_zero(const ChainComplex& C) {
  for (int d = 2; d <= C.dims(); ++d) {
    for (std::int64_t idx = 0; idx < C.ranks[d]; ++idx) {
      std::map<std::int32_t, std::int64_t> acc;
      for (const auto& [mid, v] : C.boundaries[d][idx])
        for (const auto& [row, w] : C.boundaries[d - 1][mid]) acc[row] += v * w;
      for (const auto& [row, v] : acc)
        if (v != 0)
          throw std::logic_error("boundary does not square to zero at degree " +
                                 std::to_string(d));
    }
  }
}

std::int64_t euler_characteristic(const ChainComplex& C) {
  std::int64_t chi = 0;
  for (std::size_t d = 0; d < C.ranks.size(); ++d)
    chi += (d % 2 ? -1 : 1) * C.ranks[d];
  return chi;
}

ChainMap chain_map(const SimplicialMap& f) {
  ChainMap M;
  M.cols.resize(f.images.size());
  for (std::size_t d = 0; d < f.images.size(); ++d) {
    M.cols[d].resize(f.images[d].size());
    for (std::size_t idx = 0; idx < f.images[d].size(); ++idx) {
      const SimplexRef im = f.images[d][idx];
      if (im.word == 0) M.cols[d][idx].push_back({im.index, 1});
    }
  }
  return M;
}

}  // namespace symstab
