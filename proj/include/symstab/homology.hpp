#pragma once

#include <map>
#include <vector>

#include "symstab/chain.hpp"
#include "symstab/snf.hpp"

namespace symstab {

// Sparse integer chain in the original (nondegenerate simplex) basis.
using Chain = std::map<std::int32_t, Int>;

struct HomologyGroup {
  std::int64_t betti = 0;
  std::vector<Int> torsion;       // invariant factors > 1, in divisibility order
  std::vector<Chain> generators;  // torsion generators first, then free ones
};

// Integral homology of a normalized chain complex. A discrete-gradient style
// unit-pivot elimination shrinks the complex to a small core while logging
// the basis changes, then Smith normal form presents each group. The logged
// transfers express generators in the original basis and give coordinates of
// arbitrary cycles, so induced maps can be evaluated on homology.
class HomologyEngine {
 public:
  explicit HomologyEngine(const SimplicialSet& X, bool parallel = true);
  explicit HomologyEngine(ChainComplex C);

  int dims() const { return orig_.dims(); }
  const HomologyGroup& group(int d);
  std::vector<std::int64_t> betti_numbers();

  // Coordinates of a cycle in the presentation of group(d): torsion
  // coordinates reduced into [0, d_i), free coordinates exact.
  // Throws input_error if the chain is not a cycle.
  std::vector<Int> coordinates(int d, const Chain& cycle);

 private:
  struct Step {
    int d;                 // degree of the eliminated column b
    std::int32_t a, b;     // paired generators: a in degree d-1, b in degree d
    int lam;               // +/-1 coefficient of a in the boundary of b
    std::vector<std::pair<std::int32_t, Int>> row_r;  // row a over other cols
    std::vector<std::pair<std::int32_t, Int>> col_s;  // column b below/above a
  };
  struct Presentation {
    bool ready = false;
    HomologyGroup group;
    std::vector<std::int32_t> core;           // alive generator indices
    std::vector<std::int64_t> core_pos;       // original index -> core slot
    SmithResult snf_K;                        // SNF of the core kernel basis
    DenseMatrix K;                            // kernel basis of core boundary
    SmithResult snf_B;                        // SNF of the relation matrix
    std::vector<std::int64_t> coord_rows;     // rows of U_B kept as coordinates
  };

  void reduce();
  Presentation& present(int d);
  Chain transfer_out(int d, const Chain& core_chain) const;  // core -> original
  Chain transfer_in(int d, Chain x) const;                   // original -> core

  ChainComplex orig_;
  bool reduced_ = false;
  std::vector<Step> steps_;
  std::vector<std::vector<char>> alive_;  // per degree, per generator
  // sparse boundary columns; after reduce() the alive ones form the core
  std::vector<std::vector<std::map<std::int32_t, Int>>> cols_;
  std::vector<Presentation> pres_;
};

// Map induced on H_d by a chain map, expressed in the generator coordinates
// of the two presentations, with exact surjectivity/injectivity verdicts.
struct InducedMap {
  DenseMatrix matrix;  // rows: target coordinates, cols: source generators
  bool surjective = false;
  bool injective = false;
  bool isomorphism() const { return surjective && injective; }
};

InducedMap induced_map(HomologyEngine& src, HomologyEngine& tgt,
                       const ChainMap& f, int d);

}  // namespace symstab
