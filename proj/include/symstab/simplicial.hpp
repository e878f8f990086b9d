#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "symstab/word.hpp"

namespace symstab {

struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct budget_error : std::runtime_error {
  std::size_t requested = 0, cap = 0;
  budget_error(std::size_t requested, std::size_t cap)
      : std::runtime_error("simplex budget exceeded: need " +
                           std::to_string(requested) + " > cap " +
                           std::to_string(cap)),
        requested(requested),
        cap(cap) {}
};

// Construction options shared by the product/power/quotient builders.
struct BuildOptions {
  std::size_t budget = 200000;  // cap on nondegenerate simplices per complex
  int dim_cap = -1;             // truncate above this dimension (-1 = full)
  bool parallel = true;         // OpenMP kernels; serial path is the reference
};

// A simplex in normal form: s_word applied to nondegenerate simplex `index`
// of the ambient complex. The dimension of the underlying nondegenerate
// simplex is implicit (m - word_length(word) for an m-simplex).
struct SimplexRef {
  std::int32_t index = 0;
  Word word = 0;
  friend bool operator==(const SimplexRef&, const SimplexRef&) = default;
};

// A finite pointed simplicial set stored by nondegenerate simplices.
struct SimplicialSet {
  // faces[d] has counts[d]*(d+1) entries; entry for (idx, i) is the i-th face
  // of nondegenerate d-simplex idx, in normal form.
  std::vector<std::int64_t> counts;
  std::vector<std::vector<SimplexRef>> faces;
  std::int32_t basepoint = 0;

  int dims() const { return static_cast<int>(counts.size()) - 1; }
  std::int64_t total_nondegenerate() const;

  SimplexRef face(int d, std::int32_t idx, int i) const {
    return faces[d][static_cast<std::size_t>(idx) * (d + 1) + i];
  }
  // d_i of a (possibly degenerate) m-simplex, in normal form.
  SimplexRef simplex_face(int m, SimplexRef s, int i) const;

  friend bool operator==(const SimplicialSet&, const SimplicialSet&) = default;
};

using SetPtr = std::shared_ptr<const SimplicialSet>;

// Checks the face-face simplicial identities d_i d_j = d_{j-1} d_i (i < j) on
// every nondegenerate simplex, plus basepoint validity. Throws on failure.
void validate(const SimplicialSet& X);

// A pointed simplicial map, stored on nondegenerate simplices of the source.
struct SimplicialMap {
  SetPtr source, target;
  std::vector<std::vector<SimplexRef>> images;  // images[d][idx]

  SimplexRef apply(int m, SimplexRef s) const {
    const int p = m - word_length(s.word);
    SimplexRef t = images[p][s.index];
    return {t.index, word_compose(s.word, t.word)};
  }
};

// Checks that f commutes with all face operators and preserves the basepoint.
void validate(const SimplicialMap& f);

SimplicialMap identity_map(SetPtr X);
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);
bool maps_equal(const SimplicialMap& f, const SimplicialMap& g);

// A finite group acting by pointed automorphisms.
struct GroupAction {
  std::vector<std::vector<int>> permutations;  // of the abstract index set
  std::vector<SimplicialMap> maps;             // one automorphism per element
};

// Spot-checks the action: identity element, composition table (all pairs for
// groups of order <= 24), automorphisms valid.
void validate_action(const SimplicialSet& X, const GroupAction& A);

// ---- models ---------------------------------------------------------------

SetPtr point_model();
SetPtr circle_model(int vertices);              // v >= 3
SetPtr sphere_model(int k);                     // boundary of the (k+1)-simplex
// Simplicial set generated by the simplicial complex spanned by the given
// simplices (vertex-index lists). Vertices are renumbered 0..V-1 in sorted
// order of the labels that occur.
SetPtr complex_model(const std::vector<std::vector<int>>& top_simplices,
                     int basepoint_vertex);

// ---- products, powers, symmetric powers -----------------------------------

// A component of a product simplex: an m-simplex of one factor.
// Encoded into one machine word so tuples order and hash cheaply.
inline std::uint64_t encode_component(int dim, std::int32_t idx, Word word) {
  return (static_cast<std::uint64_t>(dim) << 56) |
         (static_cast<std::uint64_t>(static_cast<std::uint32_t>(idx)) << 32) |
         word;
}
inline int component_dim(std::uint64_t c) { return static_cast<int>(c >> 56); }
inline std::int32_t component_index(std::uint64_t c) {
  return static_cast<std::int32_t>((c >> 32) & 0xFFFFFF);
}
inline Word component_word(std::uint64_t c) {
  return static_cast<Word>(c & 0xFFFFFFFFu);
}

// Per-dimension table of product simplices: `arity` components per tuple,
// flat storage, sorted lexicographically.
struct TupleTable {
  int arity = 1;
  std::vector<std::uint64_t> flat;
  std::int64_t size() const {
    return static_cast<std::int64_t>(flat.size()) / arity;
  }
  const std::uint64_t* tuple(std::int64_t i) const { return flat.data() + i * arity; }
  std::int64_t find(const std::uint64_t* key) const;  // -1 if absent
};

// A product-like complex (product, power, or symmetric power) together with
// the tuple labels of its nondegenerate simplices.
struct ProductComplex {
  SetPtr set;
  int arity = 1;
  std::vector<TupleTable> tables;  // per dimension
};

// Categorical product of simplicial sets.
ProductComplex product(SetPtr X, SetPtr Y, const BuildOptions& opt = {});

// n-fold power X^n with the S_n permutation action on the factors.
struct PowerResult {
  ProductComplex power;
  GroupAction action;
};
PowerResult power(SetPtr X, int n, const BuildOptions& opt = {});

// Degreewise orbit quotient by a group of automorphisms, with projection.
// Orbit representatives are the least simplices in the fixed total order, so
// the output is independent of enumeration order.
struct QuotientResult {
  SetPtr set;
  SimplicialMap projection;
};
QuotientResult quotient(SetPtr X, const GroupAction& A);

// Sym^n X = X^n / S_n, built directly on canonical (sorted) orbit tuples.
// Bit-identical to quotient(power(X, n)) but never materializes X^n.
// n = 0 yields the one-point complex.
ProductComplex sym_power(SetPtr X, int n, const BuildOptions& opt = {});

// Composite projection q_n : X^n -> Sym^n X for a matching power/sym pair.
SimplicialMap sym_projection(const ProductComplex& XN, const ProductComplex& SN);

// alpha_n : Sym^n X -> Sym^{n+1} X, insertion of one extra basepoint copy.
SimplicialMap stabilization_map(SetPtr X, const ProductComplex& SN,
                                const ProductComplex& SN1);

// ---- subcomplexes and collapse ---------------------------------------------

// Membership flags per dimension for a subcomplex (closed under faces).
struct Subcomplex {
  std::vector<std::vector<std::uint8_t>> member;  // member[d][idx]
};

// Smallest subcomplex containing the given simplices.
Subcomplex subcomplex_closure(const SimplicialSet& X,
                              const std::vector<std::pair<int, std::int32_t>>& gens);

// Nondegenerate simplices hit by f (the image subcomplex).
Subcomplex image_subcomplex(const SimplicialMap& f);

// Throws input_error unless A is face-closed and contains the basepoint.
void validate_subcomplex(const SimplicialSet& X, const Subcomplex& A);

// X/A with A collapsed to the basepoint (new vertex 0).
SetPtr collapse(SetPtr X, const Subcomplex& A);

}  // namespace symstab
