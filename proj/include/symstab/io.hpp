#pragma once

#include <optional>
#include <string>

#include "symstab/homology.hpp"
#include "symstab/zeta.hpp"

namespace symstab {

// ---- documents --------------------------------------------------------------

// A complex document: `name`, `basepoint` (vertex index) and `top_simplices`
// (vertex-index lists); the complex is the simplicial set generated by the
// simplicial complex these span. Errors carry the file and field name.
struct ComplexDocument {
  std::string name;
  SetPtr set;
};
ComplexDocument load_complex(const std::string& path);

// A zeta document: `q`, `numerator`/`denominator` (ascending integer
// coefficient lists) and optional `eigenvalues` (per-degree lists of monic
// integer polynomials, ascending coefficients).
struct ZetaDocument {
  std::string name;
  RationalZeta zeta;
  bool has_eigenvalues = false;
  EigenvalueData eigenvalues;
};
ZetaDocument load_zeta(const std::string& path);

// ---- reports ----------------------------------------------------------------

// Per degree: betti, torsion, optionally generator cycles as
// simplex-coefficient lists.
std::string homology_report_text(const std::string& space, HomologyEngine& H,
                                 bool with_generators = false);
// One row per (space, degree): space,degree,betti,torsion.
std::string homology_report_csv(const std::string& space, HomologyEngine& H);

// ---- symmetric power cache ---------------------------------------------------

// Deterministic serialization of a product-like complex (set plus tuple
// tables); load validates and returns nullopt on any corruption.
std::string serialize_product(const ProductComplex& P);
std::optional<ProductComplex> deserialize_product(const std::string& text);

// Content hash (FNV-1a 64) of the build inputs: the serialized base complex
// and the construction parameters.
std::uint64_t sym_cache_key(const SimplicialSet& X, int n, int dim_cap);

// Default cache directory: $SYMSTAB_CACHE_DIR if set, else empty (disabled).
std::string default_cache_dir();

std::optional<ProductComplex> cache_lookup(const std::string& dir,
                                           std::uint64_t key);
void cache_store(const std::string& dir, std::uint64_t key,
                 const ProductComplex& P);

// sym_power through the cache; keyed by content, so renamed input files
// reuse work. A corrupt entry is recomputed and overwritten. Empty dir
// disables caching.
ProductComplex cached_sym_power(SetPtr X, int n, const BuildOptions& opt,
                                const std::string& cache_dir);

}  // namespace symstab
