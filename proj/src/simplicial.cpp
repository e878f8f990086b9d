#include "symstab/simplicial.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace symstab {

std::int64_t SimplicialSet::total_nondegenerate() const {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

SimplexRef SimplicialSet::simplex_face(int m, SimplexRef s, int i) const {
  const FacePush r = push_face(i, s.word);
  if (r.cancelled) return {s.index, r.word};
  const int p = m - word_length(s.word);
  const SimplexRef f = face(p, s.index, r.face_index);
  return {f.index, word_compose(r.prefix, f.word)};
}

void validate(const SimplicialSet& X) {
  if (X.counts.empty() || X.counts[0] <= 0)
    throw input_error("simplicial set must have at least one vertex");
  if (X.basepoint < 0 || X.basepoint >= X.counts[0])
    throw input_error("basepoint out of range");
  if (X.faces.size() != X.counts.size())
    throw input_error("face table dimension mismatch");
  for (int d = 0; d <= X.dims(); ++d) {
    const std::size_t want = d == 0 ? 0 : static_cast<std::size_t>(X.counts[d]) * (d + 1);
    if (d > 0 && X.faces[d].size() != want)
      throw input_error("face table size mismatch in dimension " + std::to_string(d));
    if (d == 0) continue;
    for (std::int64_t idx = 0; idx < X.counts[d]; ++idx) {
      for (int i = 0; i <= d; ++i) {
        const SimplexRef f = X.face(d, static_cast<std::int32_t>(idx), i);
        const int td = d - 1 - word_length(f.word);
        if (td < 0 || td > X.dims() || f.index < 0 || f.index >= X.counts[td])
          throw input_error("face reference out of range");
      }
    }
  }
  // d_i d_j = d_{j-1} d_i for i < j
  for (int d = 2; d <= X.dims(); ++d) {
    for (std::int64_t idx = 0; idx < X.counts[d]; ++idx) {
      for (int j = 1; j <= d; ++j) {
        for (int i = 0; i < j; ++i) {
          const SimplexRef a =
              X.simplex_face(d - 1, X.face(d, static_cast<std::int32_t>(idx), j), i);
          const SimplexRef b =
              X.simplex_face(d - 1, X.face(d, static_cast<std::int32_t>(idx), i), j - 1);
          if (!(a == b))
            throw input_error("simplicial identity failed at dim " + std::to_string(d) +
                              " simplex " + std::to_string(idx));
        }
      }
    }
  }
}

void validate(const SimplicialMap& f) {
  const SimplicialSet& S = *f.source;
  const SimplicialSet& T = *f.target;
  if (f.images.size() != S.counts.size())
    throw input_error("map image table dimension mismatch");
  for (int d = 0; d <= S.dims(); ++d) {
    if (static_cast<std::int64_t>(f.images[d].size()) != S.counts[d])
      throw input_error("map image table size mismatch");
    for (std::int64_t idx = 0; idx < S.counts[d]; ++idx) {
      const SimplexRef im = f.images[d][idx];
      const int td = d - word_length(im.word);
      if (td < 0 || td > T.dims() || im.index < 0 || im.index >= T.counts[td])
        throw input_error("map image out of range");
    }
  }
  if (!(f.images[0][S.basepoint] == SimplexRef{T.basepoint, 0}))
    throw input_error("map does not preserve the basepoint");
  for (int d = 1; d <= S.dims(); ++d) {
    for (std::int64_t idx = 0; idx < S.counts[d]; ++idx) {
      for (int i = 0; i <= d; ++i) {
        const SimplexRef lhs = f.apply(d - 1, S.face(d, static_cast<std::int32_t>(idx), i));
        const SimplexRef rhs = T.simplex_face(d, f.images[d][idx], i);
        if (!(lhs == rhs))
          throw input_error("map does not commute with d_" + std::to_string(i) +
                            " at dim " + std::to_string(d));
      }
    }
  }
}

SimplicialMap identity_map(SetPtr X) {
  SimplicialMap f;
  f.source = X;
  f.target = X;
  f.images.resize(X->counts.size());
  for (int d = 0; d <= X->dims(); ++d) {
    f.images[d].resize(X->counts[d]);
    for (std::int64_t i = 0; i < X->counts[d]; ++i)
      f.images[d][i] = {static_cast<std::int32_t>(i), 0};
  }
  return f;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (f.target.get() != g.source.get() && !(*f.target == *g.source))
    throw input_error("compose: mismatched complexes");
  SimplicialMap h;
  h.source = f.source;
  h.target = g.target;
  h.images.resize(f.images.size());
  for (std::size_t d = 0; d < f.images.size(); ++d) {
    h.images[d].resize(f.images[d].size());
    for (std::size_t i = 0; i < f.images[d].size(); ++i)
      h.images[d][i] = g.apply(static_cast<int>(d), f.images[d][i]);
  }
  return h;
}

bool maps_equal(const SimplicialMap& f, const SimplicialMap& g) {
  return f.images == g.images;
}

void validate_action(const SimplicialSet& X, const GroupAction& A) {
  if (A.maps.empty()) throw input_error("empty group action");
  for (const auto& m : A.maps) {
    if (m.source.get() == nullptr || &*m.source != &X)
      throw input_error("action map not defined on the given complex");
    validate(m);
  }
  // locate the identity permutation and check it acts as the identity map
  std::vector<int> id(A.permutations.empty() ? 0 : A.permutations[0].size());
  std::iota(id.begin(), id.end(), 0);
  bool found_id = false;
  for (std::size_t e = 0; e < A.permutations.size(); ++e) {
    if (A.permutations[e] == id) {
      found_id = true;
      if (!maps_equal(A.maps[e], identity_map(A.maps[e].source)))
        throw input_error("identity element does not act as the identity");
    }
  }
  if (!found_id) throw input_error("group action has no identity element");
  if (A.maps.size() <= 24) {
    std::map<std::vector<int>, std::size_t> lookup;
    for (std::size_t e = 0; e < A.permutations.size(); ++e)
      lookup[A.permutations[e]] = e;
    for (std::size_t a = 0; a < A.maps.size(); ++a) {
      for (std::size_t b = 0; b < A.maps.size(); ++b) {
        std::vector<int> r(A.permutations[a].size());
        for (std::size_t i = 0; i < r.size(); ++i)
          r[i] = A.permutations[b][A.permutations[a][i]];
        auto it = lookup.find(r);
        if (it == lookup.end()) throw input_error("group not closed under composition");
        if (!maps_equal(compose(A.maps[a], A.maps[b]), A.maps[it->second]))
          throw input_error("action does not respect the composition table");
      }
    }
  }
}

// ---- models ----------------------------------------------------------------

SetPtr point_model() {
  auto X = std::make_shared<SimplicialSet>();
  X->counts = {1};
  X->faces = {{}};
  X->basepoint = 0;
  return X;
}

SetPtr circle_model(int vertices) {
  if (vertices < 3) throw input_error("circle model needs at least 3 vertices");
  auto X = std::make_shared<SimplicialSet>();
  X->counts = {vertices, vertices};
  X->faces.resize(2);
  X->faces[1].resize(static_cast<std::size_t>(vertices) * 2);
  for (int i = 0; i < vertices; ++i) {
    // edge i runs from vertex i to vertex i+1
    X->faces[1][2 * i + 0] = {(i + 1) % vertices, 0};  // d_0: last vertex
    X->faces[1][2 * i + 1] = {i, 0};                   // d_1: first vertex
  }
  X->basepoint = 0;
  return X;
}

SetPtr complex_model(const std::vector<std::vector<int>>& top_simplices,
                     int basepoint_vertex) {
  if (top_simplices.empty()) throw input_error("empty complex document");
  std::set<std::vector<int>> simplices;
  std::set<int> vertex_labels;
  for (const auto& s : top_simplices) {
    if (s.empty()) throw input_error("empty simplex in complex document");
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw input_error("repeated vertex in complex document simplex");
    for (int v : sorted) vertex_labels.insert(v);
    // all nonempty subsets
    const int k = static_cast<int>(sorted.size());
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      std::vector<int> sub;
      for (int b = 0; b < k; ++b)
        if (mask & (1u << b)) sub.push_back(sorted[b]);
      simplices.insert(sub);
    }
  }
  std::map<int, int> vmap;
  int nv = 0;
  for (int v : vertex_labels) vmap[v] = nv++;
  if (!vmap.count(basepoint_vertex))
    throw input_error("basepoint vertex not present in complex document");

  int dmax = 0;
  for (const auto& s : simplices) dmax = std::max(dmax, static_cast<int>(s.size()) - 1);
  std::vector<std::vector<std::vector<int>>> byd(dmax + 1);
  for (const auto& s : simplices) {
    std::vector<int> t;
    for (int v : s) t.push_back(vmap[v]);
    byd[s.size() - 1].push_back(t);
  }
  std::map<std::vector<int>, std::int32_t> index;
  for (auto& lst : byd) {
    std::sort(lst.begin(), lst.end());
    for (std::size_t i = 0; i < lst.size(); ++i)
      index[lst[i]] = static_cast<std::int32_t>(i);
  }
  auto X = std::make_shared<SimplicialSet>();
  X->counts.resize(dmax + 1);
  X->faces.resize(dmax + 1);
  for (int d = 0; d <= dmax; ++d) {
    X->counts[d] = static_cast<std::int64_t>(byd[d].size());
    if (d == 0) continue;
    X->faces[d].resize(byd[d].size() * (d + 1));
    for (std::size_t i = 0; i < byd[d].size(); ++i) {
      for (int j = 0; j <= d; ++j) {
        std::vector<int> t = byd[d][i];
        t.erase(t.begin() + j);
        X->faces[d][i * (d + 1) + j] = {index.at(t), 0};
      }
    }
  }
  X->basepoint = vmap[basepoint_vertex];
  return X;
}

SetPtr sphere_model(int k) {
  if (k < 1) throw input_error("sphere model needs k >= 1");
  std::vector<std::vector<int>> tops;
  // all (k+1)-subsets of {0..k+1}
  std::vector<int> verts(k + 2);
  std::iota(verts.begin(), verts.end(), 0);
  for (int skip = 0; skip < k + 2; ++skip) {
    std::vector<int> s;
    for (int v = 0; v < k + 2; ++v)
      if (v != skip) s.push_back(v);
    tops.push_back(s);
  }
  return complex_model(tops, 0);
}

// ---- tuple tables ------------------------------------------------------------

std::int64_t TupleTable::find(const std::uint64_t* key) const {
  std::int64_t lo = 0, hi = size();
  while (lo < hi) {
    const std::int64_t mid = (lo + hi) / 2;
    const std::uint64_t* t = tuple(mid);
    int cmp = 0;
    for (int j = 0; j < arity; ++j) {
      if (t[j] < key[j]) { cmp = -1; break; }
      if (t[j] > key[j]) { cmp = 1; break; }
    }
    if (cmp < 0) lo = mid + 1;
    else if (cmp > 0) hi = mid;
    else return mid;
  }
  return -1;
}

namespace {

// All m-simplices of X as encoded components, sorted ascending.
std::vector<std::uint64_t> component_library(const SimplicialSet& X, int m) {
  std::vector<std::uint64_t> lib;
  for (int p = 0; p <= std::min(m, X.dims()); ++p) {
    const int r = m - p;
    if (r == 0) {
      for (std::int64_t idx = 0; idx < X.counts[p]; ++idx)
        lib.push_back(encode_component(p, static_cast<std::int32_t>(idx), 0));
      continue;
    }
    if (r > m) continue;
    for (std::int64_t idx = 0; idx < X.counts[p]; ++idx) {
      // subsets of {0..m-1} of size r, ascending (Gosper)
      Word w = word_mask(r);
      const Word limit = Word(1) << m;
      while (w < limit) {
        lib.push_back(encode_component(p, static_cast<std::int32_t>(idx), w));
        const Word c = w & (0u - w);
        const Word rr = w + c;
        w = (((rr ^ w) >> 2) / c) | rr;
      }
    }
  }
  std::sort(lib.begin(), lib.end());
  return lib;
}

// Enumerate canonical (nondecreasing) n-tuples over `lib` whose degeneracy
// words have empty common intersection. Appends flat keys to `out`.
void enumerate_sym_tuples(const std::vector<std::uint64_t>& lib, int n,
                          std::vector<std::uint64_t>& out, bool parallel) {
  const std::int64_t L = static_cast<std::int64_t>(lib.size());
  auto emit_from = [&](std::int64_t first, std::vector<std::uint64_t>& dst) {
    std::vector<std::int64_t> pos(n);
    std::vector<Word> inter(n);
    pos[0] = first;
    inter[0] = component_word(lib[first]);
    int depth = 1;
    if (n == 1) {
      if (inter[0] == 0) dst.push_back(lib[first]);
      return;
    }
    std::vector<std::int64_t> cur(n);
    cur[1] = first;
    while (depth >= 1) {
      if (cur[depth] >= L) {
        --depth;
        if (depth >= 1) ++cur[depth];
        continue;
      }
      const Word w = inter[depth - 1] & component_word(lib[cur[depth]]);
      if (depth == n - 1) {
        if (w == 0) {
          for (int j = 0; j < depth; ++j) dst.push_back(lib[pos[j]]);
          dst.push_back(lib[cur[depth]]);
        }
        ++cur[depth];
      } else {
        pos[depth] = cur[depth];
        inter[depth] = w;
        ++depth;
        cur[depth] = pos[depth - 1];
      }
    }
  };
  if (parallel && L > 64) {
    std::vector<std::vector<std::uint64_t>> parts(L);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
    for (std::int64_t f = 0; f < L; ++f) emit_from(f, parts[f]);
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  } else {
    for (std::int64_t f = 0; f < L; ++f) emit_from(f, out);
  }
}

// Enumerate ordered tuples over per-factor libraries, empty word intersection.
void enumerate_product_tuples(const std::vector<std::vector<std::uint64_t>>& libs,
                              std::vector<std::uint64_t>& out, bool parallel) {
  const int n = static_cast<int>(libs.size());
  const std::int64_t L0 = static_cast<std::int64_t>(libs[0].size());
  auto emit_from = [&](std::int64_t first, std::vector<std::uint64_t>& dst) {
    std::vector<std::int64_t> cur(n, 0);
    std::vector<Word> inter(n);
    std::vector<std::int64_t> pos(n);
    pos[0] = first;
    inter[0] = component_word(libs[0][first]);
    if (n == 1) {
      if (inter[0] == 0) dst.push_back(libs[0][first]);
      return;
    }
    int depth = 1;
    cur[1] = 0;
    while (depth >= 1) {
      if (cur[depth] >= static_cast<std::int64_t>(libs[depth].size())) {
        --depth;
        if (depth >= 1) ++cur[depth];
        continue;
      }
      const Word w = inter[depth - 1] & component_word(libs[depth][cur[depth]]);
      if (depth == n - 1) {
        if (w == 0) {
          for (int j = 0; j < depth; ++j) dst.push_back(libs[j][pos[j]]);
          dst.push_back(libs[depth][cur[depth]]);
        }
        ++cur[depth];
      } else {
        pos[depth] = cur[depth];
        inter[depth] = w;
        ++depth;
        cur[depth] = 0;
      }
    }
  };
  if (parallel && L0 > 16) {
    std::vector<std::vector<std::uint64_t>> parts(L0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (std::int64_t f = 0; f < L0; ++f) emit_from(f, parts[f]);
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  } else {
    for (std::int64_t f = 0; f < L0; ++f) emit_from(f, out);
  }
}

// Face of a product tuple: componentwise faces, then strip the degeneracy
// operators common to every component.
void tuple_face(const std::vector<const SimplicialSet*>& factors, int m,
                const std::uint64_t* t, int i, bool canonical_sort,
                std::uint64_t* comps_out, int& out_dim, Word& out_word) {
  const int n = static_cast<int>(factors.size());
  std::array<SimplexRef, 8> cur;
  for (int j = 0; j < n; ++j) {
    cur[j] = factors[j]->simplex_face(m, {component_index(t[j]), component_word(t[j])}, i);
  }
  int mm = m - 1;
  Word word_out = 0;
  for (;;) {
    Word inter = cur[0].word;
    for (int j = 1; j < n; ++j) inter &= cur[j].word;
    if (inter == 0) break;
    const int j = 31 - std::countl_zero(inter);
    word_out |= Word(1) << j;
    for (int k = 0; k < n; ++k) cur[k] = factors[k]->simplex_face(mm, cur[k], j);
    --mm;
  }
  for (int j = 0; j < n; ++j)
    comps_out[j] = encode_component(mm - word_length(cur[j].word), cur[j].index, cur[j].word);
  if (canonical_sort) std::sort(comps_out, comps_out + n);
  out_dim = mm;
  out_word = word_out;
}

// Shared assembly of a product-like complex from enumerated tuples.
ProductComplex assemble(const std::vector<const SimplicialSet*>& factors,
                        std::vector<TupleTable> tables, bool canonical_sort,
                        const std::uint64_t* bp_key, const BuildOptions& opt) {
  const int n = static_cast<int>(factors.size());
  const int dmax = static_cast<int>(tables.size()) - 1;
  auto X = std::make_shared<SimplicialSet>();
  X->counts.resize(dmax + 1);
  X->faces.resize(dmax + 1);
  for (int m = 0; m <= dmax; ++m) X->counts[m] = tables[m].size();
  for (int m = 1; m <= dmax; ++m) {
    const std::int64_t cnt = tables[m].size();
    X->faces[m].resize(static_cast<std::size_t>(cnt) * (m + 1));
    const bool par = opt.parallel && cnt > 256;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
    for (std::int64_t idx = 0; idx < cnt; ++idx) {
      std::array<std::uint64_t, 8> key;
      for (int i = 0; i <= m; ++i) {
        int fd = 0;
        Word fw = 0;
        tuple_face(factors, m, tables[m].tuple(idx), i, canonical_sort, key.data(), fd, fw);
        const std::int64_t target = tables[fd].find(key.data());
        if (target < 0) throw std::logic_error("product face lookup failed");
        X->faces[m][static_cast<std::size_t>(idx) * (m + 1) + i] = {
            static_cast<std::int32_t>(target), fw};
      }
    }
  }
  const std::int64_t bp = tables[0].find(bp_key);
  if (bp < 0) throw std::logic_error("product basepoint lookup failed");
  X->basepoint = static_cast<std::int32_t>(bp);
  ProductComplex P;
  P.set = X;
  P.arity = n;
  P.tables = std::move(tables);
  return P;
}

std::vector<TupleTable> enumerate_all(const std::vector<const SimplicialSet*>& factors,
                                      bool symmetric, const BuildOptions& opt) {
  const int n = static_cast<int>(factors.size());
  if (n > 8) throw input_error("product arity limited to 8");
  int dsum = 0;
  for (const auto* f : factors) dsum += f->dims();
  int dmax = dsum;
  if (opt.dim_cap >= 0) dmax = std::min(dmax, opt.dim_cap);
  if (dmax + std::max(0, n - 1) >= 32)
    throw input_error("total dimension exceeds the degeneracy word width");
  std::vector<TupleTable> tables(dmax + 1);
  std::size_t total = 0;
  for (int m = 0; m <= dmax; ++m) {
    tables[m].arity = n;
    if (symmetric) {
      const auto lib = component_library(*factors[0], m);
      enumerate_sym_tuples(lib, n, tables[m].flat, opt.parallel);
    } else {
      std::vector<std::vector<std::uint64_t>> libs;
      libs.reserve(n);
      for (const auto* f : factors) libs.push_back(component_library(*f, m));
      enumerate_product_tuples(libs, tables[m].flat, opt.parallel);
    }
    total += static_cast<std::size_t>(tables[m].size());
    if (total > opt.budget) throw budget_error(total, opt.budget);
  }
  return tables;
}

}  // namespace

ProductComplex product(SetPtr X, SetPtr Y, const BuildOptions& opt) {
  std::vector<const SimplicialSet*> factors{X.get(), Y.get()};
  auto tables = enumerate_all(factors, false, opt);
  const std::uint64_t bp_key[2] = {encode_component(0, X->basepoint, 0),
                                   encode_component(0, Y->basepoint, 0)};
  return assemble(factors, std::move(tables), false, bp_key, opt);
}

PowerResult power(SetPtr X, int n, const BuildOptions& opt) {
  if (n < 1) throw input_error("power requires n >= 1");
  std::vector<const SimplicialSet*> factors(n, X.get());
  auto tables = enumerate_all(factors, false, opt);
  std::vector<std::uint64_t> bp_key(n, encode_component(0, X->basepoint, 0));
  PowerResult R;
  R.power = assemble(factors, std::move(tables), false, bp_key.data(), opt);

  // S_n acting by permutation of the factors
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    R.action.permutations.push_back(perm);
    SimplicialMap g;
    g.source = R.power.set;
    g.target = R.power.set;
    g.images.resize(R.power.set->counts.size());
    for (int d = 0; d <= R.power.set->dims(); ++d) {
      const TupleTable& tab = R.power.tables[d];
      g.images[d].resize(tab.size());
      std::array<std::uint64_t, 8> key;
      for (std::int64_t idx = 0; idx < tab.size(); ++idx) {
        const std::uint64_t* t = tab.tuple(idx);
        for (int i = 0; i < n; ++i) key[i] = t[perm[i]];
        const std::int64_t j = tab.find(key.data());
        if (j < 0) throw std::logic_error("permuted tuple lookup failed");
        g.images[d][idx] = {static_cast<std::int32_t>(j), 0};
      }
    }
    R.action.maps.push_back(std::move(g));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return R;
}

QuotientResult quotient(SetPtr X, const GroupAction& A) {
  const int D = X->dims();
  // orbit representatives: least index in each orbit (union-find, min root)
  std::vector<std::vector<std::int32_t>> parent(D + 1);
  for (int d = 0; d <= D; ++d) {
    parent[d].resize(X->counts[d]);
    std::iota(parent[d].begin(), parent[d].end(), 0);
  }
  auto find = [&](int d, std::int32_t x) {
    while (parent[d][x] != x) {
      parent[d][x] = parent[d][parent[d][x]];
      x = parent[d][x];
    }
    return x;
  };
  auto unite = [&](int d, std::int32_t a, std::int32_t b) {
    a = find(d, a);
    b = find(d, b);
    if (a == b) return;
    if (a < b) parent[d][b] = a;
    else parent[d][a] = b;
  };
  for (const auto& g : A.maps) {
    if (g.source.get() != X.get())
      throw input_error("quotient: action not defined on the given complex");
    for (int d = 0; d <= D; ++d) {
      for (std::int64_t idx = 0; idx < X->counts[d]; ++idx) {
        const SimplexRef im = g.images[d][idx];
        if (im.word != 0)
          throw input_error("quotient: action map is not an automorphism");
        unite(d, static_cast<std::int32_t>(idx), im.index);
      }
    }
  }
  std::vector<std::vector<std::int32_t>> newindex(D + 1);
  auto Q = std::make_shared<SimplicialSet>();
  Q->counts.resize(D + 1);
  Q->faces.resize(D + 1);
  for (int d = 0; d <= D; ++d) {
    newindex[d].assign(X->counts[d], -1);
    std::int32_t next = 0;
    for (std::int64_t idx = 0; idx < X->counts[d]; ++idx)
      if (find(d, static_cast<std::int32_t>(idx)) == idx)
        newindex[d][idx] = next++;
    Q->counts[d] = next;
  }
  for (int d = 1; d <= D; ++d) {
    Q->faces[d].resize(static_cast<std::size_t>(Q->counts[d]) * (d + 1));
    for (std::int64_t idx = 0; idx < X->counts[d]; ++idx) {
      if (newindex[d][idx] < 0) continue;
      for (int i = 0; i <= d; ++i) {
        const SimplexRef f = X->face(d, static_cast<std::int32_t>(idx), i);
        const int td = d - 1 - word_length(f.word);
        Q->faces[d][static_cast<std::size_t>(newindex[d][idx]) * (d + 1) + i] = {
            newindex[td][find(td, f.index)], f.word};
      }
    }
  }
  Q->basepoint = newindex[0][find(0, X->basepoint)];
  SimplicialMap proj;
  proj.source = X;
  proj.target = Q;
  proj.images.resize(D + 1);
  for (int d = 0; d <= D; ++d) {
    proj.images[d].resize(X->counts[d]);
    for (std::int64_t idx = 0; idx < X->counts[d]; ++idx)
      proj.images[d][idx] = {newindex[d][find(d, static_cast<std::int32_t>(idx))], 0};
  }
  return {Q, std::move(proj)};
}

ProductComplex sym_power(SetPtr X, int n, const BuildOptions& opt) {
  if (n < 0) throw input_error("sym_power requires n >= 0");
  if (n == 0) {
    ProductComplex P;
    P.set = point_model();
    P.arity = 0;
    P.tables.resize(1);
    P.tables[0].arity = 0;
    return P;
  }
  std::vector<const SimplicialSet*> factors(n, X.get());
  auto tables = enumerate_all(factors, true, opt);
  std::vector<std::uint64_t> bp_key(n, encode_component(0, X->basepoint, 0));
  return assemble(factors, std::move(tables), true, bp_key.data(), opt);
}

SimplicialMap sym_projection(const ProductComplex& XN, const ProductComplex& SN) {
  if (XN.arity != SN.arity) throw input_error("sym_projection: arity mismatch");
  SimplicialMap q;
  q.source = XN.set;
  q.target = SN.set;
  q.images.resize(XN.set->counts.size());
  for (int d = 0; d <= XN.set->dims(); ++d) {
    q.images[d].resize(XN.tables[d].size());
    std::array<std::uint64_t, 8> key;
    for (std::int64_t idx = 0; idx < XN.tables[d].size(); ++idx) {
      const std::uint64_t* t = XN.tables[d].tuple(idx);
      std::copy(t, t + XN.arity, key.begin());
      std::sort(key.begin(), key.begin() + XN.arity);
      const std::int64_t j = SN.tables[d].find(key.data());
      if (j < 0) throw input_error("sym_projection: complexes do not match");
      q.images[d][idx] = {static_cast<std::int32_t>(j), 0};
    }
  }
  return q;
}

SimplicialMap stabilization_map(SetPtr X, const ProductComplex& SN,
                                const ProductComplex& SN1) {
  if (SN1.arity != SN.arity + 1)
    throw input_error("stabilization_map: arities must differ by one");
  SimplicialMap a;
  a.source = SN.set;
  a.target = SN1.set;
  a.images.resize(SN.set->counts.size());
  const int n = SN.arity;
  for (int d = 0; d <= SN.set->dims(); ++d) {
    a.images[d].resize(SN.set->counts[d]);
    const std::uint64_t extra = encode_component(0, X->basepoint, word_mask(d));
    std::array<std::uint64_t, 8> key;
    for (std::int64_t idx = 0; idx < SN.set->counts[d]; ++idx) {
      if (n > 0) {
        const std::uint64_t* t = SN.tables[d].tuple(idx);
        std::copy(t, t + n, key.begin());
      }
      key[n] = extra;
      std::sort(key.begin(), key.begin() + n + 1);
      const std::int64_t j = SN1.tables[d].find(key.data());
      if (j < 0) throw input_error("stabilization_map: target does not contain image");
      a.images[d][idx] = {static_cast<std::int32_t>(j), 0};
    }
  }
  return a;
}

// ---- subcomplexes and collapse ----------------------------------------------

Subcomplex subcomplex_closure(const SimplicialSet& X,
                              const std::vector<std::pair<int, std::int32_t>>& gens) {
  Subcomplex A;
  A.member.resize(X.dims() + 1);
  for (int d = 0; d <= X.dims(); ++d) A.member[d].assign(X.counts[d], 0);
  std::vector<std::pair<int, std::int32_t>> stack = gens;
  for (auto& [d, idx] : stack) A.member[d][idx] = 1;
  while (!stack.empty()) {
    auto [d, idx] = stack.back();
    stack.pop_back();
    if (d == 0) continue;
    for (int i = 0; i <= d; ++i) {
      const SimplexRef f = X.face(d, idx, i);
      const int td = d - 1 - word_length(f.word);
      if (!A.member[td][f.index]) {
        A.member[td][f.index] = 1;
        stack.push_back({td, f.index});
      }
    }
  }
  return A;
}

Subcomplex image_subcomplex(const SimplicialMap& f) {
  std::vector<std::pair<int, std::int32_t>> gens;
  for (int d = 0; d <= f.source->dims(); ++d)
    for (std::int64_t idx = 0; idx < f.source->counts[d]; ++idx) {
      const SimplexRef im = f.images[d][idx];
      gens.push_back({d - word_length(im.word), im.index});
    }
  return subcomplex_closure(*f.target, gens);
}

void validate_subcomplex(const SimplicialSet& X, const Subcomplex& A) {
  if (A.member.size() != X.counts.size())
    throw input_error("subcomplex dimension mismatch");
  if (!A.member[0][X.basepoint])
    throw input_error("subcomplex does not contain the basepoint");
  for (int d = 1; d <= X.dims(); ++d) {
    for (std::int64_t idx = 0; idx < X.counts[d]; ++idx) {
      if (!A.member[d][idx]) continue;
      for (int i = 0; i <= d; ++i) {
        const SimplexRef f = X.face(d, static_cast<std::int32_t>(idx), i);
        const int td = d - 1 - word_length(f.word);
        if (!A.member[td][f.index])
          throw input_error("subcomplex is not closed under faces");
      }
    }
  }
}

SetPtr collapse(SetPtr X, const Subcomplex& A) {
  validate_subcomplex(*X, A);
  const int D = X->dims();
  std::vector<std::vector<std::int32_t>> remap(D + 1);
  auto Q = std::make_shared<SimplicialSet>();
  Q->counts.resize(D + 1);
  Q->faces.resize(D + 1);
  for (int d = 0; d <= D; ++d) {
    remap[d].assign(X->counts[d], -1);
    std::int32_t next = d == 0 ? 1 : 0;  // vertex 0 is the collapsed basepoint
    for (std::int64_t idx = 0; idx < X->counts[d]; ++idx)
      if (!A.member[d][idx]) remap[d][idx] = next++;
    Q->counts[d] = next;
  }
  for (int d = 1; d <= D; ++d) {
    Q->faces[d].resize(static_cast<std::size_t>(Q->counts[d]) * (d + 1));
    for (std::int64_t idx = 0; idx < X->counts[d]; ++idx) {
      if (remap[d][idx] < 0) continue;
      for (int i = 0; i <= d; ++i) {
        const SimplexRef f = X->face(d, static_cast<std::int32_t>(idx), i);
        const int td = d - 1 - word_length(f.word);
        SimplexRef out;
        if (A.member[td][f.index]) {
          out = {0, word_compose(f.word, word_mask(td))};
        } else {
          out = {remap[td][f.index], f.word};
        }
        Q->faces[d][static_cast<std::size_t>(remap[d][idx]) * (d + 1) + i] = out;
      }
    }
  }
  while (Q->counts.size() > 1 && Q->counts.back() == 0) {
    Q->counts.pop_back();
    Q->faces.pop_back();
  }
  Q->basepoint = 0;
  return Q;
}

}  // namespace symstab
