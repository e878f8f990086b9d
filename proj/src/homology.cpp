#include "symstab/homology.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>

namespace symstab {

HomologyEngine::HomologyEngine(const SimplicialSet& X, bool parallel)
    : HomologyEngine(normalized_chains(X, parallel)) {}

HomologyEngine::HomologyEngine(ChainComplex C) : orig_(std::move(C)) {
  const int D = orig_.dims();
  alive_.resize(D + 1);
  cols_.resize(D + 1);
  pres_.resize(D + 1);
  for (int d = 0; d <= D; ++d) alive_[d].assign(orig_.ranks[d], 1);
  for (int d = 1; d <= D; ++d) {
    cols_[d].resize(orig_.ranks[d]);
    for (std::int64_t i = 0; i < orig_.ranks[d]; ++i)
      for (const auto& [row, v] : orig_.boundaries[d][i])
        cols_[d][i][row] = v;
  }
}

void HomologyEngine::reduce() {
  if (reduced_) return;
  reduced_ = true;
  const int D = orig_.dims();
  for (int d = 1; d <= D; ++d) {
    // rows paired away while processing the previous degree are no longer
    // generators; their coefficients simply drop out of this boundary
    for (std::int64_t c = 0; c < orig_.ranks[d]; ++c) {
      auto& col = cols_[d][c];
      for (auto it = col.begin(); it != col.end();)
        it = alive_[d - 1][it->first] ? std::next(it) : col.erase(it);
    }
    // row incidence: for each degree d-1 generator, the alive columns of
    // the degree-d boundary touching it
    std::vector<std::set<std::int32_t>> rowinc(orig_.ranks[d - 1]);
    for (std::int64_t c = 0; c < orig_.ranks[d]; ++c) {
      if (!alive_[d][c]) continue;
      for (const auto& [row, v] : cols_[d][c])
        rowinc[row].insert(static_cast<std::int32_t>(c));
    }
    // process sparse columns first to bound fill-in; lazy priority queue
    using QE = std::pair<std::size_t, std::int32_t>;  // (column size, column)
    std::priority_queue<QE, std::vector<QE>, std::greater<QE>> work;
    for (std::int64_t c = 0; c < orig_.ranks[d]; ++c)
      if (alive_[d][c] && !cols_[d][c].empty())
        work.push({cols_[d][c].size(), static_cast<std::int32_t>(c)});
    while (!work.empty()) {
      const auto [sz, b] = work.top();
      work.pop();
      if (!alive_[d][b] || cols_[d][b].size() != sz) continue;  // stale entry
      // pick a unit entry whose row meets the fewest other columns
      std::int32_t a = -1;
      std::size_t best = 0;
      int lam = 0;
      for (const auto& [row, v] : cols_[d][b]) {
        if (v != 1 && v != -1) continue;
        const std::size_t deg = rowinc[row].size();
        if (a < 0 || deg < best) {
          a = row;
          best = deg;
          lam = static_cast<int>(v);
        }
      }
      if (a < 0) continue;

      Step st;
      st.d = d;
      st.a = a;
      st.b = b;
      st.lam = lam;
      for (const std::int32_t c : rowinc[a])
        if (c != b) st.row_r.push_back({c, cols_[d][c].at(a)});
      for (const auto& [row, v] : cols_[d][b])
        if (row != a) st.col_s.push_back({row, v});

      // clear row a from every other column: col_c -= (mu/lam) * col_b
      for (const auto& [c, mu] : st.row_r) {
        const Int f = mu * lam;  // mu * lam^{-1}
        auto& col = cols_[d][c];
        for (const auto& [row, v] : cols_[d][b]) {
          auto it = col.find(row);
          Int nv = (it == col.end() ? Int(0) : it->second) - f * v;
          if (nv == 0) {
            if (it != col.end()) {
              col.erase(it);
              rowinc[row].erase(c);
            }
          } else {
            if (it == col.end()) rowinc[row].insert(c);
            col[row] = std::move(nv);
          }
        }
        if (!col.empty()) work.push({col.size(), c});
      }
      // retire the pair
      for (const auto& [row, v] : cols_[d][b]) rowinc[row].erase(b);
      cols_[d][b].clear();
      alive_[d][b] = 0;
      alive_[d - 1][a] = 0;
      if (d >= 2) cols_[d - 1][a].clear();  // a is no longer a generator
      steps_.push_back(std::move(st));
    }
  }
}

Chain HomologyEngine::transfer_out(int d, const Chain& core_chain) const {
  Chain x = core_chain;
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    if (it->d != d) continue;
    Int coef = 0;
    for (const auto& [c, mu] : it->row_r) {
      auto jt = x.find(c);
      if (jt != x.end()) coef += mu * jt->second;
    }
    if (coef != 0) x[it->b] -= Int(it->lam) * coef;
  }
  return x;
}

Chain HomologyEngine::transfer_in(int d, Chain x) const {
  for (const Step& st : steps_) {
    if (st.d == d) {
      x.erase(st.b);
    } else if (st.d == d + 1) {
      auto it = x.find(st.a);
      if (it == x.end()) continue;
      const Int t = it->second;
      x.erase(it);
      for (const auto& [row, v] : st.col_s) {
        Int& e = x[row];
        e -= Int(st.lam) * t * v;
        if (e == 0) x.erase(row);
      }
    }
  }
  return x;
}

HomologyEngine::Presentation& HomologyEngine::present(int d) {
  if (d < 0 || d > dims()) throw input_error("homology degree out of range");
  Presentation& P = pres_[d];
  if (P.ready) return P;
  reduce();

  P.core.clear();
  P.core_pos.assign(orig_.ranks[d], -1);
  for (std::int64_t i = 0; i < orig_.ranks[d]; ++i)
    if (alive_[d][i]) {
      P.core_pos[i] = static_cast<std::int64_t>(P.core.size());
      P.core.push_back(static_cast<std::int32_t>(i));
    }
  const std::int64_t n = static_cast<std::int64_t>(P.core.size());

  // kernel of the core boundary out of degree d
  std::vector<std::int64_t> below_pos;
  std::int64_t nb = 0;
  if (d >= 1) {
    below_pos.assign(orig_.ranks[d - 1], -1);
    for (std::int64_t i = 0; i < orig_.ranks[d - 1]; ++i)
      if (alive_[d - 1][i]) below_pos[i] = nb++;
  }
  DenseMatrix Bd(nb, n);
  if (d >= 1) {
    for (std::int64_t j = 0; j < n; ++j)
      for (const auto& [row, v] : cols_[d][P.core[j]])
        Bd.at(below_pos[row], j) = v;
  }
  P.K = kernel_basis(smith_normal_form(Bd));
  P.snf_K = smith_normal_form(P.K);
  const std::int64_t k = P.K.cols;

  // relations: core boundaries from degree d+1 expressed in the kernel basis
  std::int64_t na = 0;
  DenseMatrix B(k, 0);
  if (d + 1 <= dims()) {
    std::vector<std::int32_t> above;
    for (std::int64_t i = 0; i < orig_.ranks[d + 1]; ++i)
      if (alive_[d + 1][i]) above.push_back(static_cast<std::int32_t>(i));
    na = static_cast<std::int64_t>(above.size());
    B = DenseMatrix(k, na);
    for (std::int64_t j = 0; j < na; ++j) {
      std::vector<Int> y(n);
      for (const auto& [row, v] : cols_[d + 1][above[j]])
        y[P.core_pos[row]] = v;
      auto c = solve_integer(P.snf_K, y);
      if (!c) throw std::logic_error("boundary is not a cycle");
      for (std::int64_t i = 0; i < k; ++i) B.at(i, j) = std::move((*c)[i]);
    }
  }
  // only the row certificates of the relation matrix are ever used, and it
  // can have a very large number of columns
  P.snf_B = smith_normal_form(B, /*want_v=*/false);

  // invariant coordinates: torsion rows first, then free rows
  P.coord_rows.clear();
  for (std::int64_t i = 0; i < P.snf_B.rank; ++i)
    if (P.snf_B.diag[i] > 1) {
      P.coord_rows.push_back(i);
      P.group.torsion.push_back(P.snf_B.diag[i]);
    }
  for (std::int64_t i = P.snf_B.rank; i < k; ++i) P.coord_rows.push_back(i);
  P.group.betti = k - P.snf_B.rank;

  // generators: columns of K * Uinv_B at the kept rows, lifted to the
  // original basis through the elimination log
  for (const std::int64_t r : P.coord_rows) {
    Chain g;
    for (std::int64_t i = 0; i < n; ++i) {
      Int v = 0;
      for (std::int64_t t = 0; t < k; ++t)
        v += P.K.at(i, t) * P.snf_B.Uinv.at(t, r);
      if (v != 0) g[P.core[i]] = std::move(v);
    }
    P.group.generators.push_back(transfer_out(d, g));
  }
  P.ready = true;
  return P;
}

const HomologyGroup& HomologyEngine::group(int d) {
  // degrees outside the stored range carry the zero group
  static const HomologyGroup zero{};
  if (d < 0 || d > dims()) return zero;
  return present(d).group;
}

std::vector<std::int64_t> HomologyEngine::betti_numbers() {
  std::vector<std::int64_t> b;
  for (int d = 0; d <= dims(); ++d) b.push_back(group(d).betti);
  return b;
}

std::vector<Int> HomologyEngine::coordinates(int d, const Chain& cycle) {
  Presentation& P = present(d);
  if (d >= 1) {
    Chain bd;
    for (const auto& [i, v] : cycle)
      for (const auto& [row, w] : orig_.boundaries[d][i]) {
        Int& e = bd[row];
        e += v * w;
        if (e == 0) bd.erase(row);
      }
    if (!bd.empty()) throw input_error("chain is not a cycle");
  }
  Chain z = transfer_in(d, cycle);
  std::vector<Int> zv(P.core.size());
  for (const auto& [i, v] : z) {
    if (P.core_pos[i] < 0) throw input_error("chain is not a cycle");
    zv[P.core_pos[i]] = v;
  }
  auto c = solve_integer(P.snf_K, zv);
  if (!c) throw input_error("chain is not a cycle");
  // y = U_B * c, then keep the invariant coordinates
  const std::int64_t k = P.K.cols;
  std::vector<Int> out;
  std::size_t tpos = 0;
  for (const std::int64_t r : P.coord_rows) {
    Int y = 0;
    for (std::int64_t j = 0; j < k; ++j)
      if (P.snf_B.U.at(r, j) != 0) y += P.snf_B.U.at(r, j) * (*c)[j];
    if (tpos < P.group.torsion.size()) {
      const Int& m = P.group.torsion[tpos++];
      y %= m;
      if (y < 0) y += m;
    }
    out.push_back(std::move(y));
  }
  return out;
}

InducedMap induced_map(HomologyEngine& src, HomologyEngine& tgt,
                       const ChainMap& f, int d) {
  const HomologyGroup& GS = src.group(d);
  const HomologyGroup& GT = tgt.group(d);
  const std::int64_t ks =
      static_cast<std::int64_t>(GS.torsion.size()) + GS.betti;
  const std::int64_t kt =
      static_cast<std::int64_t>(GT.torsion.size()) + GT.betti;
  const std::int64_t rt = static_cast<std::int64_t>(GT.torsion.size());

  InducedMap R;
  R.matrix = DenseMatrix(kt, ks);
  for (std::int64_t j = 0; j < ks && kt > 0; ++j) {
    Chain h;
    for (const auto& [i, v] : GS.generators[j]) {
      for (const auto& [t, w] :
           f.cols[d][static_cast<std::size_t>(i)]) {
        Int& e = h[t];
        e += v * w;
        if (e == 0) h.erase(t);
      }
    }
    auto coords = tgt.coordinates(d, h);
    for (std::int64_t i = 0; i < kt; ++i) R.matrix.at(i, j) = coords[i];
  }

  // augment with the target relations d_i e_i on the torsion coordinates
  DenseMatrix A(kt, ks + rt);
  for (std::int64_t i = 0; i < kt; ++i)
    for (std::int64_t j = 0; j < ks; ++j) A.at(i, j) = R.matrix.at(i, j);
  for (std::int64_t i = 0; i < rt; ++i) A.at(i, ks + i) = GT.torsion[i];
  SmithResult SA = smith_normal_form(A);

  // surjective iff the cokernel of [M | relations] vanishes
  R.surjective = SA.rank == kt;
  for (std::int64_t i = 0; i < SA.rank; ++i)
    if (SA.diag[i] != 1) R.surjective = false;

  // injective iff every kernel element of [M | relations], projected to the
  // source coordinates, is zero in the source group
  DenseMatrix KA = kernel_basis(SA);
  R.injective = true;
  const std::int64_t rs = static_cast<std::int64_t>(GS.torsion.size());
  for (std::int64_t j = 0; j < KA.cols && R.injective; ++j) {
    for (std::int64_t i = 0; i < ks; ++i) {
      const Int& w = KA.at(i, j);
      if (i < rs) {
        if (w % GS.torsion[i] != 0) R.injective = false;
      } else if (w != 0) {
        R.injective = false;
      }
    }
  }
  return R;
}

}  // namespace symstab
