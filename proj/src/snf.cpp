#include "symstab/snf.hpp"

#include <stdexcept>

namespace symstab {

DenseMatrix DenseMatrix::identity(std::int64_t n) {
  DenseMatrix I(n, n);
  for (std::int64_t i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

DenseMatrix matmul(const DenseMatrix& A, const DenseMatrix& B) {
  if (A.cols != B.rows) throw std::logic_error("matmul: shape mismatch");
  DenseMatrix C(A.rows, B.cols);
  for (std::int64_t i = 0; i < A.rows; ++i)
    for (std::int64_t k = 0; k < A.cols; ++k) {
      const Int& v = A.at(i, k);
      if (v == 0) continue;
      for (std::int64_t j = 0; j < B.cols; ++j) C.at(i, j) += v * B.at(k, j);
    }
  return C;
}

bool is_identity(const DenseMatrix& A) {
  if (A.rows != A.cols) return false;
  for (std::int64_t i = 0; i < A.rows; ++i)
    for (std::int64_t j = 0; j < A.cols; ++j)
      if (A.at(i, j) != Int(i == j ? 1 : 0)) return false;
  return true;
}

namespace {

struct Worker {
  DenseMatrix D, U, V, Uinv, Vinv;
  bool want_v;

  Worker(const DenseMatrix& M, bool want_v)
      : D(M),
        U(DenseMatrix::identity(M.rows)),
        Uinv(DenseMatrix::identity(M.rows)),
        want_v(want_v) {
    if (want_v) {
      V = DenseMatrix::identity(M.cols);
      Vinv = DenseMatrix::identity(M.cols);
    }
  }

  // row_i += lam * row_j on D; mirrored as U -> L U, Uinv -> Uinv L^{-1}
  void row_add(std::int64_t i, std::int64_t j, const Int& lam) {
    for (std::int64_t c = 0; c < D.cols; ++c) D.at(i, c) += lam * D.at(j, c);
    for (std::int64_t c = 0; c < U.cols; ++c) U.at(i, c) += lam * U.at(j, c);
    for (std::int64_t r = 0; r < Uinv.rows; ++r)
      Uinv.at(r, j) -= lam * Uinv.at(r, i);
  }
  void row_swap(std::int64_t i, std::int64_t j) {
    for (std::int64_t c = 0; c < D.cols; ++c) std::swap(D.at(i, c), D.at(j, c));
    for (std::int64_t c = 0; c < U.cols; ++c) std::swap(U.at(i, c), U.at(j, c));
    for (std::int64_t r = 0; r < Uinv.rows; ++r)
      std::swap(Uinv.at(r, i), Uinv.at(r, j));
  }
  void row_negate(std::int64_t i) {
    for (std::int64_t c = 0; c < D.cols; ++c) D.at(i, c) = -D.at(i, c);
    for (std::int64_t c = 0; c < U.cols; ++c) U.at(i, c) = -U.at(i, c);
    for (std::int64_t r = 0; r < Uinv.rows; ++r) Uinv.at(r, i) = -Uinv.at(r, i);
  }
  // col_j += lam * col_i on D; mirrored as V -> V R, Vinv -> R^{-1} Vinv
  void col_add(std::int64_t j, std::int64_t i, const Int& lam) {
    for (std::int64_t r = 0; r < D.rows; ++r) D.at(r, j) += lam * D.at(r, i);
    if (!want_v) return;
    for (std::int64_t r = 0; r < V.rows; ++r) V.at(r, j) += lam * V.at(r, i);
    for (std::int64_t c = 0; c < Vinv.cols; ++c)
      Vinv.at(i, c) -= lam * Vinv.at(j, c);
  }
  void col_swap(std::int64_t i, std::int64_t j) {
    for (std::int64_t r = 0; r < D.rows; ++r) std::swap(D.at(r, i), D.at(r, j));
    if (!want_v) return;
    for (std::int64_t r = 0; r < V.rows; ++r) std::swap(V.at(r, i), V.at(r, j));
    for (std::int64_t c = 0; c < Vinv.cols; ++c)
      std::swap(Vinv.at(i, c), Vinv.at(j, c));
  }
  void col_negate(std::int64_t j) {
    for (std::int64_t r = 0; r < D.rows; ++r) D.at(r, j) = -D.at(r, j);
    if (!want_v) return;
    for (std::int64_t r = 0; r < V.rows; ++r) V.at(r, j) = -V.at(r, j);
    for (std::int64_t c = 0; c < Vinv.cols; ++c) Vinv.at(j, c) = -Vinv.at(j, c);
  }

  bool find_pivot(std::int64_t t, std::int64_t& pi, std::int64_t& pj) const {
    bool found = false;
    Int best;
    for (std::int64_t i = t; i < D.rows; ++i)
      for (std::int64_t j = t; j < D.cols; ++j) {
        if (D.at(i, j) == 0) continue;
        Int v = abs(D.at(i, j));
        if (!found || v < best) {
          found = true;
          best = v;
          pi = i;
          pj = j;
          if (best == 1) return true;
        }
      }
    return found;
  }

  // Column t: gcd of rows >= t folded into (t,t) by Euclid, zeros below,
  // entries above reduced modulo the pivot. The mod reduction is the
  // coefficient-growth control: entries never outlive a pass unreduced.
  void euclid_column(std::int64_t t) {
    for (;;) {
      std::int64_t best = -1;
      for (std::int64_t i = t; i < D.rows; ++i)
        if (D.at(i, t) != 0 &&
            (best < 0 || abs(D.at(i, t)) < abs(D.at(best, t))))
          best = i;
      if (best < 0) return;
      if (best != t) row_swap(t, best);
      bool done = true;
      for (std::int64_t i = t + 1; i < D.rows; ++i) {
        if (D.at(i, t) == 0) continue;
        const Int q = D.at(i, t) / D.at(t, t);
        if (q != 0) row_add(i, t, -q);
        if (D.at(i, t) != 0) done = false;
      }
      if (done) break;
    }
    if (D.at(t, t) < 0) row_negate(t);
    for (std::int64_t i = 0; i < t; ++i) {
      const Int q = D.at(i, t) / D.at(t, t);
      if (q != 0) row_add(i, t, -q);
    }
  }

  void euclid_row(std::int64_t t) {
    for (;;) {
      std::int64_t best = -1;
      for (std::int64_t j = t; j < D.cols; ++j)
        if (D.at(t, j) != 0 &&
            (best < 0 || abs(D.at(t, j)) < abs(D.at(t, best))))
          best = j;
      if (best < 0) return;
      if (best != t) col_swap(t, best);
      bool done = true;
      for (std::int64_t j = t + 1; j < D.cols; ++j) {
        if (D.at(t, j) == 0) continue;
        const Int q = D.at(t, j) / D.at(t, t);
        if (q != 0) col_add(j, t, -q);
        if (D.at(t, j) != 0) done = false;
      }
      if (done) break;
    }
    if (D.at(t, t) < 0) col_negate(t);
    for (std::int64_t j = 0; j < t; ++j) {
      const Int q = D.at(t, j) / D.at(t, t);
      if (q != 0) col_add(j, t, -q);
    }
  }

  bool is_diagonal() const {
    for (std::int64_t i = 0; i < D.rows; ++i)
      for (std::int64_t j = 0; j < D.cols; ++j)
        if (i != j && D.at(i, j) != 0) return false;
    return true;
  }

  void run() {
    const std::int64_t n = std::min(D.rows, D.cols);
    // alternating global row/column echelon passes until diagonal
    for (int pass = 0;; ++pass) {
      if (pass > 1000)
        throw std::logic_error("smith_normal_form: no convergence");
      for (std::int64_t t = 0; t < n; ++t) {
        if (D.at(t, t) == 0) {
          std::int64_t pi = 0, pj = 0;
          if (!find_pivot(t, pi, pj)) break;
          if (pi != t) row_swap(t, pi);
          if (pj != t) col_swap(t, pj);
        }
        euclid_column(t);
      }
      for (std::int64_t t = 0; t < n; ++t) {
        if (D.at(t, t) == 0) {
          std::int64_t pi = 0, pj = 0;
          if (!find_pivot(t, pi, pj)) break;
          if (pi != t) row_swap(t, pi);
          if (pj != t) col_swap(t, pj);
        }
        euclid_row(t);
      }
      if (is_diagonal()) break;
    }
    for (std::int64_t t = 0; t < n; ++t)
      if (D.at(t, t) < 0) row_negate(t);
    // pack nonzero diagonal entries to the front
    std::int64_t front = 0;
    for (std::int64_t t = 0; t < n; ++t) {
      if (D.at(t, t) == 0) continue;
      if (t != front) {
        row_swap(front, t);
        col_swap(front, t);
      }
      ++front;
    }
    // enforce the divisibility chain d_t | d_{t+1}
    for (std::int64_t t = 0; t + 1 < n; ++t) {
      for (std::int64_t u = t + 1; u < n; ++u) {
        if (D.at(u, u) == 0 || D.at(t, t) == 0) continue;
        if (D.at(u, u) % D.at(t, t) == 0) continue;
        // fold gcd(d_t, d_u) into position t and the lcm into position u
        col_add(t, u, 1);
        for (;;) {
          bool clean = true;
          if (D.at(u, t) != 0) {
            const Int q = D.at(u, t) / D.at(t, t);
            row_add(u, t, -q);
            if (D.at(u, t) != 0) {
              row_swap(t, u);
              clean = false;
            }
          }
          if (D.at(t, u) != 0) {
            const Int q = D.at(t, u) / D.at(t, t);
            col_add(u, t, -q);
            if (D.at(t, u) != 0) {
              col_swap(t, u);
              clean = false;
            }
          }
          if (clean) break;
        }
        if (D.at(t, t) < 0) row_negate(t);
        if (D.at(u, u) < 0) row_negate(u);
        // restart the chain check from t since earlier factors may now divide
        u = t;
      }
    }
    // sort zero diagonal entries to the back (they already are, since a zero
    // pivot stops the elimination loop)
  }
};

}  // namespace

SmithResult smith_normal_form(const DenseMatrix& M, bool want_v) {
  Worker w(M, want_v);
  w.run();
  SmithResult S;
  S.U = std::move(w.U);
  S.V = std::move(w.V);
  S.Uinv = std::move(w.Uinv);
  S.Vinv = std::move(w.Vinv);
  const std::int64_t n = std::min(M.rows, M.cols);
  S.diag.resize(n);
  S.rank = 0;
  for (std::int64_t t = 0; t < n; ++t) {
    S.diag[t] = w.D.at(t, t);
    if (S.diag[t] != 0) S.rank = t + 1;
  }
  return S;
}

std::optional<std::vector<Int>> solve_integer(const SmithResult& S,
                                              const std::vector<Int>& y) {
  const std::int64_t rows = S.U.rows, cols = S.V.rows;
  if (static_cast<std::int64_t>(y.size()) != rows)
    throw std::logic_error("solve_integer: size mismatch");
  std::vector<Int> uy(rows);
  for (std::int64_t i = 0; i < rows; ++i)
    for (std::int64_t j = 0; j < rows; ++j)
      if (S.U.at(i, j) != 0) uy[i] += S.U.at(i, j) * y[j];
  std::vector<Int> z(cols);
  for (std::int64_t i = 0; i < rows; ++i) {
    if (i < S.rank) {
      if (uy[i] % S.diag[i] != 0) return std::nullopt;
      z[i] = uy[i] / S.diag[i];
    } else if (uy[i] != 0) {
      return std::nullopt;
    }
  }
  std::vector<Int> x(cols);
  for (std::int64_t i = 0; i < cols; ++i)
    for (std::int64_t j = 0; j < cols; ++j)
      if (S.V.at(i, j) != 0 && z[j] != 0) x[i] += S.V.at(i, j) * z[j];
  return x;
}

DenseMatrix kernel_basis(const SmithResult& S) {
  const std::int64_t cols = S.V.rows;
  const std::int64_t k = cols - S.rank;
  DenseMatrix K(cols, k);
  for (std::int64_t i = 0; i < cols; ++i)
    for (std::int64_t j = 0; j < k; ++j) K.at(i, j) = S.V.at(i, S.rank + j);
  return K;
}

}  // namespace symstab
