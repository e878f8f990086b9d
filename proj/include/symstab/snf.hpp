#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

namespace symstab {

using Int = boost::multiprecision::cpp_int;

// Small dense integer matrix, row-major.
struct DenseMatrix {
  std::int64_t rows = 0, cols = 0;
  std::vector<Int> a;

  DenseMatrix() = default;
  DenseMatrix(std::int64_t r, std::int64_t c) : rows(r), cols(c), a(r * c) {}
  Int& at(std::int64_t i, std::int64_t j) { return a[i * cols + j]; }
  const Int& at(std::int64_t i, std::int64_t j) const { return a[i * cols + j]; }
  static DenseMatrix identity(std::int64_t n);
};

DenseMatrix matmul(const DenseMatrix& A, const DenseMatrix& B);
bool is_identity(const DenseMatrix& A);

// D = U * M * V with U, V unimodular; diag holds the nonnegative invariant
// factors d_1 | d_2 | ... | d_rank.
struct SmithResult {
  DenseMatrix U, V, Uinv, Vinv;
  std::vector<Int> diag;  // length min(rows, cols); zero beyond rank
  std::int64_t rank = 0;
};

// Pivots are chosen with minimal absolute value among nonzero candidates.
// Pass want_v = false to skip the column certificates V, Vinv (left empty);
// this matters when the matrix has far more columns than rows.
SmithResult smith_normal_form(const DenseMatrix& M, bool want_v = true);

// Integer solution x of M x = y using a precomputed SNF of M, if one exists.
std::optional<std::vector<Int>> solve_integer(const SmithResult& S,
                                              const std::vector<Int>& y);

// Basis of the integer kernel of M (columns), from a precomputed SNF.
DenseMatrix kernel_basis(const SmithResult& S);

}  // namespace symstab
