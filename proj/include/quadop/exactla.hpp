#pragma once

#include <utility>
#include <vector>

#include "quadop/rational.hpp"

namespace quadop {

// Sparse row over the rationals: (column, value) pairs, columns strictly
// increasing, values nonzero.
using SparseVec = std::vector<std::pair<int, Rat>>;

namespace sparse {

SparseVec from_dense(const std::vector<Rat>& v);
std::vector<Rat> to_dense(const SparseVec& v, int ambient);
// dst - c*src, merged in one pass.
SparseVec axpy(const SparseVec& dst, const Rat& c, const SparseVec& src);
// Value at column col, zero if absent.
Rat at(const SparseVec& v, int col);

}  // namespace sparse

enum class Kernel {
  Auto,      // parallel for large inputs, serial otherwise
  Serial,    // reference implementation
  Parallel,  // OpenMP pivot-sweep elimination
};

// Canonical reduced row echelon basis of the span of the given rows.
// All three produce identical output (the RREF of a row space is unique);
// the serial kernel is kept as the reference the parallel one is tested
// against.
std::vector<SparseVec> row_reduce(std::vector<SparseVec> rows, Kernel kernel = Kernel::Auto);
std::vector<SparseVec> row_reduce_serial(std::vector<SparseVec> rows);
std::vector<SparseVec> row_reduce_parallel(std::vector<SparseVec> rows);

// Linear subspace of Q^ambient in canonical reduced row echelon form.
// Two subspaces are equal iff their representations compare equal.
class Subspace {
public:
  explicit Subspace(int ambient_dim);

  static Subspace span(const std::vector<std::vector<Rat>>& vectors, int ambient_dim);
  static Subspace span_sparse(std::vector<SparseVec> vectors, int ambient_dim,
                              Kernel kernel = Kernel::Auto);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseVec>& basis() const { return rows_; }
  std::vector<std::vector<Rat>> dense_basis() const;

  // Residual of v after elimination against the basis; empty iff v lies
  // in the subspace.
  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const;
  bool contains(const std::vector<Rat>& v) const;
  bool contains(const Subspace& other) const;

  // { u : sum_k form[k]*u[k]*v[k] = 0 for all v here }. The form must
  // have one entry of +1 or -1 per column.
  Subspace orthogonal_complement(const std::vector<Rat>& form) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

private:
  int ambient_;
  std::vector<SparseVec> rows_;
};

}  // namespace quadop
