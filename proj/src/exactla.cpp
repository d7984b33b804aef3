#include "quadop/exactla.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "quadop/error.hpp"

namespace quadop {

namespace sparse {

SparseVec from_dense(const std::vector<Rat>& v) {
  SparseVec out;
  for (int k = 0; k < static_cast<int>(v.size()); ++k)
    if (v[k] != 0) out.emplace_back(k, v[k]);
  return out;
}

std::vector<Rat> to_dense(const SparseVec& v, int ambient) {
  std::vector<Rat> out(ambient, Rat(0));
  for (const auto& [col, val] : v) out[col] = val;
  return out;
}

SparseVec axpy(const SparseVec& dst, const Rat& c, const SparseVec& src) {
  SparseVec out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() && j < src.size()) {
    if (dst[i].first < src[j].first) {
      out.push_back(dst[i++]);
    } else if (dst[i].first > src[j].first) {
      out.emplace_back(src[j].first, -c * src[j].second);
      ++j;
    } else {
      Rat v = dst[i].second - c * src[j].second;
      if (v != 0) out.emplace_back(dst[i].first, std::move(v));
      ++i, ++j;
    }
  }
  for (; i < dst.size(); ++i) out.push_back(dst[i]);
  for (; j < src.size(); ++j) out.emplace_back(src[j].first, -c * src[j].second);
  return out;
}

Rat at(const SparseVec& v, int col) {
  auto it = std::lower_bound(v.begin(), v.end(), col,
                             [](const auto& e, int c) { return e.first < c; });
  if (it != v.end() && it->first == col) return it->second;
  return Rat(0);
}

}  // namespace sparse

namespace {

void normalize_leading(SparseVec& v) {
  const Rat lead = v.front().second;
  if (lead == 1) return;
  for (auto& [col, val] : v) val /= lead;
}

// Clears every pivot column from the tails. Rows must be in echelon form,
// pivot columns strictly increasing, leading coefficient 1. Produces the
// canonical reduced row echelon basis.
void back_substitute(std::vector<SparseVec>& rows) {
  for (int i = static_cast<int>(rows.size()) - 1; i >= 0; --i) {
    const int pivot_col = rows[i].front().first;
#pragma omp parallel for schedule(dynamic, 16)
    for (int j = 0; j < i; ++j) {
      Rat c = sparse::at(rows[j], pivot_col);
      if (c != 0) rows[j] = sparse::axpy(rows[j], c, rows[i]);
    }
  }
}

}  // namespace

std::vector<SparseVec> row_reduce_serial(std::vector<SparseVec> rows) {
  std::map<int, SparseVec> pivots;  // pivot column -> row
  for (auto& v : rows) {
    while (!v.empty()) {
      auto it = pivots.find(v.front().first);
      if (it == pivots.end()) break;
      v = sparse::axpy(v, v.front().second, it->second);
    }
    if (v.empty()) continue;
    normalize_leading(v);
    pivots.emplace(v.front().first, std::move(v));
  }
  std::vector<SparseVec> out;
  out.reserve(pivots.size());
  for (auto& [col, row] : pivots) out.push_back(std::move(row));
  back_substitute(out);
  return out;
}

std::vector<SparseVec> row_reduce_parallel(std::vector<SparseVec> rows) {
  std::vector<SparseVec> pivots;
  std::unordered_map<int, std::size_t> pivot_by_col;

  while (!rows.empty()) {
    // Reduce every row against the current pivot snapshot. Pivots are
    // immutable during the sweep, so rows are independent of each other.
    const long nrows = static_cast<long>(rows.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (long r = 0; r < nrows; ++r) {
      SparseVec& v = rows[r];
      while (!v.empty()) {
        auto it = pivot_by_col.find(v.front().first);
        if (it == pivot_by_col.end()) break;
        v = sparse::axpy(v, v.front().second, pivots[it->second]);
      }
    }

    // Collect new pivots in the fixed row order; rows whose leading
    // column was claimed earlier in this same pass go into the next round.
    std::vector<SparseVec> next;
    for (auto& v : rows) {
      if (v.empty()) continue;
      if (pivot_by_col.count(v.front().first)) {
        next.push_back(std::move(v));
        continue;
      }
      normalize_leading(v);
      pivot_by_col.emplace(v.front().first, pivots.size());
      pivots.push_back(std::move(v));
    }
    rows.swap(next);
  }

  std::sort(pivots.begin(), pivots.end(),
            [](const SparseVec& a, const SparseVec& b) {
              return a.front().first < b.front().first;
            });
  back_substitute(pivots);
  return pivots;
}

std::vector<SparseVec> row_reduce(std::vector<SparseVec> rows, Kernel kernel) {
  switch (kernel) {
    case Kernel::Serial: return row_reduce_serial(std::move(rows));
    case Kernel::Parallel: return row_reduce_parallel(std::move(rows));
    case Kernel::Auto:
      return rows.size() >= 1024 ? row_reduce_parallel(std::move(rows))
                                 : row_reduce_serial(std::move(rows));
  }
  throw internal_error("unreachable kernel tag");
}

Subspace::Subspace(int ambient_dim) : ambient_(ambient_dim) {
  if (ambient_dim < 0) throw invalid_input("negative ambient dimension");
}

Subspace Subspace::span(const std::vector<std::vector<Rat>>& vectors, int ambient_dim) {
  std::vector<SparseVec> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != ambient_dim)
      throw invalid_input("vector length does not match ambient dimension");
    rows.push_back(sparse::from_dense(v));
  }
  return span_sparse(std::move(rows), ambient_dim);
}

Subspace Subspace::span_sparse(std::vector<SparseVec> vectors, int ambient_dim, Kernel kernel) {
  for (const auto& v : vectors)
    if (!v.empty() && (v.front().first < 0 || v.back().first >= ambient_dim))
      throw invalid_input("sparse entry outside ambient dimension");
  Subspace s(ambient_dim);
  s.rows_ = row_reduce(std::move(vectors), kernel);
  return s;
}

std::vector<std::vector<Rat>> Subspace::dense_basis() const {
  std::vector<std::vector<Rat>> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(sparse::to_dense(r, ambient_));
  return out;
}

SparseVec Subspace::reduce(SparseVec v) const {
  // Basis tails never contain pivot columns, so one ascending pass is
  // enough.
  for (const auto& row : rows_) {
    if (v.empty()) break;
    Rat c = sparse::at(v, row.front().first);
    if (c != 0) v = sparse::axpy(v, c, row);
  }
  return v;
}

bool Subspace::contains(const SparseVec& v) const {
  if (!v.empty() && v.back().first >= ambient_)
    throw invalid_input("vector length does not match ambient dimension");
  return reduce(v).empty();
}

bool Subspace::contains(const std::vector<Rat>& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw invalid_input("vector length does not match ambient dimension");
  return reduce(sparse::from_dense(v)).empty();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw invalid_input("ambient dimension mismatch");
  for (const auto& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

Subspace Subspace::orthogonal_complement(const std::vector<Rat>& form) const {
  if (static_cast<int>(form.size()) != ambient_)
    throw invalid_input("form length does not match ambient dimension");
  for (const auto& f : form)
    if (f != 1 && f != -1) throw invalid_input("form entries must be +1 or -1");

  // u is orthogonal to the row space iff M u = 0 where M scales each
  // column of the basis by the form.
  std::vector<SparseVec> scaled;
  scaled.reserve(rows_.size());
  for (const auto& r : rows_) {
    SparseVec s = r;
    for (auto& [col, val] : s) val *= form[col];
    scaled.push_back(std::move(s));
  }
  std::vector<SparseVec> rref = row_reduce(std::move(scaled));

  std::vector<bool> is_pivot(ambient_, false);
  for (const auto& r : rref) is_pivot[r.front().first] = true;

  std::vector<SparseVec> kernel;
  for (int free_col = 0; free_col < ambient_; ++free_col) {
    if (is_pivot[free_col]) continue;
    SparseVec u;
    for (const auto& r : rref) {
      Rat c = sparse::at(r, free_col);
      if (c != 0) u.emplace_back(r.front().first, -c);
    }
    u.emplace_back(free_col, Rat(1));
    std::sort(u.begin(), u.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    kernel.push_back(std::move(u));
  }
  return span_sparse(std::move(kernel), ambient_);
}

}  // namespace quadop
