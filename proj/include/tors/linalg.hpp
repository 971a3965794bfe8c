#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace tors {

using Rational = mpq_class;

std::string to_string(const Rational& q);

/// Sparse rational vector; entries sorted by index, all nonzero.
struct SparseVec {
  std::vector<std::pair<std::size_t, Rational>> e;

  bool empty() const noexcept { return e.empty(); }
  std::size_t nnz() const noexcept { return e.size(); }
  Rational get(std::size_t i) const;
  /// i must exceed every stored index.
  void push(std::size_t i, const Rational& v) {
    if (sgn(v) != 0) e.emplace_back(i, v);
  }
  void scale(const Rational& a);
  static SparseVec unit(std::size_t i);
  bool operator==(const SparseVec& o) const { return e == o.e; }
};

/// y += a * x
void axpy(SparseVec& y, const Rational& a, const SparseVec& x);
SparseVec from_dense(const std::vector<Rational>& v);
std::vector<Rational> to_dense(const SparseVec& v, std::size_t n);
/// Builds a sparse vector from unsorted (index, value) pairs, summing duplicates.
SparseVec collect(std::vector<std::pair<std::size_t, Rational>> entries);

/// Semi-echelon basis of a growing subspace. Each stored row has a leading 1
/// at its pivot column and all other entries at larger columns. With tag
/// tracking, every row also carries the combination of inserted tags that
/// produced it.
class EchelonBasis {
 public:
  explicit EchelonBasis(bool track_tags = false) : track_(track_tags) {}

  struct Row {
    std::size_t pivot;
    SparseVec vec;
    SparseVec tag;
  };

  /// Eliminates every pivot column of v. With tracking, *tag is updated in
  /// lockstep so that (v, tag) stays the same combination as on entry.
  void reduce(SparseVec& v, SparseVec* tag = nullptr) const;
  bool contains(SparseVec v) const;

  struct Inserted {
    bool independent;
    /// When v was dependent: the reduced tag, a relation among inserted tags.
    SparseVec relation;
  };
  Inserted insert(SparseVec v, SparseVec tag = {});

  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<Row>& rows() const noexcept { return rows_; }
  bool is_pivot(std::size_t col) const { return pivot_row_.count(col) != 0; }

 private:
  bool track_;
  std::vector<Row> rows_;
  std::unordered_map<std::size_t, std::size_t> pivot_row_;
};

std::size_t rank_of(const std::vector<SparseVec>& vectors);

/// Kernel of the map sending unit vector k to images[k].
std::vector<SparseVec> kernel(const std::vector<SparseVec>& images);

/// Coefficients c with v = sum_k c_k vectors[k], if v lies in the span.
std::optional<SparseVec> solve_in_span(const std::vector<SparseVec>& vectors, const SparseVec& v);

/// Dense square matrices over the rationals, for small endomorphism algebras.
using DenseMatrix = std::vector<std::vector<Rational>>;
std::size_t dense_rank(DenseMatrix m);
/// Pivot columns of the row echelon form, i.e. a maximal independent set of columns.
std::vector<std::size_t> dense_pivot_columns(DenseMatrix m);
std::optional<DenseMatrix> dense_inverse(DenseMatrix m);
/// Kernel vectors x with m x = 0.
std::vector<std::vector<Rational>> dense_kernel(DenseMatrix m, std::size_t cols);

}  // namespace tors
