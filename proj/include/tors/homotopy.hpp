#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tors/complex.hpp"
#include "tors/linalg.hpp"

namespace tors {

/// Coordinates on Hom((+) A e_src, (+) A e_tgt): block (r, c) holds the local
/// basis of e_{src[c]} A e_{tgt[r]}, blocks in row-major order.
class HomLayout {
 public:
  HomLayout(const PathAlgebra& alg, std::vector<std::size_t> src, std::vector<std::size_t> tgt);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t offset(std::size_t r, std::size_t c) const { return offset_[r * src_.size() + c]; }
  std::size_t block_dim(std::size_t r, std::size_t c) const { return offset(r, c + 1) - offset(r, c); }
  const std::vector<std::size_t>& src() const noexcept { return src_; }
  const std::vector<std::size_t>& tgt() const noexcept { return tgt_; }

  /// Appends the entries of m, shifted by base, to out.
  void flatten(const MapMatrix& m, std::size_t base, std::vector<std::pair<std::size_t, Rational>>& out) const;
  /// Reads coordinates [base, base + dim) of v.
  MapMatrix unflatten(const SparseVec& v, std::size_t base) const;

 private:
  PathAlgebra alg_;
  std::vector<std::size_t> src_;
  std::vector<std::size_t> tgt_;
  // one extra slot per row so that block_dim works for the last column
  std::vector<std::size_t> offset_;
  std::size_t dim_ = 0;
};

/// dim Hom_K(P, Q[1]) as the cokernel of
/// (f, g) |-> d_Q f + g d_P : Hom(P^-1, Q^-1) + Hom(P^0, Q^0) -> Hom(P^-1, Q^0).
std::size_t hom_shift1_dim(const PathAlgebra& alg, const TwoTermComplex& p, const TwoTermComplex& q);

/// Chain maps P -> Q and the null-homotopic ones, as vectors in the
/// coordinates (Hom(P^-1, Q^-1) | Hom(P^0, Q^0)).
class ChainSpace {
 public:
  ChainSpace(const PathAlgebra& alg, const TwoTermComplex& p, const TwoTermComplex& q);

  std::size_t dim() const noexcept { return dim_; }
  SparseVec flatten(const ChainMap& f) const;
  ChainMap unflatten(const SparseVec& v) const;
  /// Basis of all chain maps.
  std::vector<SparseVec> cycles() const;
  /// Spanning set of the null-homotopic chain maps.
  std::vector<SparseVec> boundaries() const;

 private:
  PathAlgebra alg_;
  TwoTermComplex p_;
  TwoTermComplex q_;
  HomLayout minus_;
  HomLayout zero_;
  std::size_t dim_;
};

/// Basis of a subspace with coordinates, optionally modulo a second subspace.
class QuotientBasis {
 public:
  /// Keeps the members of `vectors` that are independent modulo `modulo`.
  QuotientBasis(const std::vector<SparseVec>& vectors, const std::vector<SparseVec>& modulo = {});

  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<SparseVec>& basis() const noexcept { return basis_; }
  /// Coordinates of v on the basis modulo the second subspace; nullopt when v
  /// is outside the span.
  std::optional<std::vector<Rational>> coordinates(const SparseVec& v) const;
  bool in_modulo(const SparseVec& v) const;

 private:
  EchelonBasis echelon_{true};
  EchelonBasis modulo_;
  std::vector<SparseVec> basis_;
};

/// Hom_K(P, Q): chain maps modulo homotopy, with representatives.
class HomK {
 public:
  HomK(const PathAlgebra& alg, const TwoTermComplex& p, const TwoTermComplex& q);

  std::size_t dim() const noexcept { return reps_.size(); }
  const std::vector<ChainMap>& basis() const noexcept { return reps_; }
  std::vector<Rational> coordinates(const ChainMap& f) const;
  bool is_null_homotopic(const ChainMap& f) const;

 private:
  ChainSpace space_;
  QuotientBasis quotient_;
  std::vector<ChainMap> reps_;
};

/// Basis of the chain maps P -> Q.
std::vector<ChainMap> chain_map_basis(const PathAlgebra& alg, const TwoTermComplex& p, const TwoTermComplex& q);

/// Top of a square map matrix: the rational matrix of trivial-path coefficients.
DenseMatrix top_matrix(const PathAlgebra& alg, const MapMatrix& m);
/// Both components are square with invertible top.
bool is_invertible(const PathAlgebra& alg, const ChainMap& f);
/// Inverse of a square map matrix with invertible top.
MapMatrix invert(const PathAlgebra& alg, const MapMatrix& m);

}  // namespace tors
