#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tors/path_algebra.hpp"

namespace tors {

/// Map between direct sums of indecomposable projectives. Column c is the
/// summand A e_{src[c]}, row r is A e_{tgt[r]}, and entry (r, c) is the map
/// between them, an element of e_{src[c]} A e_{tgt[r]}.
struct MapMatrix {
  std::vector<std::size_t> src;
  std::vector<std::size_t> tgt;
  std::vector<std::vector<AlgElem>> a;

  static MapMatrix zero(const PathAlgebra& alg, std::vector<std::size_t> src, std::vector<std::size_t> tgt);
  static MapMatrix identity(const PathAlgebra& alg, const std::vector<std::size_t>& vertices);

  std::size_t rows() const noexcept { return tgt.size(); }
  std::size_t cols() const noexcept { return src.size(); }
  bool is_zero() const;
  bool operator==(const MapMatrix&) const = default;
};

/// g after f.
MapMatrix compose(const PathAlgebra& alg, const MapMatrix& g, const MapMatrix& f);
MapMatrix add(const PathAlgebra& alg, const MapMatrix& x, const MapMatrix& y);
MapMatrix scaled(const PathAlgebra& alg, const MapMatrix& x, const Rational& a);
/// No entry has a nonzero coefficient on a trivial path.
bool is_radical(const PathAlgebra& alg, const MapMatrix& m);
/// Submatrix on the given rows and columns.
MapMatrix submatrix(const MapMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols);
/// [[x, 0], [0, y]]
MapMatrix block_diagonal(const PathAlgebra& alg, const MapMatrix& x, const MapMatrix& y);

/// Complex P^{-1} -> P^0 of projectives.
struct TwoTermComplex {
  std::vector<std::size_t> minus;
  std::vector<std::size_t> zero;
  MapMatrix d;

  /// 0 -> (+) A e_v
  static TwoTermComplex stalk(const PathAlgebra& alg, const std::vector<std::size_t>& vertices);
  /// (+) A e_v -> 0
  static TwoTermComplex shifted_stalk(const PathAlgebra& alg, const std::vector<std::size_t>& vertices);
  static TwoTermComplex regular(const PathAlgebra& alg);
  static TwoTermComplex regular_shifted(const PathAlgebra& alg);

  std::vector<long> p_minus(std::size_t n) const;
  std::vector<long> p_zero(std::size_t n) const;
  /// [P^0] - [P^{-1}]
  std::vector<long> g_vector(std::size_t n) const;
  std::size_t summand_count() const noexcept { return minus.size() + zero.size(); }
  bool is_zero() const noexcept { return minus.empty() && zero.empty(); }
  /// Throws ShapeMismatch if the differential does not match the terms.
  void check(const PathAlgebra& alg) const;
};

TwoTermComplex direct_sum(const PathAlgebra& alg, const TwoTermComplex& p, const TwoTermComplex& q);
TwoTermComplex direct_sum(const PathAlgebra& alg, const std::vector<TwoTermComplex>& parts);

/// Bounded complex of projectives; d[k] maps terms[k] to terms[k+1] and
/// terms[k] sits in degree lo + k.
struct ProjComplex {
  int lo = 0;
  std::vector<std::vector<std::size_t>> terms;
  std::vector<MapMatrix> d;

  static ProjComplex from_two_term(const TwoTermComplex& p);
  /// Nonzero terms only in degrees -1 and 0.
  std::optional<TwoTermComplex> as_two_term(const PathAlgebra& alg) const;
  void check(const PathAlgebra& alg) const;
};

/// C[k]: degree n holds C^{n+k}, differential multiplied by (-1)^k.
ProjComplex shift(const PathAlgebra& alg, const ProjComplex& c, int k);

/// Strips contractible summands A e_v --unit--> A e_v until every
/// differential is radical.
ProjComplex reduce(const PathAlgebra& alg, ProjComplex c);
TwoTermComplex reduce_complex(const PathAlgebra& alg, const TwoTermComplex& p);

/// Chain map between two-term complexes.
struct ChainMap {
  MapMatrix minus;
  MapMatrix zero;
};

ChainMap compose(const PathAlgebra& alg, const ChainMap& g, const ChainMap& f);
ChainMap identity_map(const PathAlgebra& alg, const TwoTermComplex& p);
ChainMap zero_map(const PathAlgebra& alg, const TwoTermComplex& p, const TwoTermComplex& q);
ChainMap add(const PathAlgebra& alg, const ChainMap& x, const ChainMap& y);
ChainMap scaled(const PathAlgebra& alg, const ChainMap& x, const Rational& a);
bool is_chain_map(const PathAlgebra& alg, const ChainMap& f, const TwoTermComplex& p, const TwoTermComplex& q);

/// Mapping cone of f: P -> Q, in degrees -2..0, with differential
/// [[-d_P, 0], [f, d_Q]].
ProjComplex cone(const PathAlgebra& alg, const ChainMap& f, const TwoTermComplex& p, const TwoTermComplex& q);

/// Literal `[e2] -> [e1] ; d = [[a]]` with vertex lists per degree and a
/// matrix of combinations, rows indexed by P^0.
TwoTermComplex parse_complex(const PathAlgebra& alg, const std::string& text);
std::string format_complex(const PathAlgebra& alg, const TwoTermComplex& p);

}  // namespace tors
