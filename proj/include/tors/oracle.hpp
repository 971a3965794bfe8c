#pragma once

// Brute-force ground truth over small representations of a bound quiver over
// a prime field. Slow by design; used to cross-check the silting engine.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tors/complex.hpp"
#include "tors/config.hpp"
#include "tors/kernels.hpp"
#include "tors/path_algebra.hpp"
#include "tors/poset.hpp"

namespace tors {

/// Dense matrix over F_p, row-major, entries in [0, p).
struct FpMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> a;

  FpMatrix() = default;
  FpMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  std::uint8_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  std::uint8_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  bool operator==(const FpMatrix&) const = default;
};

/// maps[k] sends the space at source(arrow k) to the space at target(arrow k).
struct Representation {
  unsigned p = 2;
  std::vector<std::size_t> dims;
  std::vector<FpMatrix> maps;

  std::size_t total_dim() const;
  bool operator==(const Representation&) const = default;
};

std::string format_dims(const std::vector<std::size_t>& dims);
std::string describe(const PathAlgebra& alg, const Representation& m);

/// Prime of the oracle field: the algebra's own field when finite, else `fallback`.
unsigned oracle_prime(const PathAlgebra& alg, unsigned fallback = 2);

bool satisfies_relations(const PathAlgebra& alg, const Representation& m);
/// Basis of Hom(M, N) as vertexwise matrices.
std::vector<std::vector<FpMatrix>> hom_basis(const PathAlgebra& alg, const Representation& m,
                                             const Representation& n);
bool is_indecomposable(const PathAlgebra& alg, const Representation& m, const Caps& caps = {});
bool is_isomorphic(const PathAlgebra& alg, const Representation& m, const Representation& n, const Caps& caps = {});
/// Indecomposable summands with multiplicity, split by Fitting decompositions.
std::vector<Representation> decompose(const PathAlgebra& alg, const Representation& m, const Caps& caps = {});
Representation direct_sum(const Representation& m, const Representation& n);

/// One canonical representative per isomorphism class, sorted by dimension
/// vector then matrix entries; the representative is the smallest member.
std::vector<Representation> enumerate_indecomposables(const PathAlgebra& alg, unsigned p,
                                                      const std::vector<std::size_t>& dim_bound,
                                                      const Caps& caps = {}, Exec exec = default_exec());
std::vector<Representation> enumerate_indecomposables(const PathAlgebra& alg, unsigned p, std::size_t dim_bound,
                                                      const Caps& caps = {}, Exec exec = default_exec());

/// dim Ext^1(M, N) as cocycles modulo coboundaries of the extension block.
std::size_t ext_dim(const PathAlgebra& alg, const Representation& m, const Representation& n);
/// Whether N is a quotient of some M^k.
bool in_fac(const PathAlgebra& alg, const Representation& m, const Representation& n);
/// Whether there is an epimorphism (resp. monomorphism) M -> N.
bool has_epi(const PathAlgebra& alg, const Representation& m, const Representation& n, const Caps& caps = {});
bool has_mono(const PathAlgebra& alg, const Representation& n, const Representation& m, const Caps& caps = {});

/// H^0 of a complex of projectives, reduced to F_p. Throws ShapeMismatch when
/// the reduction changes the dimension vector.
Representation h0_representation(const PathAlgebra& alg, const TwoTermComplex& c, unsigned p);
Representation projective_representation(const PathAlgebra& alg, std::size_t vertex, unsigned p);

struct OracleLattice {
  Poset poset;
  std::vector<Representation> indecomposables;
  /// members[i] is the class set of poset element i.
  std::vector<BitSet> members;
};

/// Subsets of indecomposables closed under quotients of sums of at most two
/// members and under extensions of two members, ordered by inclusion.
/// Throws NotRepFiniteWithinBound when a middle term has a summand outside
/// the enumerated classes.
OracleLattice brute_torsion_classes(const PathAlgebra& alg, unsigned p, std::size_t dim_bound,
                                    const Caps& caps = {}, Exec exec = default_exec());
/// As brute_torsion_classes, also closed under submodules.
OracleLattice brute_serre(const PathAlgebra& alg, unsigned p, std::size_t dim_bound, const Caps& caps = {},
                          Exec exec = default_exec());

}  // namespace tors
