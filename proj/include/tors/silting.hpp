#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tors/complex.hpp"
#include "tors/config.hpp"
#include "tors/kernels.hpp"
#include "tors/poset.hpp"

namespace tors {

using GVector = std::vector<long>;
using GKey = std::vector<GVector>;

std::string format_gvector(const GVector& g);
/// "(1,-1)|(1,0)"
std::string format_gkey(const GKey& key);

bool is_presilting(const PathAlgebra& alg, const TwoTermComplex& p);

/// Indecomposable summands of reduce(P), with multiplicity.
std::vector<TwoTermComplex> decompose(const PathAlgebra& alg, const TwoTermComplex& p);
/// Exact test for reduced indecomposable complexes: equal terms and a chain
/// map in each direction whose composite is invertible.
bool isomorphic_indecomposables(const PathAlgebra& alg, const TwoTermComplex& x, const TwoTermComplex& y);
/// Isomorphism in the homotopy category, by matching indecomposable summands.
bool isomorphic(const PathAlgebra& alg, const TwoTermComplex& p, const TwoTermComplex& q);
/// One representative per isomorphism class of indecomposable summands.
std::vector<TwoTermComplex> basic_summands(const PathAlgebra& alg, const TwoTermComplex& p);

bool is_silting(const PathAlgebra& alg, const TwoTermComplex& p);
GKey summand_g_key(const PathAlgebra& alg, const TwoTermComplex& p);

/// Basic two-term silting complex as its indecomposable summands, sorted by
/// g-vector.
struct SiltingObject {
  std::vector<TwoTermComplex> summands;
  GKey key;

  static SiltingObject from_summands(const PathAlgebra& alg, std::vector<TwoTermComplex> summands);
  TwoTermComplex complex(const PathAlgebra& alg) const;
  std::size_t index_of(const GVector& g) const;
};

/// Completion by the cocone of a right approximation P' -> A[1]: the maximal
/// silting object containing P.
SiltingObject bongartz_complete(const PathAlgebra& alg, const TwoTermComplex& p);
/// Completion by the cone of a left approximation A -> P': the minimal
/// silting object containing P.
SiltingObject co_bongartz_complete(const PathAlgebra& alg, const TwoTermComplex& p);

enum class Direction { Left, Right };

/// Replaces summand k through a minimal approximation by the others. Left
/// mutation moves down in the silting order. Throws ConeNotTwoTerm when the
/// result leaves degrees -1..0.
SiltingObject mutate(const PathAlgebra& alg, const SiltingObject& u, std::size_t k, Direction dir);
/// The new summand only, without validating u.
TwoTermComplex mutated_summand(const PathAlgebra& alg, const std::vector<TwoTermComplex>& summands, std::size_t k,
                               Direction dir);

struct SiltingPoset {
  Poset poset;
  /// objects[i] is poset element i; sorted by key.
  std::vector<SiltingObject> objects;
  /// Pairs (i, j) with objects[j] a left mutation of objects[i].
  std::vector<std::pair<std::size_t, std::size_t>> mutations;
};

/// All basic two-term silting objects, reached from A by mutation, ordered by
/// Q <= P iff Hom(P, Q[1]) = 0. Throws CapExceeded past `cap` objects.
SiltingPoset enumerate_2silt(const PathAlgebra& alg, std::size_t cap, Exec exec = default_exec());

/// Dimension vector of H^0 = coker d.
std::vector<long> h0_dim_vector(const PathAlgebra& alg, const TwoTermComplex& p);
/// Nonzero summand H^0 dimension vectors, sorted.
std::vector<std::vector<long>> h0_summand_dims(const PathAlgebra& alg, const SiltingObject& u);

/// The silting poset relabeled by H^0 data; this is the lattice of torsion
/// classes of mod A.
SiltingPoset tors_lattice(const PathAlgebra& alg, std::size_t cap, Exec exec = default_exec());

/// Number of two-term silting objects, or nullopt when enumeration exceeds cap.
std::optional<std::size_t> tau_tilting_finite(const PathAlgebra& alg, std::size_t cap);

/// (Ae_2)^i -> (Ae_1)^(i+1) with y on the diagonal and -x below it, over an
/// algebra with arrows x, y: 1 -> 2.
TwoTermComplex presilting_family_member(const PathAlgebra& alg, std::size_t i);
std::vector<bool> check_presilting_family(const PathAlgebra& alg, std::size_t first, std::size_t last);

/// Whether H^0 of the presentation is a silting module: the minimal
/// completion of the reduced presentation has the same nonzero H^0 summands.
bool check_silting_module(const PathAlgebra& alg, const TwoTermComplex& presentation);

}  // namespace tors
