#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tors/linalg.hpp"

namespace tors {

/// Polynomial over the rationals, lowest coefficient first, no trailing zeros.
using Poly = std::vector<Rational>;

Poly poly_trim(Poly p);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
/// (s, t) with s a + t b = 1; a and b must be coprime.
std::pair<Poly, Poly> poly_bezout(const Poly& a, const Poly& b);
/// Distinct rational roots with multiplicities. Roots whose numerator or
/// denominator candidates exceed 10^12 are not searched.
std::vector<std::pair<Rational, std::size_t>> rational_roots(const Poly& p);

/// Finite-dimensional algebra given by structure constants on a basis b_i.
struct FdAlgebra {
  using Vec = std::vector<Rational>;

  std::size_t dim = 0;
  /// product[i][j] = coordinates of b_i b_j.
  std::vector<std::vector<Vec>> product;
  Vec one;

  Vec mul(const Vec& x, const Vec& y) const;
  Vec eval(const Poly& p, const Vec& x) const;
  /// Monic minimal polynomial of x.
  Poly minimal_polynomial(const Vec& x) const;
};

/// Basis of the Jacobson radical: the kernel of the trace form
/// (x, y) |-> tr(left multiplication by xy). Needs characteristic 0.
std::vector<FdAlgebra::Vec> radical_basis(const FdAlgebra& a);

/// A nontrivial idempotent found from rational eigenvalues of a
/// deterministic sequence of test elements, or nullopt.
std::optional<FdAlgebra::Vec> find_idempotent(const FdAlgebra& a);

}  // namespace tors
