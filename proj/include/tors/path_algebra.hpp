#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tors/linalg.hpp"

namespace tors {

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  std::optional<std::size_t> vertex(const std::string& name) const;
  std::optional<std::size_t> arrow(const std::string& name) const;
  /// Throws ParseError on duplicate names or undeclared endpoints.
  void validate() const;
};

/// Arrows in order of application; a trivial path sits at source == target.
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const noexcept { return arrows.size(); }
  bool operator==(const Path&) const = default;
};

/// Length first, then the written word (last arrow first) by declaration order.
bool path_less(const Path& a, const Path& b);

struct Term {
  Rational coeff;
  Path path;
};
using Relation = std::vector<Term>;

enum class Field { Q, F2, F3 };
std::string to_string(Field f);
unsigned characteristic(Field f);

/// Element of e_left A e_right, i.e. a combination of basis paths from
/// `right` to `left`, with coefficients over the local basis of that block.
struct AlgElem {
  std::size_t left = 0;
  std::size_t right = 0;
  std::vector<Rational> c;

  bool is_zero() const;
  bool operator==(const AlgElem& o) const = default;
};

/// Basic algebra kQ/I over the rationals. Conventions: `b*a` means a then b;
/// a path from s to t lies in e_t A e_s; modules are left modules A e_i and
/// Hom(A e_i, A e_j) = e_i A e_j. The product x*y of x in e_l A e_m and
/// y in e_m A e_r is y followed by x.
class PathAlgebra {
 public:
  static PathAlgebra build(Quiver quiver, std::vector<Relation> relations, std::size_t length_cap = 64,
                           Field field = Field::Q, std::size_t path_cap = 200'000);

  const Quiver& quiver() const;
  const std::vector<Relation>& relations() const;
  Field field() const;
  std::size_t num_vertices() const;
  std::size_t dim() const;
  /// Products of this many arrows vanish.
  std::size_t nilpotency_length() const;

  /// All basis paths, sorted by path_less.
  const std::vector<Path>& basis() const;
  /// Global basis indices spanning e_left A e_right, in basis order.
  const std::vector<std::size_t>& block(std::size_t left, std::size_t right) const;
  std::size_t block_dim(std::size_t left, std::size_t right) const { return block(left, right).size(); }
  std::size_t local_index(std::size_t global) const;

  /// C[i][j] = dim e_i A e_j.
  std::vector<std::vector<std::size_t>> cartan_matrix() const;
  /// Basis of Hom(A e_i, A e_j) = e_i A e_j as algebra elements.
  std::vector<AlgElem> hom_projectives(std::size_t i, std::size_t j) const;

  AlgElem zero(std::size_t left, std::size_t right) const;
  AlgElem idempotent(std::size_t v) const;
  AlgElem basis_element(std::size_t left, std::size_t right, std::size_t local) const;
  /// Image of a combination of paths from `right` to `left`.
  AlgElem element(std::size_t left, std::size_t right, const std::vector<Term>& terms) const;
  AlgElem path_element(const Path& p) const;

  AlgElem mul(const AlgElem& x, const AlgElem& y) const;
  AlgElem add(const AlgElem& x, const AlgElem& y) const;
  AlgElem sub(const AlgElem& x, const AlgElem& y) const;
  AlgElem scaled(const AlgElem& x, const Rational& a) const;
  void add_to(AlgElem& x, const AlgElem& y, const Rational& a = 1) const;
  /// Local coordinates of the product of two local basis elements.
  const SparseVec& structure(std::size_t global_a, std::size_t global_b) const;

  Rational trivial_coeff(const AlgElem& x) const;
  bool is_unit(const AlgElem& x) const;
  /// Inverse in the local ring e_v A e_v; x must be a unit there.
  AlgElem local_inverse(const AlgElem& x) const;

  std::string path_name(const Path& p) const;
  std::string format(const AlgElem& x) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// Parses `2*b*a - 1/3*c + e1` into terms; factors are rationals, arrow names
/// and idempotents `e<vertex>`, rightmost applied first.
std::vector<Term> parse_combination(const std::string& text, const Quiver& q);

struct AlgebraSpec {
  std::string name;
  Quiver quiver;
  std::vector<Relation> relations;
  Field field = Field::Q;
  std::size_t length_cap = 64;
};

/// Line-oriented `key = value` format with `arrow` and `relation` lines.
AlgebraSpec parse_algebra_text(const std::string& text);
PathAlgebra build_algebra(const AlgebraSpec& spec);
PathAlgebra load_algebra(const std::string& path);

}  // namespace tors
