#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tors/bitset.hpp"
#include "tors/config.hpp"
#include "tors/kernels.hpp"

namespace tors {

struct Element {
  std::string id;
  std::string label;
};

/// Finite partially ordered set with the full relation stored as bit rows.
/// Element order is the construction order and is never permuted.
class Poset {
 public:
  Poset() = default;

  /// pairs (a, b) mean a <= b; the order is their reflexive-transitive closure.
  static Poset from_relations(std::vector<Element> elements,
                              const std::vector<std::pair<std::string, std::string>>& pairs,
                              const Caps& caps = {});
  /// up[i] = { j : i <= j }. The relation must already be a partial order.
  static Poset from_up_sets(std::vector<Element> elements, std::vector<BitSet> up,
                            Exec exec = default_exec());
  /// leq(i, j) decides i <= j; evaluated for every ordered pair.
  template <class Leq>
  static Poset from_predicate(std::vector<Element> elements, Leq&& leq, const Caps& caps = {},
                              Exec exec = default_exec()) {
    check_size(elements.size(), caps);
    auto rows = kernels::relation_rows(elements.size(), leq, exec);
    return from_up_sets(std::move(elements), std::move(rows), exec);
  }

  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  const std::string& id(std::size_t i) const { return elements_[i].id; }
  const std::string& label(std::size_t i) const { return elements_[i].label; }
  std::optional<std::size_t> index_of(const std::string& id) const;
  std::size_t require(const std::string& id) const;

  bool leq(std::size_t i, std::size_t j) const noexcept { return up_[i].test(j); }
  bool less(std::size_t i, std::size_t j) const noexcept { return i != j && up_[i].test(j); }
  bool comparable(std::size_t i, std::size_t j) const noexcept { return leq(i, j) || leq(j, i); }
  const BitSet& up(std::size_t i) const noexcept { return up_[i]; }
  const BitSet& down(std::size_t i) const noexcept { return down_[i]; }

  /// Cover pairs (bigger, smaller), sorted. These are the Hasse arrows.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const noexcept { return covers_; }
  const std::vector<std::size_t>& lower_covers(std::size_t i) const noexcept { return lower_[i]; }
  const std::vector<std::size_t>& upper_covers(std::size_t i) const noexcept { return upper_[i]; }

  /// Every element after all of its lower bounds; ties broken by index.
  const std::vector<std::size_t>& linear_extension() const noexcept { return linext_; }

  std::vector<std::size_t> maximal() const;
  std::vector<std::size_t> minimal() const;
  std::optional<std::size_t> top() const;
  std::optional<std::size_t> bottom() const;

  /// Number of pairs (i, j) with i <= j, reflexive pairs included.
  std::size_t relation_size() const noexcept;

  Poset induced(const std::vector<std::size_t>& keep) const;
  Poset relabeled(std::vector<std::string> labels) const;

  static void check_size(std::size_t n, const Caps& caps);

 private:
  void finish(Exec exec);

  std::vector<Element> elements_;
  std::vector<BitSet> up_;
  std::vector<BitSet> down_;
  std::vector<std::vector<std::size_t>> lower_;
  std::vector<std::vector<std::size_t>> upper_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<std::size_t> linext_;
};

/// Hasse quiver: arrows from the larger to the smaller element of each cover.
struct Digraph {
  std::vector<std::string> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
};
Digraph hasse_quiver(const Poset& p);

Poset chain(std::size_t n, const std::string& prefix = "c");
Poset antichain(std::size_t n, const std::string& prefix = "a");
/// Pentagon lattice N5: 0 < x < 1, 0 < y < z < 1.
Poset pentagon();

// Lattice operations. meet/join throw NotALattice when the bound is missing.
bool is_lattice(const Poset& p);
std::optional<std::size_t> try_meet(const Poset& p, std::size_t a, std::size_t b);
std::optional<std::size_t> try_join(const Poset& p, std::size_t a, std::size_t b);
std::size_t meet(const Poset& p, std::size_t a, std::size_t b);
std::size_t join(const Poset& p, std::size_t a, std::size_t b);

/// Subsets of a base poset ordered by inclusion; subsets[i] belongs to poset element i.
struct SubsetLattice {
  Poset poset;
  std::vector<BitSet> subsets;

  std::optional<std::size_t> find(const BitSet& s) const;
};

std::string subset_label(const Poset& base, const BitSet& s);

SubsetLattice down_sets(const Poset& p, const Caps& caps = {}, Exec exec = default_exec());
/// Up-closed subsets, i.e. specialization-closed subsets of a spectrum ordered by inclusion.
SubsetLattice specialization_closed(const Poset& p, const Caps& caps = {}, Exec exec = default_exec());
SubsetLattice power_set(const Poset& p, const Caps& caps = {}, Exec exec = default_exec());

/// A monotone map X -> Y as the image index of each element of X.
using MonotoneMap = std::vector<std::size_t>;

/// All order-preserving maps, depth first along X's linear extension with
/// Y's indices increasing.
std::vector<MonotoneMap> monotone_maps(const Poset& x, const Poset& y, const Caps& caps = {},
                                       Exec exec = default_exec());
std::vector<MonotoneMap> monotone_maps_serial(const Poset& x, const Poset& y, const Caps& caps = {});
std::vector<MonotoneMap> monotone_maps_omp(const Poset& x, const Poset& y, const Caps& caps = {});

struct HomPoset {
  Poset poset;
  std::vector<MonotoneMap> maps;
};
HomPoset hom_poset(const Poset& x, const Poset& y, const Caps& caps = {}, Exec exec = default_exec());

struct ProductPoset {
  Poset poset;
  std::vector<std::size_t> sizes;
  /// Mixed-radix index <-> component tuple, last component fastest.
  std::vector<std::size_t> decode(std::size_t index) const;
  std::size_t encode(const std::vector<std::size_t>& tuple) const;
};
ProductPoset product(const std::vector<Poset>& factors, const Caps& caps = {},
                     Exec exec = default_exec());

Poset opposite(const Poset& p);

/// Order isomorphism as image indices, or nothing.
std::optional<std::vector<std::size_t>> poset_isomorphism(const Poset& p, const Poset& q,
                                                          const Caps& caps = {});
bool is_isomorphism(const Poset& p, const Poset& q, const std::vector<std::size_t>& f);
bool same_relation(const Poset& p, const Poset& q);

}  // namespace tors
