#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tors/config.hpp"
#include "tors/kernels.hpp"
#include "tors/path_algebra.hpp"
#include "tors/poset.hpp"

namespace tors {

enum class RestrictMode { Identity, Explicit };

/// Finite spectrum with one fiber lattice per prime. spec.leq(q, p) means
/// q is contained in p. Restriction tables go from the larger prime to the
/// smaller one.
struct SpecModel {
  Poset spec;
  std::vector<Poset> fibers;
  RestrictMode mode = RestrictMode::Identity;
  /// Explicit mode only: key (p, q) with q < p, value maps fiber(p) to fiber(q).
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> restriction;

  /// r_{p,q}(x) for spec.leq(q, p). Identity mode and p == q return x.
  std::size_t restrict(std::size_t p, std::size_t q, std::size_t x) const;
};

struct Violation {
  std::string rule;
  std::string detail;
};

std::vector<Violation> validate(const SpecModel& model);
/// Throws ValidationFailed listing every violation.
void require_valid(const SpecModel& model);

/// Simple modules tagged by the prime they live over.
struct SimPoset {
  Poset poset;
  std::vector<std::size_t> prime;
};

/// S <= T requires prime(T) <= prime(S) in spec.
std::vector<Violation> validate_sim(const SimPoset& sim, const Poset& spec);

/// Parsed spectrum file; the simple-module section is optional.
struct SpecFile {
  SpecModel model;
  std::optional<SimPoset> sim;
};

/// Resolves a fiber file name to its JSON text.
using FiberResolver = std::function<std::string(const std::string&)>;

SpecFile parse_spec_text(const std::string& text, const FiberResolver& resolve, const Caps& caps = {});
/// Fiber files are read relative to the spectrum file's directory.
SpecFile load_spec_file(const std::string& path, const Caps& caps = {});
/// Builtin spectrum under data/spectra.
SpecFile builtin_spec(const std::string& name, const Caps& caps = {});

/// Compatible tuples ordered componentwise; tuples[i] is poset element i and
/// lists one fiber index per prime. Sorted lexicographically.
struct TupleLattice {
  Poset poset;
  std::vector<std::vector<std::size_t>> tuples;

  std::optional<std::size_t> find(const std::vector<std::size_t>& t) const;
};

bool is_compatible(const SpecModel& model, const std::vector<std::size_t>& tuple);

TupleLattice enumerate_compatible(const SpecModel& model, const Caps& caps = {}, Exec exec = default_exec());
TupleLattice enumerate_compatible_serial(const SpecModel& model, const Caps& caps = {});
TupleLattice enumerate_compatible_omp(const SpecModel& model, const Caps& caps = {});

struct TorsClassification {
  TupleLattice lattice;
  /// Identity mode: element i corresponds to hom.maps[witness[i]].
  std::optional<HomPoset> hom;
  std::optional<std::vector<std::size_t>> witness;
};

/// Compatible tuples as the model of the torsion classes. In Identity mode
/// also builds and checks the isomorphism to Hom(spec, fiber).
TorsClassification classify_tors(const SpecModel& model, const Caps& caps = {}, Exec exec = default_exec());

/// Tuple-as-function bijection from an Identity-mode lattice to hom_poset,
/// or nothing when it is not an order isomorphism.
std::optional<std::vector<std::size_t>> hom_witness(const TupleLattice& t, const HomPoset& h);

HomPoset classify_tors_hom_form(const Poset& spec, const Poset& lattice, const Caps& caps = {},
                                Exec exec = default_exec());

/// Product of the opposite fibers. Element labels are "perp" of tuple labels.
ProductPoset classify_torf(const SpecModel& model, const Caps& caps = {}, Exec exec = default_exec());
/// Index in classify_torf of the componentwise perpendicular of a tuple.
std::size_t perp_tuple(const ProductPoset& torf, const std::vector<std::size_t>& tuple);
std::vector<std::size_t> perp_inverse(const ProductPoset& torf, std::size_t index);

SubsetLattice classify_serre(const SimPoset& sim, const Poset& spec, const Caps& caps = {},
                             Exec exec = default_exec());

struct LocalFibers {
  SubsetLattice tors;
  SubsetLattice torf;
};

/// Identity-mode model with a 2-element fiber at every prime.
SpecModel local_model(const Poset& spec);
/// Specialization-closed subsets and all subsets; throws Internal if the first
/// differs from the compatible tuples of local_model(spec).
LocalFibers classify_local_fibers(const Poset& spec, const Caps& caps = {}, Exec exec = default_exec());

/// Hom(spec, tors kQ) for an acyclic quiver algebra kQ.
HomPoset cambrian_classification(const PathAlgebra& alg, const Poset& spec, const Caps& caps = {},
                                 Exec exec = default_exec());

}  // namespace tors
