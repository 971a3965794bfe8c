#include "tors/spectrum.hpp"

#include <algorithm>
#include <filesystem>
#include <set>
#include <sstream>

#include "tors/error.hpp"
#include "tors/poset_io.hpp"
#include "tors/resources.hpp"
#include "tors/silting.hpp"

namespace tors {

std::size_t SpecModel::restrict(std::size_t p, std::size_t q, std::size_t x) const {
  if (mode == RestrictMode::Identity || p == q) return x;
  auto it = restriction.find({p, q});
  if (it == restriction.end())
    fail(ErrorCode::ValidationFailed, "no restriction table " + spec.id(p) + " -> " + spec.id(q));
  return it->second.at(x);
}

namespace {

std::string pair_name(const Poset& spec, std::size_t p, std::size_t q) {
  return "r(" + spec.id(p) + "," + spec.id(q) + ")";
}

void check_table(const SpecModel& m, std::size_t p, std::size_t q, const std::vector<std::size_t>& t,
                 std::vector<Violation>& out) {
  const Poset& fp = m.fibers[p];
  const Poset& fq = m.fibers[q];
  const std::string where = pair_name(m.spec, p, q);
  if (t.size() != fp.size()) {
    out.push_back({"table-domain", where + " has " + std::to_string(t.size()) + " entries, fiber has " +
                                       std::to_string(fp.size())});
    return;
  }
  for (std::size_t x = 0; x < t.size(); ++x)
    if (t[x] >= fq.size()) {
      out.push_back({"table-range", where + " sends " + fp.id(x) + " outside the target fiber"});
      return;
    }
  if (p == q)
    for (std::size_t x = 0; x < t.size(); ++x)
      if (t[x] != x) out.push_back({"identity", where + " moves " + fp.id(x)});
  for (std::size_t x = 0; x < fp.size(); ++x)
    for (std::size_t y = 0; y < fp.size(); ++y)
      if (fp.leq(x, y) && !fq.leq(t[x], t[y]))
        out.push_back({"monotone", where + " reverses " + fp.id(x) + " <= " + fp.id(y)});
  auto tp = fp.top(), tq = fq.top(), bp = fp.bottom(), bq = fq.bottom();
  if (tp && tq && t[*tp] != *tq) out.push_back({"top", where + " does not send top to top"});
  if (bp && bq && t[*bp] != *bq) out.push_back({"bottom", where + " does not send bottom to bottom"});
}

}  // namespace

std::vector<Violation> validate(const SpecModel& m) {
  std::vector<Violation> out;
  const Poset& spec = m.spec;
  if (m.fibers.size() != spec.size()) {
    out.push_back({"fibers", "expected one fiber per prime"});
    return out;
  }
  for (std::size_t p = 0; p < spec.size(); ++p) {
    if (m.fibers[p].size() == 0) out.push_back({"fiber-empty", "fiber " + spec.id(p) + " is empty"});
    else if (!m.fibers[p].top() || !m.fibers[p].bottom())
      out.push_back({"fiber-bounds", "fiber " + spec.id(p) + " lacks a top or a bottom"});
  }
  if (!out.empty()) return out;

  if (m.mode == RestrictMode::Identity) {
    if (!m.restriction.empty()) out.push_back({"identity-tables", "identity mode takes no restriction tables"});
    const Poset& f0 = m.fibers[0];
    for (std::size_t p = 1; p < spec.size(); ++p) {
      const Poset& f = m.fibers[p];
      if (f.size() != f0.size()) {
        out.push_back({"identity-size", "fiber " + spec.id(p) + " has " + std::to_string(f.size()) +
                                            " elements, fiber " + spec.id(0) + " has " + std::to_string(f0.size())});
        continue;
      }
      bool same = true;
      for (std::size_t x = 0; x < f.size() && same; ++x) same = f.id(x) == f0.id(x);
      if (!same || !same_relation(f, f0))
        out.push_back({"identity-labels", "fiber " + spec.id(p) + " differs from fiber " + spec.id(0)});
    }
    return out;
  }

  for (const auto& [key, table] : m.restriction) {
    auto [p, q] = key;
    if (p >= spec.size() || q >= spec.size() || !spec.leq(q, p)) {
      out.push_back({"table-pair", "restriction table for a pair that is not comparable"});
      continue;
    }
    check_table(m, p, q, table, out);
  }
  for (std::size_t p = 0; p < spec.size(); ++p)
    for (std::size_t q = 0; q < spec.size(); ++q)
      if (spec.less(q, p) && !m.restriction.count({p, q}))
        out.push_back({"table-missing", "no table for " + pair_name(spec, p, q)});
  if (!out.empty()) return out;

  for (std::size_t p = 0; p < spec.size(); ++p)
    for (std::size_t q = 0; q < spec.size(); ++q) {
      if (!spec.less(q, p)) continue;
      for (std::size_t r = 0; r < spec.size(); ++r) {
        if (!spec.less(r, q)) continue;
        const Poset& fr = m.fibers[r];
        for (std::size_t x = 0; x < m.fibers[p].size(); ++x) {
          const std::size_t via = m.restrict(q, r, m.restrict(p, q, x));
          const std::size_t direct = m.restrict(p, r, x);
          if (!fr.leq(direct, via))
            out.push_back({"composition", pair_name(spec, q, r) + " after " + pair_name(spec, p, q) + " at " +
                                              m.fibers[p].id(x) + " is not above " + pair_name(spec, p, r)});
        }
      }
    }
  return out;
}

void require_valid(const SpecModel& m) {
  auto v = validate(m);
  if (v.empty()) return;
  std::string msg;
  for (const auto& x : v) msg += "\n  " + x.rule + ": " + x.detail;
  fail(ErrorCode::ValidationFailed, "spectrum model is invalid:" + msg);
}

std::vector<Violation> validate_sim(const SimPoset& sim, const Poset& spec) {
  std::vector<Violation> out;
  if (sim.prime.size() != sim.poset.size()) {
    out.push_back({"sim-primes", "every simple needs a prime"});
    return out;
  }
  for (std::size_t s = 0; s < sim.poset.size(); ++s) {
    if (sim.prime[s] >= spec.size()) out.push_back({"sim-primes", sim.poset.id(s) + " has no prime"});
  }
  if (!out.empty()) return out;
  for (std::size_t s = 0; s < sim.poset.size(); ++s)
    for (std::size_t t = 0; t < sim.poset.size(); ++t)
      if (sim.poset.leq(s, t) && !spec.leq(sim.prime[t], sim.prime[s]))
        out.push_back({"sim-order", sim.poset.id(s) + " <= " + sim.poset.id(t) + " but " +
                                        spec.id(sim.prime[s]) + " does not contain " + spec.id(sim.prime[t])});
  return out;
}

// ---------------------------------------------------------------------------
// spectrum files

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

SpecFile parse_spec_text(const std::string& text, const FiberResolver& resolve, const Caps& caps) {
  std::vector<std::string> primes;
  std::vector<std::pair<std::string, std::string>> contains;  // (smaller, bigger)
  std::map<std::string, std::string> fiber_files;
  std::optional<RestrictMode> mode;
  struct RawTable {
    std::size_t line;
    std::string p, q;
    std::vector<std::pair<std::string, std::string>> entries;
  };
  std::vector<RawTable> tables;
  std::vector<std::pair<std::string, std::string>> simples;  // (name, prime)
  std::vector<std::pair<std::string, std::string>> sim_covers;
  std::set<std::string> seen_keys;

  std::istringstream is(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    auto w = words(line);
    const std::string& head = w[0];
    if (head == "primes" || head == "mode") {
      const auto eq = line.find('=');
      if (eq == std::string::npos) parse_fail(lineno, "expected '" + head + " = ...'");
      if (!seen_keys.insert(head).second) parse_fail(lineno, "duplicate '" + head + "'");
      const auto rhs = words(line.substr(eq + 1));
      if (head == "primes") {
        if (rhs.empty()) parse_fail(lineno, "no primes listed");
        primes = rhs;
      } else {
        if (rhs.size() != 1) parse_fail(lineno, "expected one mode");
        if (rhs[0] == "identity") mode = RestrictMode::Identity;
        else if (rhs[0] == "explicit") mode = RestrictMode::Explicit;
        else parse_fail(lineno, "unknown mode '" + rhs[0] + "'");
      }
    } else if (head == "contains") {
      if (w.size() != 3) parse_fail(lineno, "expected 'contains BIG SMALL'");
      contains.emplace_back(w[2], w[1]);
    } else if (head == "fiber") {
      const auto eq = line.find('=');
      if (w.size() < 4 || eq == std::string::npos) parse_fail(lineno, "expected 'fiber PRIME = FILE'");
      const auto lhs = words(line.substr(0, eq));
      const auto rhs = words(line.substr(eq + 1));
      if (lhs.size() != 2 || rhs.size() != 1) parse_fail(lineno, "expected 'fiber PRIME = FILE'");
      if (!fiber_files.emplace(lhs[1], rhs[0]).second) parse_fail(lineno, "duplicate fiber for " + lhs[1]);
    } else if (head == "restrict") {
      const auto colon = line.find(':');
      if (colon == std::string::npos) parse_fail(lineno, "expected 'restrict P Q : a->b, ...'");
      const auto lhs = words(line.substr(0, colon));
      if (lhs.size() != 3) parse_fail(lineno, "expected 'restrict P Q : a->b, ...'");
      RawTable t{lineno, lhs[1], lhs[2], {}};
      std::istringstream es(line.substr(colon + 1));
      for (std::string entry; std::getline(es, entry, ',');) {
        entry = trim(entry);
        const auto arrow = entry.find("->");
        if (arrow == std::string::npos) parse_fail(lineno, "entry '" + entry + "' lacks '->'");
        const std::string a = trim(entry.substr(0, arrow)), b = trim(entry.substr(arrow + 2));
        if (a.empty() || b.empty()) parse_fail(lineno, "entry '" + entry + "' is incomplete");
        t.entries.emplace_back(a, b);
      }
      tables.push_back(std::move(t));
    } else if (head == "simple") {
      if (w.size() != 4 || w[2] != "@") parse_fail(lineno, "expected 'simple NAME @ PRIME'");
      simples.emplace_back(w[1], w[3]);
    } else if (head == "sim_cover") {
      if (w.size() != 3) parse_fail(lineno, "expected 'sim_cover BIG SMALL'");
      sim_covers.emplace_back(w[2], w[1]);
    } else {
      parse_fail(lineno, "unknown directive '" + head + "'");
    }
  }

  if (primes.empty()) fail(ErrorCode::ParseError, "missing 'primes'");
  SpecFile out;
  SpecModel& m = out.model;
  std::vector<Element> els;
  for (const auto& p : primes) els.push_back({p, p});
  m.spec = Poset::from_relations(std::move(els), contains, caps);
  m.mode = mode.value_or(RestrictMode::Explicit);
  for (const auto& p : primes) {
    auto it = fiber_files.find(p);
    if (it == fiber_files.end()) fail(ErrorCode::ParseError, "no fiber for prime " + p);
    m.fibers.push_back(poset_from_json(resolve(it->second), caps));
  }
  for (const auto& [p, file] : fiber_files)
    if (!m.spec.index_of(p)) fail(ErrorCode::ParseError, "fiber for unknown prime " + p);

  for (const auto& t : tables) {
    auto p = m.spec.index_of(t.p), q = m.spec.index_of(t.q);
    if (!p || !q) parse_fail(t.line, "unknown prime");
    const Poset& fp = m.fibers[*p];
    const Poset& fq = m.fibers[*q];
    std::vector<std::size_t> map(fp.size(), fq.size());
    for (const auto& [a, b] : t.entries) {
      auto x = fp.index_of(a), y = fq.index_of(b);
      if (!x) parse_fail(t.line, "'" + a + "' is not in fiber " + t.p);
      if (!y) parse_fail(t.line, "'" + b + "' is not in fiber " + t.q);
      if (map[*x] != fq.size()) parse_fail(t.line, "'" + a + "' is mapped twice");
      map[*x] = *y;
    }
    for (std::size_t x = 0; x < map.size(); ++x)
      if (map[x] == fq.size()) parse_fail(t.line, "'" + fp.id(x) + "' is not mapped");
    if (!m.restriction.emplace(std::make_pair(*p, *q), std::move(map)).second)
      parse_fail(t.line, "duplicate table");
  }

  if (!simples.empty()) {
    SimPoset sim;
    std::vector<Element> sels;
    for (const auto& [name, prime] : simples) {
      auto p = m.spec.index_of(prime);
      if (!p) fail(ErrorCode::ParseError, "simple " + name + " over unknown prime " + prime);
      sels.push_back({name, name + "@" + prime});
      sim.prime.push_back(*p);
    }
    sim.poset = Poset::from_relations(std::move(sels), sim_covers, caps);
    out.sim = std::move(sim);
  } else if (!sim_covers.empty()) {
    fail(ErrorCode::ParseError, "sim_cover without simple declarations");
  }
  return out;
}

SpecFile load_spec_file(const std::string& path, const Caps& caps) {
  const auto dir = std::filesystem::path(path).parent_path();
  return parse_spec_text(
      read_text_file(path), [&](const std::string& f) { return read_text_file((dir / f).string()); }, caps);
}

SpecFile builtin_spec(const std::string& name, const Caps& caps) {
  return parse_spec_text(
      require_resource("spectra/" + name + ".spec"),
      [](const std::string& f) { return require_resource("spectra/" + f); }, caps);
}

// ---------------------------------------------------------------------------
// compatible tuples

std::optional<std::size_t> TupleLattice::find(const std::vector<std::size_t>& t) const {
  auto it = std::lower_bound(tuples.begin(), tuples.end(), t);
  if (it == tuples.end() || *it != t) return std::nullopt;
  return static_cast<std::size_t>(it - tuples.begin());
}

bool is_compatible(const SpecModel& m, const std::vector<std::size_t>& t) {
  for (std::size_t p = 0; p < m.spec.size(); ++p)
    for (std::size_t q = 0; q < m.spec.size(); ++q)
      if (m.spec.less(q, p) && !m.fibers[q].leq(t[q], m.restrict(p, q, t[p]))) return false;
  return true;
}

namespace {

// Primes from the largest down, so every constraint on a prime comes from
// primes already assigned.
struct Search {
  const SpecModel& m;
  std::vector<std::size_t> order;
  std::vector<std::vector<std::size_t>> above;  // above[k]: primes strictly containing order[k]
  std::size_t cap;

  Search(const SpecModel& model, std::size_t cap_) : m(model), cap(cap_) {
    const auto& lin = m.spec.linear_extension();
    order.assign(lin.rbegin(), lin.rend());
    for (std::size_t q : order) {
      std::vector<std::size_t> ps;
      for (std::size_t p = 0; p < m.spec.size(); ++p)
        if (m.spec.less(q, p)) ps.push_back(p);
      above.push_back(std::move(ps));
    }
  }

  BitSet candidates(std::size_t k, const std::vector<std::size_t>& t) const {
    const std::size_t q = order[k];
    BitSet c(m.fibers[q].size());
    c.fill();
    for (std::size_t p : above[k]) c &= m.fibers[q].down(m.restrict(p, q, t[p]));
    return c;
  }

  void run(std::size_t k, std::vector<std::size_t>& t, std::vector<std::vector<std::size_t>>& out) const {
    if (k == order.size()) {
      if (out.size() >= cap) fail(ErrorCode::SizeCap, "compatible tuples exceed the element cap");
      out.push_back(t);
      return;
    }
    candidates(k, t).for_each([&](std::size_t x) {
      t[order[k]] = x;
      run(k + 1, t, out);
    });
  }
};

TupleLattice finish_tuples(const SpecModel& m, std::vector<std::vector<std::size_t>> tuples, const Caps& caps,
                           Exec exec) {
  std::sort(tuples.begin(), tuples.end());
  Poset::check_size(tuples.size(), caps);
  std::vector<Element> els;
  for (const auto& t : tuples) {
    std::string id, label = "(";
    for (std::size_t p = 0; p < t.size(); ++p) {
      if (p) {
        id += "|";
        label += ", ";
      }
      id += m.fibers[p].id(t[p]);
      label += m.fibers[p].label(t[p]);
    }
    els.push_back({id, label + ")"});
  }
  TupleLattice out;
  out.poset = Poset::from_predicate(
      std::move(els),
      [&](std::size_t a, std::size_t b) {
        for (std::size_t p = 0; p < m.spec.size(); ++p)
          if (!m.fibers[p].leq(tuples[a][p], tuples[b][p])) return false;
        return true;
      },
      caps, exec);
  out.tuples = std::move(tuples);
  return out;
}

}  // namespace

TupleLattice enumerate_compatible_serial(const SpecModel& m, const Caps& caps) {
  require_valid(m);
  Search s(m, caps.poset_elements);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> t(m.spec.size());
  s.run(0, t, out);
  return finish_tuples(m, std::move(out), caps, Exec::Serial);
}

TupleLattice enumerate_compatible_omp(const SpecModel& m, const Caps& caps) {
  require_valid(m);
  Search s(m, caps.poset_elements);
  const std::size_t first = s.order[0];
  auto out = kernels::gather<std::vector<std::size_t>>(
      m.fibers[first].size(),
      [&](std::size_t x, std::vector<std::vector<std::size_t>>& part) {
        std::vector<std::size_t> t(m.spec.size());
        t[first] = x;
        s.run(1, t, part);
      },
      Exec::Parallel);
  if (out.size() > caps.poset_elements) fail(ErrorCode::SizeCap, "compatible tuples exceed the element cap");
  return finish_tuples(m, std::move(out), caps, Exec::Parallel);
}

TupleLattice enumerate_compatible(const SpecModel& m, const Caps& caps, Exec exec) {
  if (exec == Exec::Parallel && openmp_enabled()) return enumerate_compatible_omp(m, caps);
  return enumerate_compatible_serial(m, caps);
}

std::optional<std::vector<std::size_t>> hom_witness(const TupleLattice& t, const HomPoset& h) {
  if (t.tuples.size() != h.maps.size()) return std::nullopt;
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < h.maps.size(); ++i) index.emplace(h.maps[i], i);
  std::vector<std::size_t> f;
  for (const auto& tup : t.tuples) {
    auto it = index.find(tup);
    if (it == index.end()) return std::nullopt;
    f.push_back(it->second);
  }
  if (!is_isomorphism(t.poset, h.poset, f)) return std::nullopt;
  return f;
}

TorsClassification classify_tors(const SpecModel& m, const Caps& caps, Exec exec) {
  TorsClassification out;
  out.lattice = enumerate_compatible(m, caps, exec);
  if (m.mode == RestrictMode::Identity) {
    out.hom = hom_poset(m.spec, m.fibers.at(0), caps, exec);
    out.witness = hom_witness(out.lattice, *out.hom);
    if (!out.witness) fail(ErrorCode::Internal, "compatible tuples are not isomorphic to the monotone maps");
  }
  return out;
}

HomPoset classify_tors_hom_form(const Poset& spec, const Poset& lattice, const Caps& caps, Exec exec) {
  return hom_poset(spec, lattice, caps, exec);
}

// ---------------------------------------------------------------------------
// torsionfree, Serre, local fibers

ProductPoset classify_torf(const SpecModel& m, const Caps& caps, Exec exec) {
  require_valid(m);
  std::vector<Poset> ops;
  for (const auto& f : m.fibers) ops.push_back(opposite(f));
  ProductPoset out = product(ops, caps, exec);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < out.poset.size(); ++i) labels.push_back("perp" + out.poset.label(i));
  out.poset = out.poset.relabeled(std::move(labels));
  return out;
}

std::size_t perp_tuple(const ProductPoset& torf, const std::vector<std::size_t>& tuple) {
  if (tuple.size() != torf.sizes.size()) fail(ErrorCode::ShapeMismatch, "tuple has the wrong number of primes");
  for (std::size_t k = 0; k < tuple.size(); ++k)
    if (tuple[k] >= torf.sizes[k]) fail(ErrorCode::IndexOutOfRange, "tuple entry outside its fiber");
  return torf.encode(tuple);
}

std::vector<std::size_t> perp_inverse(const ProductPoset& torf, std::size_t index) {
  if (index >= torf.poset.size()) fail(ErrorCode::IndexOutOfRange, "not an element of the torsionfree model");
  return torf.decode(index);
}

SubsetLattice classify_serre(const SimPoset& sim, const Poset& spec, const Caps& caps, Exec exec) {
  auto v = validate_sim(sim, spec);
  if (!v.empty()) fail(ErrorCode::ValidationFailed, v.front().rule + ": " + v.front().detail);
  return down_sets(sim.poset, caps, exec);
}

SpecModel local_model(const Poset& spec) {
  SpecModel m;
  m.spec = spec;
  m.mode = RestrictMode::Identity;
  Poset two = Poset::from_relations({{"0", "0"}, {"1", "Fl"}}, {{"0", "1"}});
  m.fibers.assign(spec.size(), two);
  return m;
}

LocalFibers classify_local_fibers(const Poset& spec, const Caps& caps, Exec exec) {
  LocalFibers out{specialization_closed(spec, caps, exec), power_set(spec, caps, exec)};
  const TupleLattice t = enumerate_compatible(local_model(spec), caps, exec);
  // tuple entry 1 at p means the whole fiber, i.e. p lies in the subset
  std::vector<std::size_t> f;
  for (const auto& tup : t.tuples) {
    BitSet s(spec.size());
    for (std::size_t p = 0; p < spec.size(); ++p)
      if (tup[p] == 1) s.set(p);
    auto idx = out.tors.find(s);
    if (!idx) fail(ErrorCode::Internal, "compatible tuple is not specialization closed");
    f.push_back(*idx);
  }
  if (!is_isomorphism(t.poset, out.tors.poset, f))
    fail(ErrorCode::Internal, "specialization-closed subsets differ from compatible tuples");
  return out;
}

// ---------------------------------------------------------------------------
// Dynkin quivers

namespace {

// Each connected component of the underlying graph must be a tree of type
// A, D or E.
void require_dynkin(const PathAlgebra& alg) {
  const Quiver& q = alg.quiver();
  if (!alg.relations().empty()) fail(ErrorCode::ValidationFailed, "a Dynkin quiver algebra has no relations");
  const std::size_t n = q.vertices.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& a : q.arrows) {
    if (a.source == a.target) fail(ErrorCode::ValidationFailed, "loop " + a.name + " in a Dynkin quiver");
    adj[a.source].push_back(a.target);
    adj[a.target].push_back(a.source);
  }
  std::vector<int> comp(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> members{s};
    comp[s] = static_cast<int>(s);
    for (std::size_t k = 0; k < members.size(); ++k)
      for (std::size_t v : adj[members[k]])
        if (comp[v] < 0) {
          comp[v] = static_cast<int>(s);
          members.push_back(v);
        }
    std::size_t edges = 0;
    for (std::size_t v : members) edges += adj[v].size();
    edges /= 2;
    if (edges + 1 != members.size()) fail(ErrorCode::ValidationFailed, "underlying graph is not a forest");
    std::vector<std::size_t> branch;
    for (std::size_t v : members) {
      if (adj[v].size() > 3) fail(ErrorCode::ValidationFailed, "vertex of degree above 3");
      if (adj[v].size() == 3) branch.push_back(v);
    }
    if (branch.empty()) continue;
    if (branch.size() > 1) fail(ErrorCode::ValidationFailed, "more than one branch vertex");
    // arm lengths counted with the branch vertex, as in T_{p,q,r}
    std::vector<std::size_t> arms;
    for (std::size_t start : adj[branch[0]]) {
      std::size_t len = 2, prev = branch[0], cur = start;
      while (adj[cur].size() == 2) {
        const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    // 1/p + 1/q + 1/r > 1
    const std::size_t p = arms[0], qq = arms[1], r = arms[2];
    if (qq * r + p * r + p * qq <= p * qq * r) fail(ErrorCode::ValidationFailed, "underlying graph is not ADE");
  }
}

}  // namespace

HomPoset cambrian_classification(const PathAlgebra& alg, const Poset& spec, const Caps& caps, Exec exec) {
  require_dynkin(alg);
  const SiltingPoset t = tors_lattice(alg, caps.silting_objects, exec);
  return hom_poset(spec, t.poset, caps, exec);
}

}  // namespace tors
