#include "tors/poset.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include "tors/error.hpp"

namespace tors {

void Poset::check_size(std::size_t n, const Caps& caps) {
  if (n > caps.poset_elements)
    fail(ErrorCode::SizeCap, "poset with " + std::to_string(n) + " elements exceeds the cap of " +
                                 std::to_string(caps.poset_elements));
}

Poset Poset::from_relations(std::vector<Element> elements,
                            const std::vector<std::pair<std::string, std::string>>& pairs, const Caps& caps) {
  const std::size_t n = elements.size();
  check_size(n, caps);
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i)
    if (!index.emplace(elements[i].id, i).second) fail(ErrorCode::DuplicateId, "duplicate id '" + elements[i].id + "'");
  auto lookup = [&](const std::string& id) {
    auto it = index.find(id);
    if (it == index.end()) fail(ErrorCode::UnknownElement, "unknown element '" + id + "'");
    return it->second;
  };
  std::vector<BitSet> up(n, BitSet(n));
  for (std::size_t i = 0; i < n; ++i) up[i].set(i);
  for (const auto& [a, b] : pairs) up[lookup(a)].set(lookup(b));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (up[i].test(k)) up[i] |= up[k];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = up[i].next(i + 1); j < n; j = up[i].next(j + 1))
      if (up[j].test(i))
        fail(ErrorCode::CycleDetected, "'" + elements[i].id + "' and '" + elements[j].id + "' lie on a cycle");
  return from_up_sets(std::move(elements), std::move(up));
}

Poset Poset::from_up_sets(std::vector<Element> elements, std::vector<BitSet> up, Exec exec) {
  const std::size_t n = elements.size();
  if (up.size() != n) fail(ErrorCode::Internal, "relation rows do not match the element count");
  {
    std::unordered_set<std::string> seen;
    for (const auto& e : elements)
      if (!seen.insert(e.id).second) fail(ErrorCode::DuplicateId, "duplicate id '" + e.id + "'");
  }
  Poset p;
  p.elements_ = std::move(elements);
  p.up_ = std::move(up);
  p.down_.assign(n, BitSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (p.up_[i].size() != n) fail(ErrorCode::Internal, "relation row has the wrong width");
    if (!p.up_[i].test(i)) fail(ErrorCode::ValidationFailed, "relation is not reflexive at '" + p.id(i) + "'");
    p.up_[i].for_each([&](std::size_t j) { p.down_[j].set(i); });
  }
  for (std::size_t i = 0; i < n; ++i) {
    BitSet both = p.up_[i] & p.down_[i];
    if (both.count() != 1) fail(ErrorCode::CycleDetected, "relation is not antisymmetric at '" + p.id(i) + "'");
  }
  auto bad = kernels::gather<std::size_t>(
      n,
      [&](std::size_t i, std::vector<std::size_t>& out) {
        bool ok = true;
        p.up_[i].for_each([&](std::size_t j) { ok = ok && p.up_[j].is_subset_of(p.up_[i]); });
        if (!ok) out.push_back(i);
      },
      exec);
  if (!bad.empty()) fail(ErrorCode::ValidationFailed, "relation is not transitive at '" + p.id(bad.front()) + "'");
  p.finish(exec);
  return p;
}

void Poset::finish(Exec exec) {
  const std::size_t n = size();
  using Lower = std::pair<std::size_t, std::vector<std::size_t>>;
  auto lowers = kernels::gather<Lower>(
      n,
      [&](std::size_t i, std::vector<Lower>& out) {
        BitSet strict = down_[i];
        strict.reset(i);
        BitSet below(n);
        strict.for_each([&](std::size_t j) {
          BitSet s = down_[j];
          s.reset(j);
          below |= s;
        });
        strict.subtract(below);
        out.emplace_back(i, strict.indices());
      },
      exec);
  lower_.assign(n, {});
  upper_.assign(n, {});
  covers_.clear();
  for (auto& [i, l] : lowers) lower_[i] = std::move(l);
  for (std::size_t i = 0; i < n; ++i)
    for (auto j : lower_[i]) {
      upper_[j].push_back(i);
      covers_.emplace_back(i, j);
    }
  for (auto& u : upper_) std::sort(u.begin(), u.end());
  std::sort(covers_.begin(), covers_.end());

  linext_.clear();
  std::vector<std::size_t> pending(n);
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < n; ++i) {
    pending[i] = lower_[i].size();
    if (pending[i] == 0) ready.push(i);
  }
  while (!ready.empty()) {
    auto i = ready.top();
    ready.pop();
    linext_.push_back(i);
    for (auto j : upper_[i])
      if (--pending[j] == 0) ready.push(j);
  }
}

std::optional<std::size_t> Poset::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (elements_[i].id == id) return i;
  return std::nullopt;
}

std::size_t Poset::require(const std::string& id) const {
  auto i = index_of(id);
  if (!i) fail(ErrorCode::UnknownElement, "unknown element '" + id + "'");
  return *i;
}

std::vector<std::size_t> Poset::maximal() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (upper_[i].empty()) out.push_back(i);
  return out;
}

std::vector<std::size_t> Poset::minimal() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (lower_[i].empty()) out.push_back(i);
  return out;
}

std::optional<std::size_t> Poset::top() const {
  auto m = maximal();
  if (m.size() != 1) return std::nullopt;
  return m.front();
}

std::optional<std::size_t> Poset::bottom() const {
  auto m = minimal();
  if (m.size() != 1) return std::nullopt;
  return m.front();
}

std::size_t Poset::relation_size() const noexcept {
  std::size_t c = 0;
  for (const auto& r : up_) c += r.count();
  return c;
}

Poset Poset::induced(const std::vector<std::size_t>& keep) const {
  std::vector<Element> els;
  std::vector<BitSet> up(keep.size(), BitSet(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a) {
    els.push_back(elements_.at(keep[a]));
    for (std::size_t b = 0; b < keep.size(); ++b)
      if (leq(keep[a], keep[b])) up[a].set(b);
  }
  return from_up_sets(std::move(els), std::move(up));
}

Poset Poset::relabeled(std::vector<std::string> labels) const {
  if (labels.size() != size()) fail(ErrorCode::ShapeMismatch, "label count does not match the poset");
  Poset p = *this;
  for (std::size_t i = 0; i < size(); ++i) p.elements_[i].label = std::move(labels[i]);
  return p;
}

Digraph hasse_quiver(const Poset& p) {
  Digraph g;
  for (const auto& e : p.elements()) g.nodes.push_back(e.id);
  g.arrows = p.covers();
  return g;
}

Poset chain(std::size_t n, const std::string& prefix) {
  std::vector<Element> els;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    els.push_back({prefix + std::to_string(i), prefix + std::to_string(i)});
    if (i > 0) pairs.emplace_back(els[i - 1].id, els[i].id);
  }
  return Poset::from_relations(std::move(els), pairs);
}

Poset antichain(std::size_t n, const std::string& prefix) {
  std::vector<Element> els;
  for (std::size_t i = 0; i < n; ++i) els.push_back({prefix + std::to_string(i), prefix + std::to_string(i)});
  return Poset::from_relations(std::move(els), {});
}

Poset pentagon() {
  return Poset::from_relations({{"0", "0"}, {"x", "x"}, {"y", "y"}, {"z", "z"}, {"1", "1"}},
                               {{"0", "x"}, {"x", "1"}, {"0", "y"}, {"y", "z"}, {"z", "1"}});
}

std::optional<std::size_t> try_meet(const Poset& p, std::size_t a, std::size_t b) {
  BitSet common = p.down(a) & p.down(b);
  for (std::size_t m = common.first(); m < p.size(); m = common.next(m + 1))
    if (common.is_subset_of(p.down(m))) return m;
  return std::nullopt;
}

std::optional<std::size_t> try_join(const Poset& p, std::size_t a, std::size_t b) {
  BitSet common = p.up(a) & p.up(b);
  for (std::size_t m = common.first(); m < p.size(); m = common.next(m + 1))
    if (common.is_subset_of(p.up(m))) return m;
  return std::nullopt;
}

std::size_t meet(const Poset& p, std::size_t a, std::size_t b) {
  auto m = try_meet(p, a, b);
  if (!m) fail(ErrorCode::NotALattice, "'" + p.id(a) + "' and '" + p.id(b) + "' have no meet");
  return *m;
}

std::size_t join(const Poset& p, std::size_t a, std::size_t b) {
  auto m = try_join(p, a, b);
  if (!m) fail(ErrorCode::NotALattice, "'" + p.id(a) + "' and '" + p.id(b) + "' have no join");
  return *m;
}

bool is_lattice(const Poset& p) {
  if (p.size() == 0) return false;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (!try_meet(p, a, b) || !try_join(p, a, b)) return false;
  return true;
}

std::optional<std::size_t> SubsetLattice::find(const BitSet& s) const {
  auto it = std::lower_bound(subsets.begin(), subsets.end(), s, [](const BitSet& x, const BitSet& y) {
    if (x.count() != y.count()) return x.count() < y.count();
    return x.indices() < y.indices();
  });
  if (it != subsets.end() && *it == s) return static_cast<std::size_t>(it - subsets.begin());
  return std::nullopt;
}

std::string subset_label(const Poset& base, const BitSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ",";
    out += base.label(i);
    first = false;
  });
  return out + "}";
}

namespace {

std::string subset_id(const Poset& base, const BitSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ",";
    out += base.id(i);
    first = false;
  });
  return out + "}";
}

// Sorted by size, then by element indices.
SubsetLattice subset_lattice(const Poset& base, std::vector<BitSet> subsets, const Caps& caps, Exec exec) {
  std::vector<std::vector<std::size_t>> idx(subsets.size());
  std::vector<std::size_t> perm(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    idx[i] = subsets[i].indices();
    perm[i] = i;
  }
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (idx[a].size() != idx[b].size()) return idx[a].size() < idx[b].size();
    return idx[a] < idx[b];
  });
  SubsetLattice out;
  std::vector<Element> els;
  for (auto i : perm) {
    els.push_back({subset_id(base, subsets[i]), subset_label(base, subsets[i])});
    out.subsets.push_back(std::move(subsets[i]));
  }
  const auto& s = out.subsets;
  out.poset = Poset::from_predicate(
      std::move(els), [&](std::size_t a, std::size_t b) { return s[a].is_subset_of(s[b]); }, caps, exec);
  return out;
}

}  // namespace

SubsetLattice down_sets(const Poset& p, const Caps& caps, Exec exec) {
  std::vector<std::vector<std::size_t>> lower(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) lower[i] = p.lower_covers(i);
  auto subsets = kernels::closed_subsets(lower, p.linear_extension(), caps.subsets, exec);
  return subset_lattice(p, std::move(subsets), caps, exec);
}

SubsetLattice specialization_closed(const Poset& p, const Caps& caps, Exec exec) {
  std::vector<std::vector<std::size_t>> lower(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) lower[i] = p.upper_covers(i);
  std::vector<std::size_t> order(p.linear_extension().rbegin(), p.linear_extension().rend());
  auto subsets = kernels::closed_subsets(lower, order, caps.subsets, exec);
  return subset_lattice(p, std::move(subsets), caps, exec);
}

SubsetLattice power_set(const Poset& p, const Caps& caps, Exec exec) {
  std::vector<std::vector<std::size_t>> lower(p.size());
  std::vector<std::size_t> order(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) order[i] = i;
  auto subsets = kernels::closed_subsets(lower, order, caps.subsets, exec);
  return subset_lattice(p, std::move(subsets), caps, exec);
}

namespace {

struct MapSearch {
  const Poset& x;
  const Poset& y;
  const std::vector<std::size_t>& order;
  std::size_t cap;
  std::vector<MonotoneMap>& out;

  void run(MonotoneMap& f, std::size_t k) {
    if (k == order.size()) {
      if (out.size() >= cap) fail(ErrorCode::SizeCap, "more than " + std::to_string(cap) + " monotone maps");
      out.push_back(f);
      return;
    }
    const std::size_t v = order[k];
    BitSet allowed(y.size());
    allowed.fill();
    for (auto w : x.lower_covers(v)) allowed &= y.up(f[w]);
    for (std::size_t t = allowed.first(); t < y.size(); t = allowed.next(t + 1)) {
      f[v] = t;
      run(f, k + 1);
    }
  }
};

}  // namespace

std::vector<MonotoneMap> monotone_maps_serial(const Poset& x, const Poset& y, const Caps& caps) {
  std::vector<MonotoneMap> out;
  MonotoneMap f(x.size(), 0);
  MapSearch{x, y, x.linear_extension(), caps.monotone_maps, out}.run(f, 0);
  return out;
}

std::vector<MonotoneMap> monotone_maps_omp(const Poset& x, const Poset& y, const Caps& caps) {
  if (x.size() == 0) return monotone_maps_serial(x, y, caps);
  const auto& order = x.linear_extension();
  // order[0] is minimal, so every value of Y is allowed for it.
  auto out = kernels::gather_omp<MonotoneMap>(y.size(), [&](std::size_t t, std::vector<MonotoneMap>& part) {
    std::vector<MonotoneMap> local;
    MonotoneMap f(x.size(), 0);
    f[order[0]] = t;
    MapSearch{x, y, order, caps.monotone_maps, local}.run(f, 1);
    for (auto& m : local) part.push_back(std::move(m));
  });
  if (out.size() > caps.monotone_maps)
    fail(ErrorCode::SizeCap, "more than " + std::to_string(caps.monotone_maps) + " monotone maps");
  return out;
}

std::vector<MonotoneMap> monotone_maps(const Poset& x, const Poset& y, const Caps& caps, Exec exec) {
  if (exec == Exec::Parallel && openmp_enabled()) return monotone_maps_omp(x, y, caps);
  return monotone_maps_serial(x, y, caps);
}

HomPoset hom_poset(const Poset& x, const Poset& y, const Caps& caps, Exec exec) {
  HomPoset h;
  h.maps = monotone_maps(x, y, caps, exec);
  std::vector<Element> els;
  for (const auto& f : h.maps) {
    std::string id = "[", label = "[";
    for (std::size_t v = 0; v < x.size(); ++v) {
      if (v) {
        id += ",";
        label += ",";
      }
      id += y.id(f[v]);
      label += y.label(f[v]);
    }
    els.push_back({id + "]", label + "]"});
  }
  const auto& maps = h.maps;
  h.poset = Poset::from_predicate(
      std::move(els),
      [&](std::size_t a, std::size_t b) {
        for (std::size_t v = 0; v < x.size(); ++v)
          if (!y.leq(maps[a][v], maps[b][v])) return false;
        return true;
      },
      caps, exec);
  return h;
}

std::vector<std::size_t> ProductPoset::decode(std::size_t index) const {
  std::vector<std::size_t> t(sizes.size());
  for (std::size_t k = sizes.size(); k-- > 0;) {
    t[k] = index % sizes[k];
    index /= sizes[k];
  }
  return t;
}

std::size_t ProductPoset::encode(const std::vector<std::size_t>& tuple) const {
  std::size_t index = 0;
  for (std::size_t k = 0; k < sizes.size(); ++k) index = index * sizes[k] + tuple.at(k);
  return index;
}

ProductPoset product(const std::vector<Poset>& factors, const Caps& caps, Exec exec) {
  ProductPoset out;
  std::size_t total = 1;
  for (const auto& f : factors) {
    out.sizes.push_back(f.size());
    if (f.size() != 0 && total > caps.poset_elements / f.size() + 1)
      fail(ErrorCode::SizeCap, "product exceeds the element cap");
    total *= f.size();
  }
  Poset::check_size(total, caps);
  std::vector<Element> els;
  std::vector<std::vector<std::size_t>> tuples;
  for (std::size_t i = 0; i < total; ++i) {
    auto t = out.decode(i);
    std::string id = "(", label = "(";
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (k) {
        id += ",";
        label += ",";
      }
      id += factors[k].id(t[k]);
      label += factors[k].label(t[k]);
    }
    els.push_back({id + ")", label + ")"});
    tuples.push_back(std::move(t));
  }
  out.poset = Poset::from_predicate(
      std::move(els),
      [&](std::size_t a, std::size_t b) {
        for (std::size_t k = 0; k < factors.size(); ++k)
          if (!factors[k].leq(tuples[a][k], tuples[b][k])) return false;
        return true;
      },
      caps, exec);
  return out;
}

Poset opposite(const Poset& p) {
  std::vector<BitSet> up;
  for (std::size_t i = 0; i < p.size(); ++i) up.push_back(p.down(i));
  return Poset::from_up_sets(p.elements(), std::move(up));
}

bool same_relation(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!(p.up(i) == q.up(i))) return false;
  return true;
}

bool is_isomorphism(const Poset& p, const Poset& q, const std::vector<std::size_t>& f) {
  if (p.size() != q.size() || f.size() != p.size()) return false;
  std::vector<bool> hit(q.size(), false);
  for (auto v : f) {
    if (v >= q.size() || hit[v]) return false;
    hit[v] = true;
  }
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.leq(a, b) != q.leq(f[a], f[b])) return false;
  return true;
}

std::optional<std::vector<std::size_t>> poset_isomorphism(const Poset& p, const Poset& q, const Caps& caps) {
  const std::size_t n = p.size();
  if (n != q.size() || p.relation_size() != q.relation_size() || p.covers().size() != q.covers().size())
    return std::nullopt;
  using Sig = std::array<std::size_t, 4>;
  auto sig = [](const Poset& r, std::size_t i) {
    return Sig{r.down(i).count(), r.up(i).count(), r.lower_covers(i).size(), r.upper_covers(i).size()};
  };
  std::vector<Sig> sp(n), sq(n);
  for (std::size_t i = 0; i < n; ++i) {
    sp[i] = sig(p, i);
    sq[i] = sig(q, i);
  }
  {
    auto a = sp, b = sq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  const auto& order = p.linear_extension();
  std::vector<std::size_t> f(n, n);
  std::vector<bool> used(n, false);
  std::size_t nodes = 0;
  std::function<bool(std::size_t)> go = [&](std::size_t k) -> bool {
    if (k == n) return true;
    if (++nodes > caps.iso_nodes) fail(ErrorCode::SizeCap, "isomorphism search exceeded its node budget");
    const std::size_t a = order[k];
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || sq[c] != sp[a]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        const std::size_t b = order[j];
        ok = p.leq(a, b) == q.leq(c, f[b]) && p.leq(b, a) == q.leq(f[b], c);
      }
      if (!ok) continue;
      f[a] = c;
      used[c] = true;
      if (go(k + 1)) return true;
      used[c] = false;
    }
    f[a] = n;
    return false;
  };
  if (!go(0)) return std::nullopt;
  return f;
}

}  // namespace tors
