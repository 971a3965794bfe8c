#include "tors/silting.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "tors/error.hpp"
#include "tors/fdalg.hpp"
#include "tors/homotopy.hpp"

namespace tors {

std::string format_gvector(const GVector& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
  return s + ")";
}

std::string format_gkey(const GKey& key) {
  std::string s;
  for (std::size_t i = 0; i < key.size(); ++i) s += (i ? "|" : "") + format_gvector(key[i]);
  return s;
}

bool is_presilting(const PathAlgebra& alg, const TwoTermComplex& p) { return hom_shift1_dim(alg, p, p) == 0; }

namespace {

std::vector<std::size_t> pick(const std::vector<std::size_t>& v, const std::vector<std::size_t>& idx) {
  std::vector<std::size_t> out;
  for (auto i : idx) out.push_back(v[i]);
  return out;
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// Splits along connected components of the nonzero pattern of d.
std::vector<TwoTermComplex> split_components(const TwoTermComplex& p) {
  const std::size_t nc = p.minus.size(), nr = p.zero.size();
  std::vector<std::size_t> parent(nc + nr);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c)
      if (!p.d.a[r][c].is_zero()) parent[find(c)] = find(nc + r);
  std::map<std::size_t, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> groups;
  std::vector<std::size_t> order;
  for (std::size_t x = 0; x < nc + nr; ++x) {
    const std::size_t root = find(x);
    if (!groups.count(root)) order.push_back(root);
    if (x < nc) groups[root].first.push_back(x);
    else groups[root].second.push_back(x - nc);
  }
  std::vector<TwoTermComplex> out;
  for (auto root : order) {
    const auto& [cols, rows] = groups[root];
    TwoTermComplex q{pick(p.minus, cols), pick(p.zero, rows), submatrix(p.d, rows, cols)};
    out.push_back(std::move(q));
  }
  return out;
}

struct Piece {
  MapMatrix inc;   // summand -> P^j
  MapMatrix proj;  // P^j -> summand
  std::vector<std::size_t> vertices;
};

// Image of the idempotent e on one degree, with inclusion and projection.
Piece image_of(const PathAlgebra& alg, const MapMatrix& e) {
  const DenseMatrix top = top_matrix(alg, e);
  const auto cols = dense_pivot_columns(top);
  DenseMatrix tr(cols.size(), std::vector<Rational>(e.rows()));
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t r = 0; r < e.rows(); ++r) tr[i][r] = top[r][cols[i]];
  const auto rows = dense_pivot_columns(tr);
  const auto all = all_indices(e.rows());
  Piece piece;
  piece.vertices = pick(e.src, cols);
  piece.inc = submatrix(e, all, cols);
  const MapMatrix rho = submatrix(e, rows, cols);
  piece.proj = compose(alg, invert(alg, rho), submatrix(e, rows, all));
  return piece;
}

TwoTermComplex summand_of(const PathAlgebra& alg, const TwoTermComplex& p, const ChainMap& e) {
  Piece m = image_of(alg, e.minus);
  Piece z = image_of(alg, e.zero);
  return {m.vertices, z.vertices, compose(alg, z.proj, compose(alg, p.d, m.inc))};
}

// End_C(P) as an abstract algebra on a basis of chain maps.
struct ChainEnd {
  std::vector<ChainMap> basis;
  FdAlgebra algebra;
};

ChainEnd chain_endomorphisms(const PathAlgebra& alg, const TwoTermComplex& p) {
  ChainSpace space(alg, p, p);
  const auto cycles = space.cycles();
  QuotientBasis coords(cycles);
  ChainEnd out;
  for (const auto& v : cycles) out.basis.push_back(space.unflatten(v));
  auto& a = out.algebra;
  a.dim = cycles.size();
  a.product.assign(a.dim, std::vector<FdAlgebra::Vec>(a.dim));
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      a.product[i][j] = *coords.coordinates(space.flatten(compose(alg, out.basis[i], out.basis[j])));
  a.one = *coords.coordinates(space.flatten(identity_map(alg, p)));
  return out;
}

ChainMap combination(const PathAlgebra& alg, const std::vector<ChainMap>& basis, const std::vector<Rational>& c,
                     const TwoTermComplex& p, const TwoTermComplex& q) {
  ChainMap f = zero_map(alg, p, q);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (sgn(c[i]) != 0) f = add(alg, f, scaled(alg, basis[i], c[i]));
  return f;
}

void decompose_into(const PathAlgebra& alg, const TwoTermComplex& p, std::vector<TwoTermComplex>& out) {
  if (p.summand_count() <= 1) {
    out.push_back(p);
    return;
  }
  ChainEnd end = chain_endomorphisms(alg, p);
  if (end.algebra.dim <= 1 || end.algebra.dim - radical_basis(end.algebra).size() <= 1) {
    out.push_back(p);
    return;
  }
  auto e = find_idempotent(end.algebra);
  if (!e) {
    out.push_back(p);
    return;
  }
  const ChainMap eps = combination(alg, end.basis, *e, p, p);
  const ChainMap rest = add(alg, identity_map(alg, p), scaled(alg, eps, -1));
  for (const auto& part : {summand_of(alg, p, eps), summand_of(alg, p, rest)})
    for (const auto& c : split_components(part)) decompose_into(alg, c, out);
}

bool same_terms(const TwoTermComplex& x, const TwoTermComplex& y) {
  auto a = x.minus, b = y.minus, c = x.zero, d = y.zero;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::sort(c.begin(), c.end());
  std::sort(d.begin(), d.end());
  return a == b && c == d;
}

}  // namespace

std::vector<TwoTermComplex> decompose(const PathAlgebra& alg, const TwoTermComplex& p) {
  std::vector<TwoTermComplex> out;
  for (const auto& c : split_components(reduce_complex(alg, p))) decompose_into(alg, c, out);
  return out;
}

bool isomorphic_indecomposables(const PathAlgebra& alg, const TwoTermComplex& x, const TwoTermComplex& y) {
  if (!same_terms(x, y)) return false;
  const auto f = chain_map_basis(alg, x, y);
  const auto g = chain_map_basis(alg, y, x);
  for (const auto& a : f)
    for (const auto& b : g)
      if (is_invertible(alg, compose(alg, b, a))) return true;
  return false;
}

bool isomorphic(const PathAlgebra& alg, const TwoTermComplex& p, const TwoTermComplex& q) {
  auto xs = decompose(alg, p);
  auto ys = decompose(alg, q);
  if (xs.size() != ys.size()) return false;
  std::vector<bool> used(ys.size(), false);
  for (const auto& x : xs) {
    bool found = false;
    for (std::size_t j = 0; j < ys.size() && !found; ++j)
      if (!used[j] && isomorphic_indecomposables(alg, x, ys[j])) used[j] = found = true;
    if (!found) return false;
  }
  return true;
}

std::vector<TwoTermComplex> basic_summands(const PathAlgebra& alg, const TwoTermComplex& p) {
  std::vector<TwoTermComplex> out;
  for (auto& x : decompose(alg, p)) {
    bool seen = false;
    for (const auto& y : out)
      if (isomorphic_indecomposables(alg, x, y)) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(std::move(x));
  }
  return out;
}

bool is_silting(const PathAlgebra& alg, const TwoTermComplex& p) {
  if (!is_presilting(alg, p)) return false;
  return basic_summands(alg, p).size() == alg.num_vertices();
}

GKey summand_g_key(const PathAlgebra& alg, const TwoTermComplex& p) {
  GKey key;
  for (const auto& x : decompose(alg, p)) key.push_back(x.g_vector(alg.num_vertices()));
  std::sort(key.begin(), key.end());
  return key;
}

SiltingObject SiltingObject::from_summands(const PathAlgebra& alg, std::vector<TwoTermComplex> summands) {
  const std::size_t n = alg.num_vertices();
  std::sort(summands.begin(), summands.end(),
            [n](const TwoTermComplex& a, const TwoTermComplex& b) { return a.g_vector(n) < b.g_vector(n); });
  SiltingObject u;
  for (const auto& x : summands) u.key.push_back(x.g_vector(n));
  u.summands = std::move(summands);
  return u;
}

TwoTermComplex SiltingObject::complex(const PathAlgebra& alg) const { return direct_sum(alg, summands); }

std::size_t SiltingObject::index_of(const GVector& g) const {
  auto it = std::lower_bound(key.begin(), key.end(), g);
  if (it == key.end() || *it != g) fail(ErrorCode::IndexOutOfRange, "no summand with g-vector " + format_gvector(g));
  return static_cast<std::size_t>(it - key.begin());
}

namespace {

// [f_1 ... f_m]: (+) P_i -> Q
ChainMap hstack(const PathAlgebra& alg, const std::vector<ChainMap>& fs, const TwoTermComplex& q) {
  ChainMap out{MapMatrix::zero(alg, {}, q.minus), MapMatrix::zero(alg, {}, q.zero)};
  for (const auto& f : fs) {
    for (auto [dst, src] : {std::pair{&out.minus, &f.minus}, std::pair{&out.zero, &f.zero}}) {
      dst->src.insert(dst->src.end(), src->src.begin(), src->src.end());
      for (std::size_t r = 0; r < dst->rows(); ++r)
        dst->a[r].insert(dst->a[r].end(), src->a[r].begin(), src->a[r].end());
    }
  }
  return out;
}

// [f_1; ...; f_m]: P -> (+) Q_i
ChainMap vstack(const PathAlgebra& alg, const std::vector<ChainMap>& fs, const TwoTermComplex& p) {
  ChainMap out{MapMatrix::zero(alg, p.minus, {}), MapMatrix::zero(alg, p.zero, {})};
  for (const auto& f : fs) {
    for (auto [dst, src] : {std::pair{&out.minus, &f.minus}, std::pair{&out.zero, &f.zero}}) {
      dst->tgt.insert(dst->tgt.end(), src->tgt.begin(), src->tgt.end());
      dst->a.insert(dst->a.end(), src->a.begin(), src->a.end());
    }
  }
  return out;
}

TwoTermComplex two_term_or_throw(const PathAlgebra& alg, const ProjComplex& c) {
  auto t = reduce(alg, c).as_two_term(alg);
  if (!t) fail(ErrorCode::ConeNotTwoTerm, "reduced cone has terms outside degrees -1..0");
  return *t;
}

SiltingObject merge_basic(const PathAlgebra& alg, const TwoTermComplex& a, const TwoTermComplex& b) {
  return SiltingObject::from_summands(alg, basic_summands(alg, direct_sum(alg, a, b)));
}

TwoTermComplex require_presilting(const PathAlgebra& alg, const TwoTermComplex& p) {
  p.check(alg);
  TwoTermComplex r = reduce_complex(alg, p);
  if (!is_presilting(alg, r)) fail(ErrorCode::NotPresilting, "complex has Hom(P, P[1]) != 0");
  return r;
}

}  // namespace

SiltingObject bongartz_complete(const PathAlgebra& alg, const TwoTermComplex& p) {
  const TwoTermComplex r = require_presilting(alg, p);
  const TwoTermComplex target = TwoTermComplex::regular_shifted(alg);
  HomK hom(alg, r, target);
  std::vector<TwoTermComplex> copies(hom.dim(), r);
  const TwoTermComplex sum = direct_sum(alg, copies);
  const ChainMap g = hstack(alg, hom.basis(), target);
  // cocone(g) = cone(g)[-1]
  const TwoTermComplex b = two_term_or_throw(alg, shift(alg, cone(alg, g, sum, target), -1));
  return merge_basic(alg, r, b);
}

SiltingObject co_bongartz_complete(const PathAlgebra& alg, const TwoTermComplex& p) {
  const TwoTermComplex r = require_presilting(alg, p);
  const TwoTermComplex source = TwoTermComplex::regular(alg);
  HomK hom(alg, source, r);
  std::vector<TwoTermComplex> copies(hom.dim(), r);
  const TwoTermComplex sum = direct_sum(alg, copies);
  const ChainMap f = vstack(alg, hom.basis(), source);
  const TwoTermComplex c = two_term_or_throw(alg, cone(alg, f, source, sum));
  return merge_basic(alg, r, c);
}

namespace {

// Radical of End_K(X) for indecomposable X, as chain maps.
std::vector<ChainMap> end_radical(const PathAlgebra& alg, const HomK& end, const TwoTermComplex& x) {
  if (end.dim() <= 1) return {};
  FdAlgebra a;
  a.dim = end.dim();
  a.product.assign(a.dim, std::vector<FdAlgebra::Vec>(a.dim));
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      a.product[i][j] = end.coordinates(compose(alg, end.basis()[i], end.basis()[j]));
  a.one = end.coordinates(identity_map(alg, x));
  std::vector<ChainMap> out;
  for (const auto& v : radical_basis(a)) out.push_back(combination(alg, end.basis(), v, x, x));
  return out;
}

// Lazily computed Hom_K spaces and endomorphism radicals between the
// complexes of a store. Safe to share between threads; the store must not
// change while the cache is in use concurrently.
class HomCache {
 public:
  HomCache(const PathAlgebra& alg, const std::vector<TwoTermComplex>& store) : alg_(alg), store_(store) {}

  std::shared_ptr<const HomK> hom(std::size_t a, std::size_t b) {
    {
      std::lock_guard<std::mutex> lock(m_);
      auto it = hom_.find({a, b});
      if (it != hom_.end()) return it->second;
    }
    auto h = std::make_shared<const HomK>(alg_, store_[a], store_[b]);
    std::lock_guard<std::mutex> lock(m_);
    return hom_.emplace(std::pair{a, b}, std::move(h)).first->second;
  }

  std::shared_ptr<const std::vector<ChainMap>> radical(std::size_t a) {
    {
      std::lock_guard<std::mutex> lock(m_);
      auto it = rad_.find(a);
      if (it != rad_.end()) return it->second;
    }
    auto end = hom(a, a);
    auto r = std::make_shared<const std::vector<ChainMap>>(end_radical(alg_, *end, store_[a]));
    std::lock_guard<std::mutex> lock(m_);
    return rad_.emplace(a, std::move(r)).first->second;
  }

  // Radical morphisms U_l -> U_j between indecomposables; entries live as long as the cache.
  const std::vector<ChainMap>& rad(std::size_t l, std::size_t j) {
    return l == j ? *radical(j) : hom(l, j)->basis();
  }

  const TwoTermComplex& at(std::size_t a) const { return store_[a]; }

 private:
  PathAlgebra alg_;
  const std::vector<TwoTermComplex>& store_;
  std::mutex m_;
  std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<const HomK>> hom_;
  std::map<std::size_t, std::shared_ptr<const std::vector<ChainMap>>> rad_;
};

// Maps in a basis of `hom` that stay independent modulo the span of `through`.
std::vector<ChainMap> top_maps(const HomK& hom, const std::vector<ChainMap>& through) {
  std::vector<SparseVec> units, modulo;
  for (std::size_t i = 0; i < hom.dim(); ++i) units.push_back(SparseVec::unit(i));
  for (const auto& f : through) modulo.push_back(from_dense(hom.coordinates(f)));
  QuotientBasis q(units, modulo);
  std::vector<ChainMap> out;
  for (const auto& v : q.basis()) out.push_back(hom.basis()[v.e.front().first]);
  return out;
}

// ids index the cache store; the result replaces ids[k].
TwoTermComplex mutate_in(const PathAlgebra& alg, HomCache& cache, const std::vector<std::size_t>& ids,
                         std::size_t k, Direction dir) {
  if (k >= ids.size()) fail(ErrorCode::IndexOutOfRange, "summand index " + std::to_string(k) + " out of range");
  const std::size_t x = ids[k];
  std::vector<std::size_t> others;
  for (std::size_t j = 0; j < ids.size(); ++j)
    if (j != k) others.push_back(ids[j]);

  std::vector<ChainMap> maps;
  std::vector<TwoTermComplex> parts;
  const bool left = dir == Direction::Left;
  for (auto j : others) {
    // maps X -> U_j (left) or U_j -> X (right) factoring through a radical map
    std::vector<ChainMap> through;
    for (auto l : others) {
      if (left) {
        const auto& rad = cache.rad(l, j);
        if (rad.empty()) continue;
        for (const auto& h : cache.hom(x, l)->basis())
          for (const auto& r : rad) through.push_back(compose(alg, r, h));
      } else {
        const auto& rad = cache.rad(j, l);
        if (rad.empty()) continue;
        for (const auto& h : cache.hom(l, x)->basis())
          for (const auto& r : rad) through.push_back(compose(alg, h, r));
      }
    }
    for (auto& f : top_maps(left ? *cache.hom(x, j) : *cache.hom(j, x), through)) {
      maps.push_back(std::move(f));
      parts.push_back(cache.at(j));
    }
  }
  const TwoTermComplex e = direct_sum(alg, parts);
  const TwoTermComplex& xc = cache.at(x);
  const ProjComplex c = left ? cone(alg, vstack(alg, maps, xc), xc, e)
                             : shift(alg, cone(alg, hstack(alg, maps, xc), e, xc), -1);
  auto y = two_term_or_throw(alg, c);
  if (y.is_zero()) fail(ErrorCode::Internal, "mutation produced a zero summand");
  return y;
}

}  // namespace

TwoTermComplex mutated_summand(const PathAlgebra& alg, const std::vector<TwoTermComplex>& summands, std::size_t k,
                               Direction dir) {
  HomCache cache(alg, summands);
  std::vector<std::size_t> ids(summands.size());
  std::iota(ids.begin(), ids.end(), 0);
  return mutate_in(alg, cache, ids, k, dir);
}

SiltingObject mutate(const PathAlgebra& alg, const SiltingObject& u, std::size_t k, Direction dir) {
  if (k >= u.summands.size()) fail(ErrorCode::IndexOutOfRange, "summand index " + std::to_string(k) + " out of range");
  if (u.summands.size() != alg.num_vertices() || !is_presilting(alg, u.complex(alg)))
    fail(ErrorCode::NotSilting, "mutation needs a silting object");
  auto summands = u.summands;
  summands[k] = mutated_summand(alg, u.summands, k, dir);
  return SiltingObject::from_summands(alg, std::move(summands));
}

SiltingPoset enumerate_2silt(const PathAlgebra& alg, std::size_t cap, Exec exec) {
  const std::size_t n = alg.num_vertices();
  // summand registry keyed by g-vector; presilting summands are determined by it
  std::map<GVector, std::size_t> summand_id;
  std::vector<TwoTermComplex> summands;
  auto register_summand = [&](const TwoTermComplex& x) {
    auto g = x.g_vector(n);
    auto [it, fresh] = summand_id.emplace(g, summands.size());
    if (fresh) summands.push_back(x);
    return it->second;
  };
  HomCache cache(alg, summands);
  // objects as summand id lists sorted by g-vector, in discovery order
  std::map<GKey, std::size_t> object_id;
  std::vector<std::vector<std::size_t>> objects;
  // summand id and direction of the mutation that discovered each object
  std::vector<std::optional<std::pair<std::size_t, Direction>>> arrival;
  std::vector<std::pair<std::size_t, std::size_t>> left_edges;

  auto key_of = [&](const std::vector<std::size_t>& ids) {
    GKey key;
    for (auto i : ids) key.push_back(summands[i].g_vector(n));
    std::sort(key.begin(), key.end());
    return key;
  };
  auto sort_ids = [&](std::vector<std::size_t>& ids) {
    std::sort(ids.begin(), ids.end(),
              [&](std::size_t a, std::size_t b) { return summands[a].g_vector(n) < summands[b].g_vector(n); });
  };

  std::vector<std::size_t> start;
  for (std::size_t v = 0; v < n; ++v) start.push_back(register_summand(TwoTermComplex::stalk(alg, {v})));
  sort_ids(start);
  object_id.emplace(key_of(start), 0);
  objects.push_back(start);
  arrival.emplace_back();

  struct Task {
    std::size_t object;
    std::size_t k;
    Direction dir;
  };
  struct Outcome {
    std::size_t task;
    TwoTermComplex y;
  };
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<Task> tasks;
    for (auto o : frontier)
      for (std::size_t k = 0; k < n; ++k)
        for (auto dir : {Direction::Left, Direction::Right}) {
          // the inverse of the discovering mutation leads back
          const auto& a = arrival[o];
          if (a && a->first == objects[o][k] && a->second != dir) continue;
          tasks.push_back({o, k, dir});
        }
    // mutations only read the registry; the merge below extends it
    auto outcomes = kernels::gather<Outcome>(
        tasks.size(),
        [&](std::size_t t, std::vector<Outcome>& out) {
          const Task& task = tasks[t];
          try {
            out.push_back({t, mutate_in(alg, cache, objects[task.object], task.k, task.dir)});
          } catch (const Error& e) {
            if (e.code() != ErrorCode::ConeNotTwoTerm) throw;
          }
        },
        exec);
    std::vector<std::size_t> next;
    for (auto& oc : outcomes) {
      const Task& task = tasks[oc.task];
      auto ids = objects[task.object];
      const std::size_t y = register_summand(oc.y);
      ids[task.k] = y;
      sort_ids(ids);
      auto key = key_of(ids);
      auto it = object_id.find(key);
      std::size_t target;
      if (it == object_id.end()) {
        if (objects.size() >= cap)
          fail(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " two-term silting objects");
        target = objects.size();
        object_id.emplace(std::move(key), target);
        objects.push_back(std::move(ids));
        arrival.emplace_back(std::pair{y, task.dir});
        next.push_back(target);
      } else {
        target = it->second;
      }
      if (task.dir == Direction::Left) left_edges.emplace_back(task.object, target);
      else left_edges.emplace_back(target, task.object);
    }
    frontier = std::move(next);
  }

  // vanishing of Hom(S_a, S_b[1]) for every pair of summands
  const std::size_t m = summands.size();
  auto vanish = kernels::gather<char>(
      m * m, [&](std::size_t t, std::vector<char>& out) {
        out.push_back(hom_shift1_dim(alg, summands[t / m], summands[t % m]) == 0);
      },
      exec);

  // final order: sorted by key
  std::vector<std::size_t> perm(objects.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<GKey> keys;
  for (const auto& ids : objects) keys.push_back(key_of(ids));
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<std::size_t> rank(objects.size());
  for (std::size_t i = 0; i < perm.size(); ++i) rank[perm[i]] = i;

  SiltingPoset out;
  std::vector<Element> elements;
  for (auto o : perm) {
    std::vector<TwoTermComplex> parts;
    for (auto i : objects[o]) parts.push_back(summands[i]);
    out.objects.push_back(SiltingObject::from_summands(alg, std::move(parts)));
    const auto& u = out.objects.back();
    std::string label = format_gkey(u.key) + " H0";
    for (const auto& x : u.summands) label += " " + format_gvector(h0_dim_vector(alg, x));
    elements.push_back({format_gkey(u.key), label});
  }
  Caps caps;
  caps.poset_elements = std::max(caps.poset_elements, elements.size());
  // Q <= P iff Hom(P, Q[1]) = 0
  out.poset = Poset::from_predicate(
      std::move(elements),
      [&](std::size_t qi, std::size_t pi) {
        for (auto a : objects[perm[pi]])
          for (auto b : objects[perm[qi]])
            if (!vanish[a * m + b]) return false;
        return true;
      },
      caps, exec);
  for (auto [a, b] : left_edges) out.mutations.emplace_back(rank[a], rank[b]);
  std::sort(out.mutations.begin(), out.mutations.end());
  out.mutations.erase(std::unique(out.mutations.begin(), out.mutations.end()), out.mutations.end());
  return out;
}

std::vector<long> h0_dim_vector(const PathAlgebra& alg, const TwoTermComplex& p) {
  const std::size_t n = alg.num_vertices();
  std::vector<long> dims(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    // e_v P^0 = (+)_r e_v A e_{zero[r]}; the image of e_v P^-1 under x |-> x d
    HomLayout target(alg, std::vector<std::size_t>{v}, p.zero);
    EchelonBasis image;
    for (std::size_t c = 0; c < p.minus.size(); ++c)
      for (std::size_t k = 0; k < alg.block_dim(v, p.minus[c]); ++k) {
        const AlgElem x = alg.basis_element(v, p.minus[c], k);
        std::vector<std::pair<std::size_t, Rational>> e;
        for (std::size_t r = 0; r < p.zero.size(); ++r) {
          if (p.d.a[r][c].is_zero()) continue;
          const AlgElem y = alg.mul(x, p.d.a[r][c]);
          for (std::size_t j = 0; j < y.c.size(); ++j)
            if (sgn(y.c[j]) != 0) e.emplace_back(target.offset(r, 0) + j, y.c[j]);
        }
        image.insert(collect(std::move(e)));
      }
    dims[v] = static_cast<long>(target.dim() - image.rank());
  }
  return dims;
}

std::vector<std::vector<long>> h0_summand_dims(const PathAlgebra& alg, const SiltingObject& u) {
  std::vector<std::vector<long>> out;
  for (const auto& x : u.summands) {
    auto d = h0_dim_vector(alg, x);
    if (std::any_of(d.begin(), d.end(), [](long c) { return c != 0; })) out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SiltingPoset tors_lattice(const PathAlgebra& alg, std::size_t cap, Exec exec) {
  SiltingPoset s = enumerate_2silt(alg, cap, exec);
  std::vector<std::string> labels;
  for (const auto& u : s.objects) {
    std::string label = "Fac";
    auto dims = h0_summand_dims(alg, u);
    if (dims.empty()) label += " 0";
    for (const auto& d : dims) label += " " + format_gvector(d);
    labels.push_back(label);
  }
  s.poset = s.poset.relabeled(std::move(labels));
  return s;
}

std::optional<std::size_t> tau_tilting_finite(const PathAlgebra& alg, std::size_t cap) {
  try {
    return enumerate_2silt(alg, cap).objects.size();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::CapExceeded) return std::nullopt;
    throw;
  }
}

TwoTermComplex presilting_family_member(const PathAlgebra& alg, std::size_t i) {
  const auto& q = alg.quiver();
  auto x = q.arrow("x"), y = q.arrow("y");
  if (!x || !y || q.arrows[*x].source != q.arrows[*y].source || q.arrows[*x].target != q.arrows[*y].target)
    fail(ErrorCode::ShapeMismatch, "family needs parallel arrows x and y");
  const std::size_t v1 = q.arrows[*x].source, v2 = q.arrows[*x].target;
  TwoTermComplex p{std::vector<std::size_t>(i, v2), std::vector<std::size_t>(i + 1, v1), {}};
  p.d = MapMatrix::zero(alg, p.minus, p.zero);
  const AlgElem ye = alg.element(v2, v1, parse_combination("y", q));
  const AlgElem mx = alg.element(v2, v1, parse_combination("-x", q));
  for (std::size_t c = 0; c < i; ++c) {
    p.d.a[c][c] = ye;
    p.d.a[c + 1][c] = mx;
  }
  return p;
}

std::vector<bool> check_presilting_family(const PathAlgebra& alg, std::size_t first, std::size_t last) {
  std::vector<bool> out;
  for (std::size_t i = first; i <= last; ++i) out.push_back(is_presilting(alg, presilting_family_member(alg, i)));
  return out;
}

bool check_silting_module(const PathAlgebra& alg, const TwoTermComplex& presentation) {
  presentation.check(alg);
  const TwoTermComplex r = reduce_complex(alg, presentation);
  if (!is_presilting(alg, r)) return false;
  const auto input = decompose(alg, r);
  const SiltingObject completion = co_bongartz_complete(alg, r);
  auto nonzero_h0 = [&](const TwoTermComplex& x) {
    auto d = h0_dim_vector(alg, x);
    return std::any_of(d.begin(), d.end(), [](long c) { return c != 0; });
  };
  for (const auto& x : completion.summands) {
    if (!nonzero_h0(x)) continue;
    bool found = false;
    for (const auto& y : input)
      if (isomorphic_indecomposables(alg, x, y)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

}  // namespace tors
