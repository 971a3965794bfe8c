#include <doctest.h>

#include <algorithm>
#include <set>

#include "tors/error.hpp"
#include "tors/poset.hpp"
#include "tors/poset_io.hpp"

using namespace tors;

namespace {

// Independent count of pairs u <= v by brute force over the closure of the
// generating relation.
std::size_t brute_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& gen) {
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
  for (auto [a, b] : gen) r[a][b] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (r[a][b] && r[b][c] && !r[a][c]) r[a][c] = changed = true;
  }
  std::size_t count = 0;
  for (auto& row : r)
    for (bool x : row) count += x;
  return count;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("build_poset") {
  auto two = Poset::from_relations({{"a", "a"}, {"b", "b"}}, {{"a", "b"}});
  REQUIRE(two.covers().size() == 1);
  CHECK(two.id(two.covers()[0].first) == "b");
  CHECK(two.id(two.covers()[0].second) == "a");

  auto p = pentagon();
  CHECK(p.relation_size() == 13);
  CHECK(p.relation_size() == brute_pairs(5, {{0, 1}, {1, 4}, {0, 2}, {2, 3}, {3, 4}}));

  CHECK(code_of([] { Poset::from_relations({{"a", "a"}, {"b", "b"}}, {{"a", "b"}, {"b", "a"}}); }) ==
        ErrorCode::CycleDetected);
  CHECK(code_of([] { Poset::from_relations({{"a", "a"}, {"a", "b"}}, {}); }) == ErrorCode::DuplicateId);
  CHECK(code_of([] { Poset::from_relations({{"a", "a"}}, {{"a", "q"}}); }) == ErrorCode::UnknownElement);
}

TEST_CASE("covers reproduce the order") {
  for (const auto& p : {pentagon(), chain(4), antichain(3)}) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (auto [a, b] : p.covers()) pairs.emplace_back(p.id(b), p.id(a));
    auto q = Poset::from_relations(p.elements(), pairs);
    CHECK(same_relation(p, q));
  }
}

TEST_CASE("hasse_quiver") {
  CHECK(hasse_quiver(chain(2)).arrows.size() == 1);
  CHECK(hasse_quiver(pentagon()).arrows.size() == 5);
  CHECK(hasse_quiver(antichain(3)).arrows.empty());
}

TEST_CASE("down_sets and specialization_closed") {
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(down_sets(chain(n)).poset.size() == n + 1);
    CHECK(specialization_closed(chain(n)).poset.size() == n + 1);
    CHECK(down_sets(antichain(n)).poset.size() == (std::size_t{1} << n));
    CHECK(specialization_closed(antichain(n)).poset.size() == (std::size_t{1} << n));
  }
  auto sc = specialization_closed(chain(2, "p"));
  REQUIRE(sc.poset.size() == 3);
  CHECK(sc.poset.label(0) == "{}");
  CHECK(sc.poset.label(1) == "{p1}");
  CHECK(sc.poset.label(2) == "{p0,p1}");

  // down-sets are closed under union and intersection
  auto d = down_sets(pentagon());
  for (auto& a : d.subsets)
    for (auto& b : d.subsets) {
      CHECK(d.find(a | b));
      CHECK(d.find(a & b));
    }

  // complementation turns down-sets into the opposite of up-sets
  auto p = pentagon();
  auto down = down_sets(p);
  auto up = specialization_closed(p);
  auto opp = opposite(up.poset);
  std::vector<std::size_t> f(down.poset.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = *up.find(down.subsets[i].complement());
  CHECK(is_isomorphism(down.poset, opp, f));

  Caps tiny;
  tiny.subsets = 10;
  CHECK(code_of([&] { down_sets(antichain(4), tiny); }) == ErrorCode::SizeCap);
}

TEST_CASE("hom_poset") {
  auto y = pentagon();
  auto point = chain(1);
  auto h = hom_poset(point, y);
  CHECK(poset_isomorphism(h.poset, y));

  CHECK(hom_poset(chain(2), y).poset.size() == y.relation_size());
  CHECK(hom_poset(chain(2), chain(2)).poset.size() == 3);

  // brute force over all maps
  auto x = Poset::from_relations({{"a", "a"}, {"b", "b"}, {"c", "c"}}, {{"a", "b"}, {"a", "c"}});
  std::set<MonotoneMap> brute;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      for (std::size_t k = 0; k < 5; ++k) {
        MonotoneMap f{i, j, k};
        bool ok = true;
        for (std::size_t u = 0; u < 3; ++u)
          for (std::size_t v = 0; v < 3; ++v)
            if (x.leq(u, v) && !y.leq(f[u], f[v])) ok = false;
        if (ok) brute.insert(f);
      }
  auto maps = monotone_maps(x, y);
  CHECK(std::set<MonotoneMap>(maps.begin(), maps.end()) == brute);
  CHECK(maps.size() == brute.size());

  // Hom(X, Y x Z) = Hom(X, Y) x Hom(X, Z)
  auto z = chain(3);
  auto lhs = hom_poset(x, product({y, z}).poset);
  auto rhs = product({hom_poset(x, y).poset, hom_poset(x, z).poset});
  CHECK(poset_isomorphism(lhs.poset, rhs.poset));

  Caps tiny;
  tiny.monotone_maps = 5;
  CHECK(code_of([&] { hom_poset(chain(2), y, tiny); }) == ErrorCode::SizeCap);
}

TEST_CASE("product") {
  auto grid = product({chain(2), chain(2)});
  CHECK(grid.poset.size() == 4);
  CHECK(grid.poset.covers().size() == 4);
  auto hex_like = product({chain(6), chain(4)});
  CHECK(hex_like.poset.size() == 24);
  CHECK(product({}).poset.size() == 1);
  auto p = pentagon();
  CHECK(poset_isomorphism(product({p, chain(1)}).poset, p));

  auto a = chain(2), b = chain(3), c = antichain(2);
  auto left = product({product({a, b}).poset, c});
  auto right = product({a, product({b, c}).poset});
  auto w = poset_isomorphism(left.poset, right.poset);
  REQUIRE(w);
  CHECK(is_isomorphism(left.poset, right.poset, *w));
  for (std::size_t i = 0; i < grid.poset.size(); ++i) CHECK(grid.encode(grid.decode(i)) == i);
}

TEST_CASE("opposite and isomorphism") {
  CHECK(poset_isomorphism(opposite(chain(2)), chain(2)));
  auto p = pentagon();
  auto w = poset_isomorphism(p, opposite(p));
  REQUIRE(w);
  CHECK(is_isomorphism(p, opposite(p), *w));
  CHECK(same_relation(opposite(opposite(p)), p));
  auto id = poset_isomorphism(p, p);
  REQUIRE(id);
  CHECK(is_isomorphism(p, p, *id));
  CHECK(!poset_isomorphism(chain(3), antichain(3)));
}

TEST_CASE("lattice_ops") {
  auto p = pentagon();
  CHECK(is_lattice(p));
  CHECK(p.id(join(p, p.require("x"), p.require("y"))) == "1");
  CHECK(p.id(meet(p, p.require("x"), p.require("z"))) == "0");
  auto c = chain(4);
  CHECK(meet(c, 1, 3) == 1);
  CHECK(join(c, 1, 3) == 3);
  auto a = antichain(2);
  CHECK(!is_lattice(a));
  CHECK(code_of([&] { meet(a, 0, 1); }) == ErrorCode::NotALattice);
}

TEST_CASE("json and dot round trip") {
  auto p = pentagon();
  auto q = poset_from_json(to_json(p));
  CHECK(same_relation(p, q));
  CHECK(to_json(p) == to_json(q));
  auto dot = to_dot(p);
  CHECK(std::count(dot.begin(), dot.end(), '>') == 5);
  CHECK(summary(p).find("elements 5") != std::string::npos);
  CHECK(code_of([] { poset_from_json("{not json"); }) == ErrorCode::ParseError);
}

TEST_CASE("serial and parallel kernels agree") {
  auto p = product({pentagon(), chain(2), antichain(2)}).poset;
  std::vector<std::vector<std::size_t>> lower(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) lower[i] = p.lower_covers(i);
  auto s = kernels::closed_subsets_serial(lower, p.linear_extension(), 1 << 20);
  auto o = kernels::closed_subsets_omp(lower, p.linear_extension(), 1 << 20);
  CHECK(s == o);
  auto ms = monotone_maps_serial(chain(3), pentagon());
  auto mo = monotone_maps_omp(chain(3), pentagon());
  CHECK(ms == mo);
  auto rel = [&](std::size_t i, std::size_t j) { return p.leq(i, j); };
  CHECK(kernels::relation_rows_serial(p.size(), rel) == kernels::relation_rows_omp(p.size(), rel));
  auto serial = down_sets(p, {}, Exec::Serial);
  auto par = down_sets(p, {}, Exec::Parallel);
  CHECK(to_json(serial.poset) == to_json(par.poset));
}
