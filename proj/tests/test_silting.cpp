#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "tors/homotopy.hpp"
#include "tors/poset.hpp"
#include "tors/silting.hpp"

using namespace tors;
using tors::test::builtin;
using tors::test::code_of;

namespace {

using G = std::vector<long>;

TwoTermComplex lit(const PathAlgebra& a, const std::string& s) { return parse_complex(a, s); }

// Integer determinant by fraction-free elimination.
long det(std::vector<std::vector<long>> m) {
  const std::size_t n = m.size();
  long sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

const std::vector<std::string> kCorpus = {"a1", "a2", "a3", "kxk", "dual_numbers", "cyclic_zero"};

}  // namespace

TEST_CASE("is_presilting") {
  auto a2 = builtin("a2");
  CHECK(is_presilting(a2, TwoTermComplex::regular(a2)));
  auto p = lit(a2, "[e2] -> [e1] ; d = [[a]]");
  CHECK(is_presilting(a2, p));
  CHECK_FALSE(is_presilting(a2, direct_sum(a2, p, TwoTermComplex::stalk(a2, {1}))));
}

TEST_CASE("decompose") {
  auto a2 = builtin("a2");
  CHECK(decompose(a2, TwoTermComplex::regular(a2)).size() == 2);
  auto p = lit(a2, "[e2] -> [e1] ; d = [[a]]");
  auto one = decompose(a2, p);
  REQUIRE(one.size() == 1);
  CHECK(one[0].g_vector(2) == G{1, -1});
  auto sum = direct_sum(a2, p, TwoTermComplex::stalk(a2, {0}));
  CHECK(summand_g_key(a2, sum) == GKey{{1, -1}, {1, 0}});

  // connected pattern that still splits: needs a genuine idempotent
  auto tangled = lit(a2, "[e2] -> [e1, e1] ; d = [[a], [2*a]]");
  auto parts = decompose(a2, tangled);
  REQUIRE(parts.size() == 2);
  CHECK(summand_g_key(a2, tangled) == GKey{{1, -1}, {1, 0}});
  CHECK(isomorphic(a2, tangled, sum));
  CHECK(isomorphic(a2, direct_sum(a2, parts), tangled));
  CHECK_FALSE(isomorphic(a2, tangled, TwoTermComplex::regular(a2)));

  auto cz = builtin("cyclic_zero");
  auto big = lit(cz, "[e2, e2] -> [e1, e1] ; d = [[b, b], [b, 2*b]]");
  auto pieces = decompose(cz, big);
  CHECK(pieces.size() == 2);
  G total{0, 0};
  for (const auto& x : pieces)
    for (std::size_t i = 0; i < 2; ++i) total[i] += x.g_vector(2)[i];
  CHECK(total == big.g_vector(2));
  CHECK(isomorphic(cz, direct_sum(cz, pieces), big));
}

TEST_CASE("is_silting") {
  auto a2 = builtin("a2");
  CHECK(is_silting(a2, TwoTermComplex::regular(a2)));
  CHECK(is_silting(a2, TwoTermComplex::regular_shifted(a2)));
  auto p = lit(a2, "[e2] -> [e1] ; d = [[a]]");
  CHECK_FALSE(is_silting(a2, p));
  CHECK(is_silting(a2, direct_sum(a2, p, TwoTermComplex::stalk(a2, {0}))));
}

TEST_CASE("g_vectors") {
  auto a2 = builtin("a2");
  CHECK(TwoTermComplex::stalk(a2, {1}).g_vector(2) == G{0, 1});
  CHECK(lit(a2, "[e2] -> [e1] ; d = [[a]]").g_vector(2) == G{1, -1});
  CHECK(summand_g_key(a2, TwoTermComplex::regular(a2)) == GKey{{0, 1}, {1, 0}});
}

TEST_CASE("completions") {
  auto a2 = builtin("a2");
  auto p = lit(a2, "[e2] -> [e1] ; d = [[a]]");
  CHECK(bongartz_complete(a2, p).key == GKey{{1, -1}, {1, 0}});
  CHECK(co_bongartz_complete(a2, p).key == GKey{{0, -1}, {1, -1}});
  CHECK(bongartz_complete(a2, TwoTermComplex::regular(a2)).key == GKey{{0, 1}, {1, 0}});
  CHECK(co_bongartz_complete(a2, TwoTermComplex::regular(a2)).key == GKey{{0, 1}, {1, 0}});
  CHECK(co_bongartz_complete(a2, TwoTermComplex::regular_shifted(a2)).key == GKey{{-1, 0}, {0, -1}});
  // torsion classes without S2 are at most add S1
  CHECK(bongartz_complete(a2, TwoTermComplex::shifted_stalk(a2, {1})).key == GKey{{0, -1}, {1, -1}});
  auto bad = direct_sum(a2, p, TwoTermComplex::stalk(a2, {1}));
  CHECK(code_of([&] { bongartz_complete(a2, bad); }) == ErrorCode::NotPresilting);
  CHECK(code_of([&] { co_bongartz_complete(a2, bad); }) == ErrorCode::NotPresilting);
  for (const auto& name : kCorpus) {
    auto alg = builtin(name);
    auto s = enumerate_2silt(alg, 100);
    for (const auto& u : s.objects)
      for (const auto& x : u.summands) {
        auto hi = bongartz_complete(alg, x);
        auto lo = co_bongartz_complete(alg, x);
        CHECK(is_silting(alg, hi.complex(alg)));
        CHECK(is_silting(alg, lo.complex(alg)));
        auto g = x.g_vector(alg.num_vertices());
        CHECK(std::count(hi.key.begin(), hi.key.end(), g) == 1);
        CHECK(std::count(lo.key.begin(), lo.key.end(), g) == 1);
        // lo <= hi: Hom(hi, lo[1]) = 0
        CHECK(hom_shift1_dim(alg, hi.complex(alg), lo.complex(alg)) == 0);
      }
  }
}

TEST_CASE("mutate") {
  auto a1 = builtin("a1");
  auto top1 = SiltingObject::from_summands(a1, {TwoTermComplex::regular(a1)});
  CHECK(mutate(a1, top1, 0, Direction::Left).key == GKey{{-1}});
  CHECK(code_of([&] { mutate(a1, top1, 0, Direction::Right); }) == ErrorCode::ConeNotTwoTerm);
  CHECK(code_of([&] { mutate(a1, top1, 1, Direction::Left); }) == ErrorCode::IndexOutOfRange);

  auto a2 = builtin("a2");
  auto top = SiltingObject::from_summands(a2, decompose(a2, TwoTermComplex::regular(a2)));
  const std::size_t k = top.index_of({0, 1});
  auto down = mutate(a2, top, k, Direction::Left);
  CHECK(down.key == GKey{{1, -1}, {1, 0}});
  auto back = mutate(a2, down, down.index_of({1, -1}), Direction::Right);
  CHECK(back.key == top.key);
  auto p = lit(a2, "[e2] -> [e1] ; d = [[a]]");
  auto not_silting = SiltingObject::from_summands(a2, {p, TwoTermComplex::stalk(a2, {1})});
  CHECK(code_of([&] { mutate(a2, not_silting, 0, Direction::Left); }) == ErrorCode::NotSilting);
}

TEST_CASE("enumerate_small") {
  auto a1 = builtin("a1");
  auto s1 = enumerate_2silt(a1, 100);
  CHECK(poset_isomorphism(s1.poset, chain(2)).has_value());
  auto kxk = builtin("kxk");
  auto d = enumerate_2silt(kxk, 100);
  CHECK(d.poset.size() == 4);
  CHECK(d.poset.covers().size() == 4);
  CHECK(poset_isomorphism(d.poset, power_set(antichain(2)).poset).has_value());
  auto a2 = builtin("a2");
  CHECK(poset_isomorphism(tors_lattice(a2, 100).poset, pentagon()).has_value());
  CHECK(tau_tilting_finite(a2, 100) == std::optional<std::size_t>(5));
  CHECK(tau_tilting_finite(a1, 100) == std::optional<std::size_t>(2));
  CHECK(tau_tilting_finite(builtin("a3"), 100) == std::optional<std::size_t>(14));
  CHECK(tau_tilting_finite(builtin("kronecker"), 20) == std::nullopt);
  CHECK(code_of([&] { enumerate_2silt(a2, 4); }) == ErrorCode::CapExceeded);
}

TEST_CASE("silting_invariants") {
  for (const auto& name : kCorpus) {
    CAPTURE(name);
    auto alg = builtin(name);
    const std::size_t n = alg.num_vertices();
    auto s = enumerate_2silt(alg, 1000);
    std::set<GKey> keys;
    for (const auto& u : s.objects) {
      CHECK(keys.insert(u.key).second);
      REQUIRE(u.key.size() == n);
      CHECK(std::abs(det(u.key)) == 1);
      CHECK(is_presilting(alg, u.complex(alg)));
    }
    // top A, bottom A[1]
    auto top = s.poset.top();
    auto bottom = s.poset.bottom();
    REQUIRE(top);
    REQUIRE(bottom);
    CHECK(s.objects[*top].key == summand_g_key(alg, TwoTermComplex::regular(alg)));
    CHECK(s.objects[*bottom].key == summand_g_key(alg, TwoTermComplex::regular_shifted(alg)));
    // Hasse quiver equals the mutation graph
    CHECK(s.poset.covers() == s.mutations);
    // mutation then the inverse mutation
    for (const auto& u : s.objects)
      for (std::size_t k = 0; k < n; ++k)
        for (auto dir : {Direction::Left, Direction::Right}) {
          SiltingObject v;
          try {
            v = mutate(alg, u, k, dir);
          } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::ConeNotTwoTerm);
            continue;
          }
          auto g = v.key;
          std::size_t fresh = n;
          for (std::size_t i = 0; i < n; ++i)
            if (std::find(u.key.begin(), u.key.end(), v.key[i]) == u.key.end()) fresh = i;
          REQUIRE(fresh < n);
          auto w = mutate(alg, v, fresh, dir == Direction::Left ? Direction::Right : Direction::Left);
          CHECK(w.key == u.key);
        }
  }
}

TEST_CASE("enumerate_serial_matches_parallel") {
  for (const auto& name : {"a3", "cyclic_zero"}) {
    auto alg = builtin(name);
    auto x = enumerate_2silt(alg, 1000, Exec::Serial);
    auto y = enumerate_2silt(alg, 1000, Exec::Parallel);
    CHECK(same_relation(x.poset, y.poset));
    CHECK(x.poset.elements().size() == y.poset.elements().size());
    for (std::size_t i = 0; i < x.poset.size(); ++i) CHECK(x.poset.id(i) == y.poset.id(i));
    CHECK(x.mutations == y.mutations);
  }
}

TEST_CASE("h0_dim_vector") {
  auto a2 = builtin("a2");
  CHECK(h0_dim_vector(a2, TwoTermComplex::regular_shifted(a2)) == G{0, 0});
  CHECK(h0_dim_vector(a2, TwoTermComplex::stalk(a2, {0})) == G{1, 1});
  CHECK(h0_dim_vector(a2, lit(a2, "[e2] -> [e1] ; d = [[a]]")) == G{1, 0});
}

TEST_CASE("presilting_family") {
  auto k = builtin("kronecker");
  auto flags = check_presilting_family(k, 0, 5);
  CHECK(flags == std::vector<bool>(6, true));
  auto f1 = presilting_family_member(k, 1);
  CHECK(f1.g_vector(2) == G{2, -1});
  CHECK(decompose(k, f1).size() == 1);
}

TEST_CASE("check_silting_module") {
  auto a2 = builtin("a2");
  auto s1 = lit(a2, "[e2] -> [e1] ; d = [[a]]");
  CHECK(check_silting_module(a2, TwoTermComplex::regular(a2)));
  CHECK(check_silting_module(a2, direct_sum(a2, s1, TwoTermComplex::stalk(a2, {0}))));
  CHECK(check_silting_module(a2, TwoTermComplex::stalk(a2, {1})));
  // S1 is the H^0 of the silting object S1 + e2[1]
  CHECK(check_silting_module(a2, s1));
  auto hi = bongartz_complete(a2, s1);
  CHECK(h0_summand_dims(a2, hi) == std::vector<std::vector<long>>{{1, 0}, {1, 1}});
  auto lo = co_bongartz_complete(a2, s1);
  CHECK(h0_summand_dims(a2, lo) == std::vector<std::vector<long>>{{1, 0}});
  // not presilting
  CHECK_FALSE(check_silting_module(a2, direct_sum(a2, s1, TwoTermComplex::stalk(a2, {1}))));
}
