#include <doctest.h>

#include "helpers.hpp"
#include "tors/complex.hpp"
#include "tors/homotopy.hpp"

using namespace tors;
using tors::test::builtin;
using tors::test::code_of;

namespace {

using G = std::vector<long>;

}  // namespace

TEST_CASE("parse_and_format") {
  auto a2 = builtin("a2");
  auto p = parse_complex(a2, "P = [e2] -> [e1] ; d = [[1*a]]");
  CHECK(p.minus == std::vector<std::size_t>{1});
  CHECK(p.zero == std::vector<std::size_t>{0});
  CHECK(a2.format(p.d.a[0][0]) == "a");
  CHECK(p.g_vector(2) == G{1, -1});
  CHECK(format_complex(a2, p) == "[e2] -> [e1] ; d = [[a]]");
  auto q = parse_complex(a2, format_complex(a2, p));
  CHECK(q.d == p.d);
  auto stalk = parse_complex(a2, "0 -> [e1, e2]");
  CHECK(stalk.g_vector(2) == G{1, 1});
  CHECK(code_of([&] { parse_complex(a2, "[e3] -> [e1]"); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse_complex(a2, "[e2] -> [e1] ; d = [[a, a]]"); }) == ErrorCode::ParseError);
  // an arrow in the wrong block
  CHECK(code_of([&] { parse_complex(a2, "[e1] -> [e2] ; d = [[a]]"); }) != ErrorCode::Internal);
}

TEST_CASE("reduce_complex") {
  auto a2 = builtin("a2");
  auto contractible = parse_complex(a2, "[e1] -> [e1] ; d = [[e1]]");
  CHECK(reduce_complex(a2, contractible).is_zero());

  auto p = parse_complex(a2, "[e2] -> [e1] ; d = [[a]]");
  auto padded = direct_sum(a2, p, contractible);
  auto r = reduce_complex(a2, padded);
  CHECK(r.g_vector(2) == p.g_vector(2));
  CHECK(r.summand_count() == 2);
  CHECK(is_radical(a2, r.d));
  CHECK(reduce_complex(a2, p).d == p.d);

  // a unit hidden behind mixing: [e2, e1] -> [e1] with (a, e1)
  auto mixed = parse_complex(a2, "[e2, e1] -> [e1] ; d = [[a, 2*e1]]");
  auto m = reduce_complex(a2, mixed);
  CHECK(m.minus == std::vector<std::size_t>{1});
  CHECK(m.zero.empty());
}

TEST_CASE("reduce_keeps_hom_dims") {
  auto cz = builtin("cyclic_zero");
  auto p = parse_complex(cz, "[e2, e1] -> [e1, e2] ; d = [[b, e1], [e2, c]]");
  auto r = reduce_complex(cz, p);
  CHECK(is_radical(cz, r.d));
  CHECK(r.g_vector(2) == p.g_vector(2));
  std::vector<TwoTermComplex> probes = {
      TwoTermComplex::regular(cz), TwoTermComplex::regular_shifted(cz),
      parse_complex(cz, "[e2] -> [e1] ; d = [[b]]"), parse_complex(cz, "[e1] -> [e2] ; d = [[c]]"),
      parse_complex(cz, "[e1] -> [e1] ; d = [[c*b]]")};
  for (const auto& q : probes) {
    CHECK(hom_shift1_dim(cz, p, q) == hom_shift1_dim(cz, r, q));
    CHECK(hom_shift1_dim(cz, q, p) == hom_shift1_dim(cz, q, r));
  }
}

TEST_CASE("cone_and_shift") {
  auto a2 = builtin("a2");
  auto s2 = TwoTermComplex::stalk(a2, {1});
  auto s1 = TwoTermComplex::stalk(a2, {0});
  ChainMap f{MapMatrix::zero(a2, {}, {}), MapMatrix::zero(a2, {1}, {0})};
  f.zero.a[0][0] = a2.element(1, 0, parse_combination("a", a2.quiver()));
  auto c = cone(a2, f, s2, s1);
  c.check(a2);
  auto two = reduce(a2, c).as_two_term(a2);
  REQUIRE(two);
  CHECK(two->g_vector(2) == G{1, -1});
  auto sh = shift(a2, ProjComplex::from_two_term(*two), 1);
  CHECK(sh.lo == -2);
  CHECK(!sh.as_two_term(a2));
  CHECK(code_of([&] { cone(a2, ChainMap{MapMatrix::zero(a2, {}, {}), MapMatrix::zero(a2, {0}, {0})}, s2, s1); }) ==
        ErrorCode::ShapeMismatch);
}

TEST_CASE("hom_shift1_dim") {
  auto a2 = builtin("a2");
  auto p = parse_complex(a2, "[e2] -> [e1] ; d = [[a]]");
  auto q = TwoTermComplex::stalk(a2, {1});
  CHECK(hom_shift1_dim(a2, p, q) == 1);
  CHECK(hom_shift1_dim(a2, p, p) == 0);
  CHECK(hom_shift1_dim(a2, TwoTermComplex::regular(a2), p) == 0);
  CHECK(hom_shift1_dim(a2, direct_sum(a2, p, q), direct_sum(a2, p, q)) == 1);
  CHECK(hom_shift1_dim(a2, TwoTermComplex::regular_shifted(a2), TwoTermComplex::regular(a2)) == 3);
}

TEST_CASE("hom_k") {
  auto a2 = builtin("a2");
  auto p = parse_complex(a2, "[e2] -> [e1] ; d = [[a]]");
  HomK end(a2, p, p);
  CHECK(end.dim() == 1);
  CHECK(is_chain_map(a2, end.basis()[0], p, p));
  CHECK(HomK(a2, TwoTermComplex::regular(a2), TwoTermComplex::regular_shifted(a2)).dim() == 0);
  CHECK(HomK(a2, p, TwoTermComplex::shifted_stalk(a2, {1})).dim() == 1);
  // the identity of a contractible complex is null-homotopic
  auto c = parse_complex(a2, "[e1] -> [e1] ; d = [[e1]]");
  HomK endc(a2, c, c);
  CHECK(endc.dim() == 0);
  CHECK(endc.is_null_homotopic(identity_map(a2, c)));
  auto id = identity_map(a2, p);
  auto coords = end.coordinates(scaled(a2, id, 3));
  CHECK(coords.size() == 1);
  CHECK(sgn(coords[0]) != 0);
  CHECK(chain_map_basis(a2, p, p).size() == 1);
}

TEST_CASE("invert") {
  auto cz = builtin("cyclic_zero");
  MapMatrix m = MapMatrix::zero(cz, {0, 1}, {0, 1});
  m.a[0][0] = cz.element(0, 0, parse_combination("2*e1 + c*b", cz.quiver()));
  m.a[1][1] = cz.idempotent(1);
  m.a[0][1] = cz.element(1, 0, parse_combination("b", cz.quiver()));
  auto inv = invert(cz, m);
  CHECK(compose(cz, inv, m) == MapMatrix::identity(cz, {0, 1}));
  CHECK(compose(cz, m, inv) == MapMatrix::identity(cz, {0, 1}));
}
