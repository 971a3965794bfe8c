#include <doctest.h>

#include "tors/error.hpp"
#include "tors/path_algebra.hpp"
#include "tors/resources.hpp"

using namespace tors;

namespace {

PathAlgebra builtin(const std::string& name) {
  return build_algebra(parse_algebra_text(require_resource("algebras/" + name + ".alg")));
}

std::vector<std::string> basis_names(const PathAlgebra& a) {
  std::vector<std::string> out;
  for (const auto& p : a.basis()) out.push_back(a.path_name(p));
  return out;
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

TEST_CASE("build_algebra") {
  auto a2 = builtin("a2");
  CHECK(a2.dim() == 3);
  CHECK(basis_names(a2) == std::vector<std::string>{"e1", "e2", "a"});

  auto cz = builtin("cyclic_zero");
  CHECK(cz.dim() == 5);
  CHECK(basis_names(cz) == std::vector<std::string>{"e1", "e2", "b", "c", "c*b"});

  CHECK(code_of([] { builtin("loop"); }) == ErrorCode::NotFiniteDimensional);

  auto spec = parse_algebra_text("vertices = 1 2\narrow a : 1 -> 2\nrelation a\n");
  CHECK(code_of([&] { build_algebra(spec); }) == ErrorCode::NotAdmissible);

  CHECK(builtin("a3").dim() == 6);
  CHECK(builtin("dual_numbers").dim() == 2);
  CHECK(builtin("kronecker").dim() == 4);
  CHECK(builtin("kxk").dim() == 2);
}

TEST_CASE("commutativity relation") {
  // square 1 -> 2 -> 4, 1 -> 3 -> 4 with b*a = d*c
  auto spec = parse_algebra_text(
      "vertices = 1 2 3 4\narrow a : 1 -> 2\narrow b : 2 -> 4\narrow c : 1 -> 3\narrow d : 3 -> 4\n"
      "relation b*a - d*c\n");
  auto alg = build_algebra(spec);
  // 4 idempotents, 4 arrows, one length-2 class
  CHECK(alg.dim() == 9);
  auto ba = alg.path_element({0, 3, {0, 1}});
  auto dc = alg.path_element({0, 3, {2, 3}});
  CHECK(ba == dc);
  CHECK(!ba.is_zero());
}

TEST_CASE("hom_projectives and cartan") {
  auto a2 = builtin("a2");
  auto h21 = a2.hom_projectives(1, 0);
  REQUIRE(h21.size() == 1);
  CHECK(a2.format(h21[0]) == "a");
  CHECK(a2.hom_projectives(0, 1).empty());
  for (std::size_t i = 0; i < 2; ++i) CHECK(a2.hom_projectives(i, i)[0] == a2.idempotent(i));
  CHECK(a2.cartan_matrix() == std::vector<std::vector<std::size_t>>{{1, 0}, {1, 1}});

  CHECK(builtin("kxk").cartan_matrix() == std::vector<std::vector<std::size_t>>{{1, 0}, {0, 1}});
  auto cz = builtin("cyclic_zero").cartan_matrix();
  CHECK(cz == std::vector<std::vector<std::size_t>>{{2, 1}, {1, 1}});

  std::size_t total = 0;
  for (auto& row : cz)
    for (auto x : row) total += x;
  CHECK(total == builtin("cyclic_zero").dim());
}

TEST_CASE("multiplication") {
  auto cz = builtin("cyclic_zero");
  auto b = cz.path_element({0, 1, {0}});
  auto c = cz.path_element({1, 0, {1}});
  // mul(x, y) is the written product x*y
  CHECK(cz.mul(b, c).is_zero());
  auto cb = cz.mul(c, b);
  CHECK(cz.format(cb) == "c*b");
  // unit inverse in a local ring
  auto u = cz.add(cz.scaled(cz.idempotent(0), 2), cb);
  auto inv = cz.local_inverse(u);
  CHECK(cz.mul(u, inv) == cz.idempotent(0));
  CHECK(cz.mul(inv, u) == cz.idempotent(0));
}

TEST_CASE("parse errors") {
  CHECK(code_of([] { parse_algebra_text("vertices = 1\narrow a : 1 -> 3\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_algebra_text("vertices = 1\nbogus line\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_algebra_text("vertices = 1 2\narrow a : 1 -> 2\nrelation a*a\n"); }) ==
        ErrorCode::ParseError);
  try {
    parse_algebra_text("vertices = 1\n\narrow a : 1 -> 7\n");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  Quiver q{{"1", "2"}, {{"a", 0, 1}}};
  auto t = parse_combination("3/2*a - e1", q);
  REQUIRE(t.size() == 2);
  CHECK(t[0].coeff == Rational(3, 2));
  CHECK(t[1].coeff == -1);
  CHECK(t[1].path.length() == 0);
}

TEST_CASE("determinism") {
  auto x = builtin("cyclic_zero");
  auto y = builtin("cyclic_zero");
  CHECK(basis_names(x) == basis_names(y));
}
