#include <doctest.h>

#include "fiber_model.hpp"
#include "helpers.hpp"
#include "tors/poset_io.hpp"
#include "tors/silting.hpp"

using namespace tors;
using tors::test::builtin;

TEST_CASE("fiber at the closed point is the cyclic algebra with one zero relation") {
  auto cz = builtin("cyclic_zero");
  REQUIRE(cz.dim() == 5);
  CHECK(dense_rank(tors::test::fiber_iso()) == 5);
  CHECK(tors::test::fiber_mismatches(cz).empty());
  // b and c sent to the wrong off-diagonal entries
  auto swapped = tors::test::fiber_iso();
  std::swap(swapped[2], swapped[3]);
  CHECK(!tors::test::fiber_mismatches(cz, swapped).empty());
}

TEST_CASE("silting posets of the fibers") {
  auto fl = enumerate_2silt(builtin("cyclic_zero"), 100);
  CHECK(fl.poset.size() == 6);
  CHECK(poset_isomorphism(fl.poset, poset_from_json(require_resource("golden/paper36/msilt_fl.json"))));
  auto l0 = enumerate_2silt(builtin("kxk"), 100);
  CHECK(l0.poset.size() == 4);
  CHECK(poset_isomorphism(l0.poset, poset_from_json(require_resource("golden/paper36/msilt_l0.json"))));
}
