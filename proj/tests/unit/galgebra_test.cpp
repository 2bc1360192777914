#include "doctest.h"

#include "ore/galgebra.hpp"

using namespace ore;

namespace {

AlgebraPtr weyl1() {
  GAlgebraSpec spec;
  spec.vars = {"x", "dx"};
  spec.weylPairs = {{0, 1}};
  return GAlgebra::create(spec);
}

}  // namespace

TEST_CASE("weyl commutation") {
  auto W = weyl1();
  Element x = Element::variable(W, 0), d = Element::variable(W, 1);
  Element one = Element::constant(W, 1);
  CHECK(d * x == x * d + one);
  Element lhs = d * d * x * x;
  Element rhs = x * x * d * d + (x * d).scaled(4) + one.scaled(2);
  CHECK(lhs == rhs);
  CHECK(W->isWeylType());
}
