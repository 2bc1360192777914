#pragma once

#include "ore/fraction.hpp"
#include "ore/zoo.hpp"

namespace fixtures {

using namespace ore;

inline AlgebraPtr weyl2() {
  GAlgebraSpec spec;
  spec.vars = {"x", "y", "dx", "dy"};
  spec.weylPairs = {{0, 2}, {1, 3}};
  return GAlgebra::create(spec);
}

inline AlgebraPtr qshift2() {
  GAlgebraSpec spec;
  spec.vars = {"x", "y", "Qx", "Qy"};
  spec.params = {"q"};
  spec.relations.push_back({0, 2, Coeff::parameter(0, 1), {}});
  spec.relations.push_back({1, 3, Coeff::parameter(0, 1), {}});
  return GAlgebra::create(spec);
}

struct Vars {
  AlgebraPtr A;
  explicit Vars(AlgebraPtr a) : A(std::move(a)) {}
  Element v(std::size_t i) const { return Element::variable(A, i); }
  Element c(long k) const { return Element::constant(A, Coeff(k)); }
};

}  // namespace fixtures
