#include "ore/zoo.hpp"

namespace ore::zoo {

namespace {

std::string indexed(const std::string& stem, std::size_t i, std::size_t n) {
  return n == 1 ? stem : stem + std::to_string(i + 1);
}

GAlgebraSpec skeleton(std::size_t n, const std::string& op, bool withParams) {
  GAlgebraSpec spec;
  for (std::size_t i = 0; i < n; ++i) spec.vars.push_back(indexed("x", i, n));
  for (std::size_t i = 0; i < n; ++i) spec.vars.push_back(indexed(op, i, n));
  if (withParams)
    for (std::size_t i = 0; i < n; ++i) spec.params.push_back(indexed("q", i, n));
  return spec;
}

}  // namespace

AlgebraPtr commutative(std::size_t n) {
  GAlgebraSpec spec;
  for (std::size_t i = 0; i < n; ++i) spec.vars.push_back(indexed("x", i, n));
  return GAlgebra::create(spec);
}

AlgebraPtr weyl(std::size_t n) {
  GAlgebraSpec spec = skeleton(n, "d", false);
  if (n == 1) spec.vars[1] = "dx";
  for (std::size_t i = 0; i < n; ++i) spec.weylPairs.emplace_back(i, n + i);
  return GAlgebra::create(spec);
}

AlgebraPtr shift(std::size_t n) {
  GAlgebraSpec spec = skeleton(n, "s", false);
  for (std::size_t i = 0; i < n; ++i)
    spec.relations.push_back({i, n + i, Coeff(1), {{Coeff(1), Monomial::variable(n + i)}}});
  return GAlgebra::create(spec);
}

AlgebraPtr qShift(std::size_t n) {
  GAlgebraSpec spec = skeleton(n, "s", true);
  for (std::size_t i = 0; i < n; ++i) spec.relations.push_back({i, n + i, Coeff::parameter(i, n), {}});
  return GAlgebra::create(spec);
}

AlgebraPtr qWeyl(std::size_t n) {
  GAlgebraSpec spec = skeleton(n, "d", true);
  for (std::size_t i = 0; i < n; ++i)
    spec.relations.push_back({i, n + i, Coeff::parameter(i, n), {{Coeff(1), Monomial{}}}});
  return GAlgebra::create(spec);
}

AlgebraPtr integration(std::size_t n) {
  GAlgebraSpec spec = skeleton(n, "I", false);
  for (std::size_t i = 0; i < n; ++i)
    spec.relations.push_back({i, n + i, Coeff(1), {{Coeff(1), Monomial::variable(n + i, 2)}}});
  return GAlgebra::create(spec);
}

}  // namespace ore::zoo
