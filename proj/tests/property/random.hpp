#pragma once

#include <random>
#include <string>

#include "ore/zoo.hpp"

namespace rnd {

using Rng = std::mt19937;

inline long uniform(Rng& g, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }

inline ore::Coeff coeff(Rng& g, const ore::AlgebraPtr& alg) {
  long a = 0;
  while (a == 0) a = uniform(g, -5, 5);
  ore::Coeff c(a);
  if (alg->nparams() > 0 && uniform(g, 0, 3) == 0)
    c += ore::Coeff::parameter(uniform(g, 0, alg->nparams() - 1), alg->nparams());
  if (c.isZero()) c = ore::Coeff(1);
  return c;
}

/// Random element in the listed variables (all when empty), degree <= maxDeg.
inline ore::Element element(Rng& g, const ore::AlgebraPtr& alg, unsigned maxDeg, unsigned maxTerms,
                            std::vector<std::size_t> vars = {}) {
  if (vars.empty())
    for (std::size_t i = 0; i < alg->nvars(); ++i) vars.push_back(i);
  ore::TermList terms;
  const long count = uniform(g, 1, maxTerms);
  for (long t = 0; t < count; ++t) {
    ore::Monomial m;
    const long deg = uniform(g, 0, maxDeg);
    for (long k = 0; k < deg; ++k) m[vars[uniform(g, 0, vars.size() - 1)]] += 1;
    terms.push_back({coeff(g, alg), m});
  }
  return ore::Element(alg, std::move(terms));
}

inline ore::Element nonzero(Rng& g, const ore::AlgebraPtr& alg, unsigned maxDeg, unsigned maxTerms,
                            std::vector<std::size_t> vars = {}) {
  for (;;) {
    auto e = element(g, alg, maxDeg, maxTerms, vars);
    if (!e.isZero()) return e;
  }
}

struct Named {
  std::string name;
  ore::AlgebraPtr alg;
};

inline std::vector<Named> zoo() {
  return {{"K[x,y]", ore::zoo::commutative(2)}, {"A1", ore::zoo::weyl(1)},        {"A2", ore::zoo::weyl(2)},
          {"S1", ore::zoo::shift(1)},           {"S2", ore::zoo::shift(2)},       {"qS1", ore::zoo::qShift(1)},
          {"qW1", ore::zoo::qWeyl(1)},          {"I1", ore::zoo::integration(1)}};
}

}  // namespace rnd
