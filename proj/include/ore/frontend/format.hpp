#pragma once

#include <string>

#include "ore/fraction.hpp"

namespace ore {

std::string formatMonomial(const Monomial& m, const GAlgebra& alg);
/// Terms in decreasing order, e.g. "x*dx+1", "(q^2+1)*x^2-1/2".
std::string formatElement(const Element& e);
std::string formatVector(const VectorElement& v);
/// "[s, r, p, t]" with "_" for a missing pair.
std::string formatFraction(const Fraction& f);
/// "{g1, g2}" listing the generators.
std::string formatBasis(const GroebnerBasis& G);

}  // namespace ore
