#pragma once

#include <optional>

#include "ore/galgebra.hpp"
#include "ore/sparse_poly.hpp"

namespace ore {

using CommPoly = SparsePoly<Coeff>;

/// Throws NonCommuting unless the variables of all listed elements commute
/// pairwise.
void requireCommutingSupport(std::initializer_list<const Element*> elems);

/// Commutative view of an element whose variables commute pairwise.
CommPoly toCommutative(const Element& f);
Element fromCommutative(const AlgebraPtr& alg, const CommPoly& p);

/// Monic gcd in the commutative subring spanned by the variables of f and g.
Element commGcd(const Element& f, const Element& g);
/// Product of the distinct irreducible factors of f, monic.
Element squarefreePart(const Element& f);
/// q with f = q * g when g divides f in the commutative subring.
std::optional<Element> commDivide(const Element& f, const Element& g);

}  // namespace ore
