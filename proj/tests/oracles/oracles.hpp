#pragma once

// Test-only reference implementations. None of this shares code with the
// engine beyond the Element type used at the boundary.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <vector>

#include "ore/galgebra.hpp"

namespace oracle {

using Q = mpq_class;
using Exp = std::vector<int>;
using Poly = std::map<Exp, Q>;

Poly fromElement(const ore::Element& e, std::size_t nvars);
ore::Element toElement(const Poly& p, const ore::AlgebraPtr& alg);

Poly add(const Poly& a, const Poly& b, const Q& scale = 1);

/// Product in A_n with variables x_1..x_n, d_1..d_n, using
/// x^a d^b * x^c d^e = sum_k k! C(b,k) C(c,k) x^(a+c-k) d^(b+e-k) per index.
Poly weylProduct(const Poly& a, const Poly& b, std::size_t n);

/// Solves sum_j c_j cols[j] = rhs over Q by Gaussian elimination.
std::optional<std::vector<Q>> solveLinear(const std::vector<Poly>& cols, const Poly& rhs);

/// All exponent vectors in `nvars` variables with total degree <= maxDeg.
std::vector<Exp> monomialsUpTo(std::size_t nvars, int maxDeg);

/// Some b with deg(b) <= maxDeg and b*s = f in A_n, if one exists.
std::optional<Poly> weylLeftQuotient(const Poly& f, const Poly& s, std::size_t n, int maxDeg);

enum class Order { Lex, GrevLex };

/// Reduced monic Groebner basis of a commutative ideal, sorted by leading
/// monomial ascending.
std::vector<Poly> commutativeGB(std::vector<Poly> gens, Order order);

}  // namespace oracle
