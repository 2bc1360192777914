#pragma once

#include "ore/galgebra.hpp"

namespace ore::zoo {

// Standard presentations, variables ordered x1..xn followed by the operator
// block. For n == 1 the names drop the index (x, dx / s / I).

AlgebraPtr commutative(std::size_t n);
AlgebraPtr weyl(std::size_t n);
/// s_i x_i = x_i s_i + s_i
AlgebraPtr shift(std::size_t n);
/// s_i x_i = q_i x_i s_i over Q(q_1..q_n)
AlgebraPtr qShift(std::size_t n);
/// d_i x_i = q_i x_i d_i + 1 over Q(q_1..q_n)
AlgebraPtr qWeyl(std::size_t n);
/// I_i x_i = x_i I_i + I_i^2
AlgebraPtr integration(std::size_t n);

}  // namespace ore::zoo
