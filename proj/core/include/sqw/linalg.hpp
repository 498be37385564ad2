#pragma once

#include <vector>

#include "sqw/rational.hpp"

namespace sqw {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Solves M X = B exactly for square M by fraction-free (Bareiss) elimination after clearing
// row denominators. Each column of B is one right-hand side. Throws Errc::SingularSystem.
RationalMatrix solve_linear(const RationalMatrix& M, const RationalMatrix& B);

std::vector<Rational> solve_linear(const RationalMatrix& M, const std::vector<Rational>& b);

// Rank over Q, by the same elimination.
int matrix_rank(const RationalMatrix& M);

}  // namespace sqw
