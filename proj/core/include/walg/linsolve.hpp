#pragma once

#include <vector>

#include "walg/scalar.hpp"

namespace walg {

// Exact solution of A x = b over Q(k) by Gaussian elimination.
// Throws NoSolution when inconsistent and NonUniqueSolution when rank-deficient.
std::vector<Scalar> solve_linear(std::vector<std::vector<Scalar>> A, std::vector<Scalar> b);

}  // namespace walg
