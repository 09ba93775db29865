#pragma once

#include <optional>
#include <vector>

#include "thetaclass/rational.hpp"

namespace thetaclass {

using Matrix = std::vector<std::vector<Rational>>;

// In-place reduced row echelon form; returns the pivot column of each nonzero row. Pivots are
// only taken among the first pivot_cols columns (all columns by default).
std::vector<int> rref(Matrix& m, std::size_t pivot_cols = static_cast<std::size_t>(-1));

Rational determinant(Matrix m);

struct LinearSolution {
    std::vector<Rational> x;  // free variables set to 0
    bool unique = true;
};

// Solves A x = b exactly; nullopt when inconsistent.
std::optional<LinearSolution> solve_linear(const Matrix& a, const std::vector<Rational>& b);

}  // namespace thetaclass
