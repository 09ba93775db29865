#include "thetaclass/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace thetaclass {

std::vector<int> rref(Matrix& m, std::size_t pivot_cols) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m[0].size();
    const std::size_t limit = std::min(cols, pivot_cols);
    std::size_t row = 0;
    for (std::size_t c = 0; c < limit && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && m[p][c].is_zero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        Rational inv = Rational(1) / m[row][c];
        for (auto& v : m[row]) v *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][c].is_zero()) continue;
            Rational f = m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[row][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++row;
    }
    return pivots;
}

Rational determinant(Matrix m) {
    const std::size_t n = m.size();
    for (const auto& r : m)
        if (r.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    Rational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c].is_zero()) continue;
            Rational f = m[r][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    return det;
}

std::optional<LinearSolution> solve_linear(const Matrix& a, const std::vector<Rational>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("solve_linear: row count mismatch");
    const std::size_t n = a.empty() ? 0 : a[0].size();
    Matrix aug = a;
    for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
    if (aug.empty()) return LinearSolution{std::vector<Rational>(n), n == 0};
    auto pivots = rref(aug, n);
    for (std::size_t r = pivots.size(); r < aug.size(); ++r)
        if (!aug[r][n].is_zero()) return std::nullopt;
    LinearSolution sol{std::vector<Rational>(n), pivots.size() == n};
    for (std::size_t r = 0; r < pivots.size(); ++r) sol.x[pivots[r]] = aug[r][n];
    return sol;
}

}  // namespace thetaclass
