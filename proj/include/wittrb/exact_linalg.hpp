#pragma once

#include <cstddef>
#include <vector>

#include "wittrb/rational.hpp"

namespace wittrb {

/// In-place reduced row echelon form over the rationals (exact; no pivoting
/// heuristics needed without rounding). Returns the pivot column of each
/// nonzero row, in order.
inline std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        const Rational inv = Rational(1) / m[row][col];
        for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Rational factor = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= factor * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

/// Basis of the solution space of (rows) * x = 0 in n unknowns. Each basis
/// vector sets one free variable to 1, the canonical RREF parameterization.
inline std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> rows,
                                                    std::size_t n) {
    for (const auto& r : rows)
        if (r.size() != n) throw std::invalid_argument("nullspace: ragged row");
    const std::vector<std::size_t> pivots = rref(rows);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(n);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -rows[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace wittrb
