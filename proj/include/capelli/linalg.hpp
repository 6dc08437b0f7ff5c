#pragma once
// Exact Gaussian elimination over the rationals.

#include "capelli/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace capelli {

using Matrix = std::vector<std::vector<Rational>>;

/// Reduces m in place to reduced row echelon form; returns the pivot columns.
inline std::vector<int> row_reduce(Matrix& m, int ncols) {
    std::vector<int> pivots;
    int r = 0;
    const int nrows = static_cast<int>(m.size());
    for (int c = 0; c < ncols && r < nrows; ++c) {
        int piv = -1;
        for (int i = r; i < nrows; ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        const Rational inv = 1 / m[r][c];
        for (int j = c; j < static_cast<int>(m[r].size()); ++j) m[r][j] *= inv;
        for (int i = 0; i < nrows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (int j = c; j < static_cast<int>(m[i].size()); ++j)
                if (m[r][j] != 0) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline int matrix_rank(Matrix m) {
    if (m.empty()) return 0;
    return static_cast<int>(row_reduce(m, static_cast<int>(m.front().size())).size());
}

inline Rational determinant(Matrix m) {
    const int n = static_cast<int>(m.size());
    Rational det = 1;
    for (int c = 0; c < n; ++c) {
        int piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (int i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            const Rational f = m[i][c] / m[c][c];
            for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

/// Some x with A x = b (free variables set to zero), or nullopt when inconsistent.
inline std::optional<std::vector<Rational>> solve_linear(const Matrix& a, const std::vector<Rational>& b, int ncols) {
    Matrix aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) {
        aug[i].resize(ncols);
        aug[i].push_back(b[i]);
    }
    const auto pivots = row_reduce(aug, ncols + 1);
    std::vector<Rational> x(ncols, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == ncols) return std::nullopt;
        x[pivots[r]] = aug[r][ncols];
    }
    return x;
}

} // namespace capelli
