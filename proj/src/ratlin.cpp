#include "amalg/ratlin.hpp"

#include "amalg/errors.hpp"

#include <cstddef>
#include <utility>

namespace amalg {

std::vector<int> rref(RatMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const Rational inv = 1 / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

int rank(RatMat m) {
    return static_cast<int>(rref(m).size());
}

RatMat kernel_basis(const RatMat& a, int ncols) {
    RatMat m = a;
    for (const RatVec& row : m) {
        if (static_cast<int>(row.size()) != ncols) throw DimensionMismatch("kernel_basis: ragged matrix");
    }
    const std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

    RatMat basis;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        RatVec v(static_cast<std::size_t>(ncols), Rational(0));
        v[static_cast<std::size_t>(f)] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[static_cast<std::size_t>(pivots[r])] = -m[r][static_cast<std::size_t>(f)];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVec> solve_linear(const RatMat& a, const RatVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("solve_linear: rhs length");
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    RatMat aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    const std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) return std::nullopt;
    RatVec x(cols, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        x[static_cast<std::size_t>(pivots[r])] = aug[r][cols];
    }
    return x;
}

bool in_row_span(const RatMat& rows, const RatVec& v) {
    const int base = rank(rows);
    RatMat extended = rows;
    extended.push_back(v);
    return rank(extended) == base;
}

} // namespace amalg
