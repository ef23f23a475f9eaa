#include "support/simplex.hpp"

#include "amalg/errors.hpp"

#include <cstddef>

namespace amalg::testsupport {

namespace {

// Tableau rows: m constraint rows over (nvars + 1) columns, rhs last.
// basis[i] is the variable owning row i. Objective handled by a reduced
// cost row: cost[j] - z[j] for maximization.
struct Tableau {
    RatMat rows;
    RatVec reduced; // length nvars
    Rational value; // objective value of the current basic solution
    std::vector<int> basis;

    std::size_t nvars() const { return reduced.size(); }

    void pivot(std::size_t r, std::size_t c) {
        const Rational inv = 1 / rows[r][c];
        for (Rational& v : rows[r]) v *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Rational f = rows[i][c];
            for (std::size_t j = 0; j <= nvars(); ++j) rows[i][j] -= f * rows[r][j];
        }
        if (reduced[c] != 0) {
            const Rational f = reduced[c];
            for (std::size_t j = 0; j < nvars(); ++j) reduced[j] -= f * rows[r][j];
            value += f * rows[r][nvars()];
        }
        basis[r] = static_cast<int>(c);
    }

    // Bland: entering = lowest index with positive reduced cost; leaving =
    // lowest ratio, ties by lowest basis variable. Returns false when
    // optimal, throws on unboundedness.
    bool step() {
        std::size_t enter = nvars();
        for (std::size_t j = 0; j < nvars(); ++j) {
            if (reduced[j] > 0) {
                enter = j;
                break;
            }
        }
        if (enter == nvars()) return false;
        std::size_t leave = rows.size();
        Rational best;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i][enter] <= 0) continue;
            const Rational ratio = rows[i][nvars()] / rows[i][enter];
            if (leave == rows.size() || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == rows.size()) throw Error("lp_solve: unbounded objective");
        pivot(leave, enter);
        return true;
    }
};

} // namespace

LpResult lp_solve(const RatMat& a, const RatVec& b, const RatVec& c) {
    const std::size_t m = a.size();
    const std::size_t n = c.size();
    for (const RatVec& row : a) {
        if (row.size() != n) throw DimensionMismatch("lp_solve: ragged constraint matrix");
    }
    if (b.size() != m) throw DimensionMismatch("lp_solve: rhs length");

    // Phase 1 over original + artificial variables.
    Tableau t;
    t.rows.assign(m, RatVec(n + m + 1, Rational(0)));
    t.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j) t.rows[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
        t.rows[i][n + i] = 1;
        t.rows[i][n + m] = flip ? Rational(-b[i]) : b[i];
        t.basis[i] = static_cast<int>(n + i);
    }
    // maximize -sum(artificials): reduced costs 0 - z_j with z from the
    // artificial basis.
    t.reduced.assign(n + m, Rational(0));
    t.value = 0;
    for (std::size_t j = 0; j < n; ++j) {
        Rational col(0);
        for (std::size_t i = 0; i < m; ++i) col += t.rows[i][j];
        t.reduced[j] = col;
    }
    for (std::size_t i = 0; i < m; ++i) t.value -= t.rows[i][n + m];

    while (t.step()) {
    }
    if (t.value != 0) return {LpStatus::infeasible, Rational(0), {}};

    // Drive leftover artificials (degenerate, value 0) out of the basis;
    // rows with no original coefficient are redundant and dropped.
    for (std::size_t i = 0; i < t.rows.size();) {
        if (t.basis[i] < static_cast<int>(n)) {
            ++i;
            continue;
        }
        std::size_t c0 = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (t.rows[i][j] != 0) {
                c0 = j;
                break;
            }
        }
        if (c0 == n) {
            t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
            t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            t.pivot(i, c0);
            ++i;
        }
    }

    // Phase 2: strip artificial columns, install the real objective.
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        t.rows[i][n] = t.rows[i][n + m];
        t.rows[i].resize(n + 1);
    }
    t.reduced.assign(n, Rational(0));
    t.value = 0;
    for (std::size_t j = 0; j < n; ++j) t.reduced[j] = c[j];
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const Rational cb = c[static_cast<std::size_t>(t.basis[i])];
        if (cb == 0) continue;
        for (std::size_t j = 0; j < n; ++j) t.reduced[j] -= cb * t.rows[i][j];
        t.value += cb * t.rows[i][n];
    }

    try {
        while (t.step()) {
        }
    } catch (const Error&) {
        return {LpStatus::unbounded, Rational(0), {}};
    }

    LpResult out;
    out.status = LpStatus::optimal;
    out.objective = t.value;
    out.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        out.x[static_cast<std::size_t>(t.basis[i])] = t.rows[i][n];
    }
    return out;
}

} // namespace amalg::testsupport
