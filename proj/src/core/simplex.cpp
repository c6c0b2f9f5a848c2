#include "core/simplex.hpp"

#include "core/error.hpp"

namespace nonloc {

namespace {

// Dense phase-one tableau. Row 0..m-1 are constraints, row m is the
// phase-one objective (sum of artificials, expressed in the nonbasic
// variables). Column layout: 0..n-1 original, n..n+m-1 artificial, last
// column the right-hand side.
struct Tableau {
    std::vector<std::vector<Rational>> rows;
    std::vector<std::size_t> basis;  // basic column per constraint row
    std::size_t m, n;

    Rational& at(std::size_t r, std::size_t c) { return rows[r][c]; }
    Rational& rhs(std::size_t r) { return rows[r][n + m]; }

    void pivot(std::size_t pr, std::size_t pc) {
        Rational inv = Rational(1) / rows[pr][pc];
        for (auto& cell : rows[pr]) cell *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pr || rows[r][pc].is_zero()) continue;
            Rational factor = rows[r][pc];
            for (std::size_t c = 0; c <= n + m; ++c) {
                rows[r][c] -= factor * rows[pr][c];
            }
        }
        basis[pr] = pc;
    }
};

}  // namespace

std::optional<std::vector<Rational>> solve_feasibility(
    const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b) {
    const std::size_t m = a.size();
    if (b.size() != m) {
        throw Error(ErrorCode::BadArgument, "constraint matrix/rhs size mismatch");
    }
    if (m == 0) return std::vector<Rational>{};
    const std::size_t n = a[0].size();

    Tableau t;
    t.m = m;
    t.n = n;
    t.basis.resize(m);
    t.rows.assign(m + 1, std::vector<Rational>(n + m + 1));
    for (std::size_t r = 0; r < m; ++r) {
        if (a[r].size() != n) {
            throw Error(ErrorCode::BadArgument, "ragged constraint matrix");
        }
        bool negate = b[r].is_negative();
        for (std::size_t c = 0; c < n; ++c) {
            t.at(r, c) = negate ? -a[r][c] : a[r][c];
        }
        t.rhs(r) = negate ? -b[r] : b[r];
        t.at(r, n + r) = Rational(1);
        t.basis[r] = n + r;
    }
    // Objective row: minimize sum of artificials. With artificials basic,
    // the reduced objective is -sum of constraint rows over original columns.
    for (std::size_t c = 0; c <= n + m; ++c) {
        Rational sum;
        for (std::size_t r = 0; r < m; ++r) sum += t.rows[r][c];
        t.rows[m][c] = -sum;
    }
    for (std::size_t r = 0; r < m; ++r) t.rows[m][n + r] = Rational(0);

    for (;;) {
        // Bland's rule: entering = lowest-index column with negative
        // reduced cost.
        std::size_t enter = n + m;
        for (std::size_t c = 0; c < n + m; ++c) {
            if (t.rows[m][c].is_negative()) {
                enter = c;
                break;
            }
        }
        if (enter == n + m) break;  // optimal

        // Ratio test; ties broken by lowest basic variable index (Bland).
        std::size_t leave = m;
        Rational best;
        for (std::size_t r = 0; r < m; ++r) {
            if (!(t.at(r, enter) > Rational(0))) continue;
            Rational ratio = t.rhs(r) / t.at(r, enter);
            if (leave == m || ratio < best ||
                (ratio == best && t.basis[r] < t.basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave == m) {
            // Unbounded phase-one objective cannot happen (bounded below
            // by 0 and decreasing), so this indicates a logic error.
            throw Error(ErrorCode::Internal, "phase-one simplex unbounded");
        }
        t.pivot(leave, enter);
    }

    // Optimum is -objective rhs.
    if (!t.rhs(m).is_zero()) return std::nullopt;

    std::vector<Rational> x(n, Rational(0));
    for (std::size_t r = 0; r < m; ++r) {
        if (t.basis[r] < n) x[t.basis[r]] = t.rhs(r);
        // An artificial basic at zero in a redundant row contributes nothing.
    }
    return x;
}

}  // namespace nonloc
