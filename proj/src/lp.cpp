#include "lct/lp.hpp"

#include "lct/error.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

namespace lct {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense tableau kept in canonical form: basic columns are unit columns and
// rhs stays >= 0. Column layout: n original variables, m slacks, then (only
// during phase 1) one artificial per negated row.
struct Tableau {
    std::size_t n = 0;      // original variables
    std::size_t ncols = 0;  // columns currently in play
    std::vector<RatVec> row;
    RatVec rhs;
    RatVec zrow;  // reduced costs; basic entries are identically zero
    std::vector<std::size_t> basis;

    std::size_t rows() const { return row.size(); }

    void pivot(std::size_t r, std::size_t col) {
        const Rational inv = Rational(1) / row[r][col];
        for (auto& v : row[r]) v *= inv;
        rhs[r] *= inv;
        for (std::size_t i = 0; i < rows(); ++i) {
            if (i == r || row[i][col].is_zero()) continue;
            const Rational f = row[i][col];
            for (std::size_t j = 0; j < ncols; ++j) row[i][j] -= f * row[r][j];
            rhs[i] -= f * rhs[r];
        }
        if (!zrow[col].is_zero()) {
            const Rational f = zrow[col];
            for (std::size_t j = 0; j < ncols; ++j) zrow[j] -= f * row[r][j];
        }
        basis[r] = col;
    }

    // One Bland iteration: entering = least column with positive reduced
    // cost, leaving = least basic index among the minimum ratios. Returns
    // false at optimality; throws never; reports unbounded via out param.
    bool step(bool& unbounded) {
        std::size_t enter = kNone;
        for (std::size_t j = 0; j < ncols; ++j)
            if (zrow[j].sign() > 0) { enter = j; break; }
        if (enter == kNone) return false;

        std::size_t leave = kNone;
        Rational best;
        for (std::size_t r = 0; r < rows(); ++r) {
            if (row[r][enter].sign() <= 0) continue;
            const Rational ratio = rhs[r] / row[r][enter];
            if (leave == kNone || ratio < best ||
                (ratio == best && basis[r] < basis[leave]))
                { leave = r; best = ratio; }
        }
        if (leave == kNone) { unbounded = true; return false; }
        pivot(leave, enter);
        return true;
    }

    bool run(/*returns true when optimal*/) {
        bool unbounded = false;
        while (step(unbounded)) {}
        return !unbounded;
    }

    RatVec extract_vertex() const {
        RatVec x(n);
        for (std::size_t r = 0; r < rows(); ++r)
            if (basis[r] < n) x[basis[r]] = rhs[r];
        return x;
    }
};

void check_dimensions(const LpProblem& p) {
    if (p.constraints.cols() != p.objective.size())
        throw Error("lp: objective length does not match constraint columns");
    if (p.constraints.rows() != p.rhs.size())
        throw Error("lp: rhs length does not match constraint rows");
}

Tableau slack_tableau(const LpProblem& p) {
    const std::size_t m = p.constraints.rows();
    const std::size_t n = p.constraints.cols();
    Tableau t;
    t.n = n;
    t.ncols = n + m;
    t.row.assign(m, RatVec(t.ncols));
    t.rhs = p.rhs;
    t.zrow.assign(t.ncols, Rational(0));
    t.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t.row[i][j] = p.constraints.at(i, j);
        t.row[i][n + i] = 1;
        t.basis[i] = n + i;
    }
    return t;
}

// Drives the artificials of the negated rows to zero. Returns false when
// the system is infeasible. On success the tableau is feasible for the
// original columns, artificials removed, redundant rows dropped.
bool run_phase_one(Tableau& t) {
    std::vector<std::size_t> art_rows;
    for (std::size_t r = 0; r < t.rows(); ++r)
        if (t.rhs[r].sign() < 0) art_rows.push_back(r);
    const std::size_t base = t.ncols;
    t.ncols += art_rows.size();
    for (auto& row : t.row) row.resize(t.ncols);
    t.zrow.assign(t.ncols, Rational(0));
    for (std::size_t k = 0; k < art_rows.size(); ++k) {
        const std::size_t r = art_rows[k];
        for (auto& v : t.row[r]) v = -v;
        t.rhs[r] = -t.rhs[r];
        t.row[r][base + k] = 1;
        t.basis[r] = base + k;
    }
    // Reduced costs of max(-sum of artificials) with the artificials basic.
    for (std::size_t r : art_rows)
        for (std::size_t j = 0; j < base; ++j) t.zrow[j] += t.row[r][j];

    if (!t.run()) throw Error("lp: phase 1 cannot be unbounded");  // objective <= 0

    for (std::size_t r = 0; r < t.rows(); ++r)
        if (t.basis[r] >= base && t.rhs[r].sign() != 0) return false;

    // Kick degenerate artificials out of the basis; a row with no real
    // coefficients left is a dependent constraint and gets dropped.
    std::vector<std::size_t> drop;
    for (std::size_t r = 0; r < t.rows(); ++r) {
        if (t.basis[r] < base) continue;
        std::size_t col = kNone;
        for (std::size_t j = 0; j < base; ++j)
            if (!t.row[r][j].is_zero()) { col = j; break; }
        if (col == kNone) { drop.push_back(r); continue; }
        t.pivot(r, col);  // rhs is zero, so feasibility survives either sign
    }
    for (auto it = drop.rbegin(); it != drop.rend(); ++it) {
        t.row.erase(t.row.begin() + static_cast<std::ptrdiff_t>(*it));
        t.rhs.erase(t.rhs.begin() + static_cast<std::ptrdiff_t>(*it));
        t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(*it));
    }
    t.ncols = base;
    for (auto& row : t.row) row.resize(t.ncols);
    t.zrow.resize(t.ncols);
    return true;
}

void install_objective(Tableau& t, const RatVec& c) {
    t.zrow.assign(t.ncols, Rational(0));
    for (std::size_t j = 0; j < t.n; ++j) t.zrow[j] = c[j];
    for (std::size_t r = 0; r < t.rows(); ++r) {
        if (t.basis[r] >= t.n) continue;
        const Rational cb = c[t.basis[r]];
        if (cb.is_zero()) continue;
        for (std::size_t j = 0; j < t.ncols; ++j) t.zrow[j] -= cb * t.row[r][j];
    }
}

// Shared front half of lp_solve and lp_optimal_vertices.
LpStatus solve_tableau(const LpProblem& p, Tableau& t) {
    check_dimensions(p);
    t = slack_tableau(p);
    const bool needs_phase_one =
        std::any_of(p.rhs.begin(), p.rhs.end(), [](const Rational& b) { return b.sign() < 0; });
    if (needs_phase_one && !run_phase_one(t)) return LpStatus::infeasible;
    install_objective(t, p.objective);
    return t.run() ? LpStatus::optimal : LpStatus::unbounded;
}

LpSolution extract_solution(const Tableau& t, const LpProblem& p) {
    LpSolution s;
    s.status = LpStatus::optimal;
    s.vertex = t.extract_vertex();
    s.value = dot(p.objective, s.vertex);
    s.basis = t.basis;
    std::sort(s.basis.begin(), s.basis.end());
    return s;
}

}  // namespace

LpSolution lp_solve(const LpProblem& p) {
    Tableau t;
    const LpStatus status = solve_tableau(p, t);
    if (status != LpStatus::optimal) {
        LpSolution s;
        s.status = status;
        return s;
    }
    return extract_solution(t, p);
}

VertexEnumeration lp_optimal_vertices(const LpProblem& p, std::size_t cap) {
    Tableau start;
    const LpStatus status = solve_tableau(p, start);
    if (status == LpStatus::infeasible) throw Error("lp_optimal_vertices: infeasible program");
    if (status == LpStatus::unbounded) throw Error("lp_optimal_vertices: unbounded program");

    // Breadth-first search over bases. Entering a column with zero reduced
    // cost leaves the reduced costs untouched, so every basis reached stays
    // optimal; degenerate pivots (ratio zero, or a negative entry on a
    // zero-rhs row) bridge between bases of the same vertex.
    VertexEnumeration out;
    std::set<std::vector<std::size_t>> seen_bases;
    std::set<RatVec> seen_vertices;
    std::deque<Tableau> queue;

    const auto visit_vertex = [&](const Tableau& t) {
        RatVec v = t.extract_vertex();
        if (seen_vertices.insert(v).second) {
            if (out.vertices.size() == cap) {
                out.truncated = true;
                return false;
            }
            out.vertices.push_back(std::move(v));
        }
        return true;
    };

    {
        std::vector<std::size_t> b = start.basis;
        std::sort(b.begin(), b.end());
        seen_bases.insert(std::move(b));
    }
    if (!visit_vertex(start)) return out;
    queue.push_back(std::move(start));

    // Backstop against basis blowup on heavily degenerate faces; production
    // instances here visit a few dozen bases at most.
    const std::size_t max_bases = std::max<std::size_t>(200000, cap);

    while (!queue.empty()) {
        Tableau t = std::move(queue.front());
        queue.pop_front();

        std::vector<bool> is_basic(t.ncols, false);
        for (std::size_t b : t.basis) is_basic[b] = true;

        for (std::size_t enter = 0; enter < t.ncols; ++enter) {
            if (is_basic[enter] || !t.zrow[enter].is_zero()) continue;

            std::vector<std::size_t> leaves;
            Rational best;
            bool have_ratio = false;
            for (std::size_t r = 0; r < t.rows(); ++r) {
                if (t.row[r][enter].sign() <= 0) continue;
                const Rational ratio = t.rhs[r] / t.row[r][enter];
                if (!have_ratio || ratio < best) {
                    best = ratio;
                    leaves.assign(1, r);
                    have_ratio = true;
                } else if (ratio == best) {
                    leaves.push_back(r);
                }
            }
            // A negative entry on a zero-rhs row swaps bases without moving
            // any value, so it is feasible no matter what the ratios say.
            for (std::size_t r = 0; r < t.rows(); ++r)
                if (t.rhs[r].is_zero() && t.row[r][enter].sign() < 0)
                    leaves.push_back(r);
            if (!have_ratio && leaves.empty()) continue;  // extreme ray

            for (std::size_t r : leaves) {
                std::vector<std::size_t> nb = t.basis;
                nb[r] = enter;
                std::sort(nb.begin(), nb.end());
                if (seen_bases.size() >= max_bases) { out.truncated = true; return out; }
                if (!seen_bases.insert(std::move(nb)).second) continue;
                Tableau next = t;
                next.pivot(r, enter);
                if (!visit_vertex(next)) return out;
                queue.push_back(std::move(next));
            }
        }
    }
    return out;
}

}  // namespace lct
