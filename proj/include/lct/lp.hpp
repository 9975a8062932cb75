#pragma once

#include "lct/matrix.hpp"

#include <cstddef>
#include <vector>

namespace lct {

// max c.x subject to A x <= b, x >= 0.
struct LpProblem {
    RatVec objective;       // c, one entry per variable
    RatMatrix constraints;  // A
    RatVec rhs;             // b
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    Rational value;  // c.x at the returned vertex
    RatVec vertex;   // original variables only, exact
    std::vector<std::size_t> basis;  // sorted basic columns in [0, n+m): variables then slacks
};

// Exact primal simplex with Bland's rule, so it terminates on degenerate
// instances. Starts from the slack basis; a two-phase run handles negative
// right-hand sides. Fully deterministic.
LpSolution lp_solve(const LpProblem& p);

struct VertexEnumeration {
    std::vector<RatVec> vertices;  // distinct optimal vertices, discovery order
    bool truncated = false;        // stopped before exhausting the face
};

// Every vertex of the optimal face, by breadth-first pivoting among bases
// with unchanged (optimal) reduced costs, deduplicated by coordinates.
// vertices.front() is the lp_solve vertex. Throws unless the LP has a
// bounded optimum.
VertexEnumeration lp_optimal_vertices(const LpProblem& p, std::size_t cap = 10000);

}  // namespace lct
