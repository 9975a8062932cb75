#include "lct/lct_engine.hpp"

#include "lct/error.hpp"

#include <algorithm>
#include <string>

namespace lct {

namespace {

void require_valid(const IdealSpec& spec) {
    auto diags = spec.validate();
    if (!diags.empty()) throw ValidationError(std::move(diags));
}

// Shared checks for the monomial-list entry points: nonempty, consistent
// lengths, nonnegative entries, no zero vector. Returns the variable count.
std::size_t require_monomial_list(const std::vector<ExponentVector>& monomials) {
    if (monomials.empty()) throw Error("monomial list must be nonempty");
    const std::size_t n = monomials.front().size();
    if (n == 0) throw Error("monomial exponent vectors must be nonempty");
    for (const auto& c : monomials) {
        if (c.size() != n) throw Error("monomial exponent vectors must all have the same length");
        bool nonzero = false;
        for (std::int64_t e : c) {
            if (e < 0) throw Error("monomial exponents must be nonnegative");
            if (e > 0) nonzero = true;
        }
        if (!nonzero) throw Error("monomial exponent vectors must be nonzero");
    }
    return n;
}

}  // namespace

LpProblem build_lp(const IdealSpec& spec) {
    require_valid(spec);
    const std::size_t n = spec.var_count();
    const std::size_t r = spec.binomials.size();
    const std::size_t s = spec.monomials.size();

    LpProblem p{RatVec(2 * r + s, Rational(1)), RatMatrix(n + r, 2 * r + s),
                RatVec(n + r, Rational(1))};
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            p.constraints.at(j, i) = spec.binomials[i].plus[j];
            p.constraints.at(j, r + i) = spec.binomials[i].minus[j];
        }
        p.constraints.at(n + i, i) = 1;
        p.constraints.at(n + i, r + i) = 1;
    }
    for (std::size_t k = 0; k < s; ++k)
        for (std::size_t j = 0; j < n; ++j)
            p.constraints.at(j, 2 * r + k) = spec.monomials[k].exponents[j];
    return p;
}

bool check_criterion(const LpProblem& p, const RatVec& x, std::size_t binomial_count) {
    const RatMatrix& a = p.constraints;
    if (x.size() != a.cols()) throw Error("check_criterion: solution length mismatch");
    if (a.rows() < binomial_count) throw Error("check_criterion: malformed program");

    const std::vector<RatVec> kernel = nullspace(a);
    if (kernel.empty()) return true;  // injective matrix, nothing can move

    std::vector<std::size_t> zero_coords;
    for (std::size_t j = 0; j < x.size(); ++j)
        if (x[j].is_zero()) zero_coords.push_back(j);
    // With x > 0 everywhere, x + t*k stays nonnegative for small t along any
    // kernel direction.
    if (zero_coords.empty()) return false;

    const std::size_t d = kernel.size();
    RatMatrix dz(zero_coords.size(), d);
    for (std::size_t zi = 0; zi < zero_coords.size(); ++zi)
        for (std::size_t k = 0; k < d; ++k) dz.at(zi, k) = kernel[k][zero_coords[zi]];

    // A kernel combination vanishing on all zero coordinates moves x while
    // keeping it nonnegative (the positive coordinates absorb small moves).
    if (rank(dz) < d) return false;

    // Remaining case: does some combination k = D*lambda satisfy k >= 0 on
    // the zero coordinates with a strictly positive entry there? Scale so
    // the positive part sums to at most 1 and ask the LP; lambda is free,
    // split as u - v.
    LpProblem q{RatVec(2 * d), RatMatrix(zero_coords.size() + 1, 2 * d),
                RatVec(zero_coords.size() + 1, Rational(0))};
    for (std::size_t zi = 0; zi < zero_coords.size(); ++zi) {
        for (std::size_t k = 0; k < d; ++k) {
            q.constraints.at(zi, k) = -dz.at(zi, k);
            q.constraints.at(zi, d + k) = dz.at(zi, k);
        }
    }
    for (std::size_t k = 0; k < d; ++k) {
        Rational col_sum;
        for (std::size_t zi = 0; zi < zero_coords.size(); ++zi) col_sum += dz.at(zi, k);
        q.objective[k] = col_sum;
        q.objective[d + k] = -col_sum;
        q.constraints.at(zero_coords.size(), k) = col_sum;
        q.constraints.at(zero_coords.size(), d + k) = -col_sum;
    }
    q.rhs[zero_coords.size()] = 1;

    const LpSolution sol = lp_solve(q);
    if (sol.status != LpStatus::optimal)
        throw Error("check_criterion: inner program must be solvable");
    return sol.value.is_zero();
}

LctCertificate compute_lct(const IdealSpec& spec, std::size_t vertex_cap) {
    const LpProblem p = build_lp(spec);
    const LpSolution base = lp_solve(p);
    if (base.status != LpStatus::optimal)
        throw Error("compute_lct: threshold program must have a bounded optimum");

    LctCertificate cert(p.constraints);
    cert.value = base.value;
    cert.solution = base.vertex;
    cert.rank = rank(p.constraints);
    cert.kernel_dim = p.constraints.cols() - cert.rank;

    for (std::size_t i = 0; i < spec.binomials.size(); ++i)
        for (std::size_t j = i + 1; j < spec.binomials.size(); ++j)
            if (spec.binomials[i].plus == spec.binomials[j].plus)
                cert.notes.push_back("binomials " + std::to_string(i + 1) + " and " +
                                     std::to_string(j + 1) +
                                     " share the same plus exponents; the reduction assumes "
                                     "distinct leading terms");

    const VertexEnumeration face = lp_optimal_vertices(p, vertex_cap);
    for (const RatVec& v : face.vertices) {
        if (check_criterion(p, v, spec.binomials.size())) {
            cert.status = CertStatus::exact;
            cert.solution = v;
            cert.criterion_witness = v;
            break;
        }
    }
    if (cert.status != CertStatus::exact && face.truncated)
        cert.notes.push_back("optimal-face enumeration stopped at the vertex cap (" +
                             std::to_string(vertex_cap) + "); an untested vertex could still "
                             "certify the value");
    return cert;
}

Rational monomial_lct(const std::vector<ExponentVector>& monomials) {
    const std::size_t n = require_monomial_list(monomials);
    const std::size_t s = monomials.size();
    LpProblem p{RatVec(s, Rational(1)), RatMatrix(n, s), RatVec(n, Rational(1))};
    for (std::size_t k = 0; k < s; ++k)
        for (std::size_t j = 0; j < n; ++j) p.constraints.at(j, k) = monomials[k][j];
    const LpSolution sol = lp_solve(p);
    if (sol.status != LpStatus::optimal)
        throw Error("monomial_lct: program must have a bounded optimum");
    return sol.value;
}

Rational principal_binomial_lct(const BinomialGen& g) {
    if (g.coeff.is_zero()) throw Error("principal_binomial_lct: zero coefficient");
    if (g.plus == g.minus) throw Error("principal_binomial_lct: plus and minus coincide");
    const Rational value = monomial_lct({g.plus, g.minus});
    return std::min(value, Rational(1));
}

bool newton_membership(const RatVec& v, const Rational& t,
                       const std::vector<ExponentVector>& monomials) {
    const std::size_t n = require_monomial_list(monomials);
    if (v.size() != n) throw Error("newton_membership: point length mismatch");
    if (t.sign() <= 0) throw Error("newton_membership: t must be positive");

    // max sum lambda subject to C lambda <= v and sum lambda <= t; the point
    // lies in t*P exactly when the cap t is attained.
    const std::size_t s = monomials.size();
    LpProblem p{RatVec(s, Rational(1)), RatMatrix(n + 1, s), RatVec(n + 1)};
    for (std::size_t k = 0; k < s; ++k) {
        for (std::size_t j = 0; j < n; ++j) p.constraints.at(j, k) = monomials[k][j];
        p.constraints.at(n, k) = 1;
    }
    for (std::size_t j = 0; j < n; ++j) p.rhs[j] = v[j];
    p.rhs[n] = t;

    const LpSolution sol = lp_solve(p);
    if (sol.status == LpStatus::infeasible) return false;  // v below the positive orthant
    if (sol.status != LpStatus::optimal) throw Error("newton_membership: unbounded program");
    return sol.value == t;
}

bool newton_interior(const RatVec& v, const Rational& t,
                     const std::vector<ExponentVector>& monomials) {
    const std::size_t n = require_monomial_list(monomials);
    if (v.size() != n) throw Error("newton_interior: point length mismatch");
    if (t.sign() <= 0) throw Error("newton_interior: t must be positive");

    // Variables (lambda_1..lambda_s, eps): max eps subject to
    // C lambda + eps <= v componentwise and sum lambda = t (two inequalities).
    // t*P is upward closed, so interior membership is exactly eps > 0.
    const std::size_t s = monomials.size();
    LpProblem p{RatVec(s + 1), RatMatrix(n + 2, s + 1), RatVec(n + 2)};
    p.objective[s] = 1;
    for (std::size_t k = 0; k < s; ++k) {
        for (std::size_t j = 0; j < n; ++j) p.constraints.at(j, k) = monomials[k][j];
        p.constraints.at(n, k) = 1;
        p.constraints.at(n + 1, k) = -1;
    }
    for (std::size_t j = 0; j < n; ++j) {
        p.constraints.at(j, s) = 1;
        p.rhs[j] = v[j];
    }
    p.rhs[n] = t;
    p.rhs[n + 1] = -t;

    const LpSolution sol = lp_solve(p);
    if (sol.status == LpStatus::infeasible) return false;
    if (sol.status != LpStatus::optimal) throw Error("newton_interior: unbounded program");
    return sol.value.sign() > 0;
}

bool multiplier_monomial_contains(const ExponentVector& c, const Rational& t,
                                  const std::vector<ExponentVector>& monomials) {
    RatVec v(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] < 0) throw Error("multiplier_monomial_contains: exponents must be nonnegative");
        v[j] = Rational(c[j]) + Rational(1);
    }
    return newton_interior(v, t, monomials);
}

}  // namespace lct
