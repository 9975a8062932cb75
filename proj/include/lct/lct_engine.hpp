#pragma once

#include "lct/ideal.hpp"
#include "lct/lp.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lct {

// LP encoding of the threshold computation. Variables are ordered
// (mu_1..mu_r, nu_1..nu_r, lambda_1..lambda_s): one mu/nu pair per binomial,
// one lambda per monomial. Rows: for each ring variable, the total exponent
// weight loaded on it is at most 1; then for each binomial, mu_i + nu_i <= 1.
// Objective: maximize the sum of all variables. b is identically 1.
LpProblem build_lp(const IdealSpec& spec);

enum class CertStatus { exact, upper_bound };

struct LctCertificate {
    explicit LctCertificate(RatMatrix m) : matrix(std::move(m)) {}

    Rational value;   // LP optimum; equals the sum of solution's entries
    RatVec solution;  // optimal vertex; the certified witness when exact
    CertStatus status = CertStatus::upper_bound;
    RatMatrix matrix;  // the LP constraint matrix A
    std::size_t rank = 0;
    std::size_t kernel_dim = 0;
    std::optional<RatVec> criterion_witness;
    std::vector<std::string> notes;
};

// True iff no other optimal solution x' of p has A x' = A x, i.e. x is the
// unique optimum up to the image of the constraint matrix. Tested via the
// cone { k in ker A : x + k >= 0 }: the criterion holds iff it is trivial.
// x must be a feasible optimal solution of p.
bool check_criterion(const LpProblem& p, const RatVec& x, std::size_t binomial_count);

// Solves the LP of spec and walks the optimal face looking for a vertex
// passing check_criterion. Found: status exact, that vertex is the witness.
// Not found (or enumeration truncated at vertex_cap): status upper_bound,
// which is always a safe reading of the value.
LctCertificate compute_lct(const IdealSpec& spec, std::size_t vertex_cap = 10000);

// Threshold of a monomial ideal: max { sum lambda : sum lambda_j c_j <= 1,
// lambda >= 0 }. Exact for monomial ideals with no further conditions.
Rational monomial_lct(const std::vector<ExponentVector>& monomials);

// Threshold of the principal ideal (x^plus - coeff x^minus): the value of
// the two-term monomial ideal clamped to 1. The clamp belongs here and only
// here: this LP drops the pair row that caps binomial contributions in
// build_lp, and a principal ideal never exceeds 1.
Rational principal_binomial_lct(const BinomialGen& g);

// v in t*P where P = conv{c_j} + R_{>=0}^n: some lambda >= 0 with
// sum lambda = t and sum lambda_j c_j <= v componentwise. Requires t > 0.
bool newton_membership(const RatVec& v, const Rational& t,
                       const std::vector<ExponentVector>& monomials);

// Interior membership: some eps > 0 with v - eps*1 still in t*P.
bool newton_interior(const RatVec& v, const Rational& t,
                     const std::vector<ExponentVector>& monomials);

// The multiplier ideal of the monomial ideal at exponent t contains x^c
// iff c + 1 lies in the interior of t*P.
bool multiplier_monomial_contains(const ExponentVector& c, const Rational& t,
                                  const std::vector<ExponentVector>& monomials);

}  // namespace lct
