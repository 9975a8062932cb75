#pragma once

#include "lct/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lct {

using ExponentVector = std::vector<std::int64_t>;

// x^plus - coeff * x^minus with coeff != 0, plus != minus and neither the
// zero vector, so a generator can never silently degenerate to a monomial.
struct BinomialGen {
    ExponentVector plus;
    ExponentVector minus;
    Rational coeff = 1;

    friend bool operator==(const BinomialGen&, const BinomialGen&) = default;
};

struct MonomialGen {
    ExponentVector exponents;  // nonzero vector

    friend bool operator==(const MonomialGen&, const MonomialGen&) = default;
};

// An ideal of k[x_1..x_n] presented by binomial and monomial generators,
// optionally graded by positive integer weights (one per variable). When
// weights are present every binomial must be homogeneous for them.
struct IdealSpec {
    std::vector<std::string> variables;
    std::optional<std::vector<std::int64_t>> weights;
    std::vector<BinomialGen> binomials;
    std::vector<MonomialGen> monomials;

    std::size_t var_count() const { return variables.size(); }

    // Every violated invariant, one message each; empty means valid.
    std::vector<std::string> validate() const;

    friend bool operator==(const IdealSpec&, const IdealSpec&) = default;
};

// Weighted degree sum_j v_j * w_j. Throws on length mismatch or overflow.
std::int64_t h_degree(const ExponentVector& v, const std::vector<std::int64_t>& weights);

// Parses the documented JSON format and validates fully; throws
// ValidationError listing every violation found, not just the first.
IdealSpec parse_ideal(const std::string& text);

// Canonical JSON (sorted keys, lowest-terms coefficients, binomials before
// monomials). parse_ideal(serialize_ideal(s)) == s for any valid s.
std::string serialize_ideal(const IdealSpec& spec);

}  // namespace lct
