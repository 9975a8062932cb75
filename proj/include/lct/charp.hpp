#pragma once

#include "lct/ideal.hpp"
#include "lct/lct_engine.hpp"
#include "lct/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace lct {

// Cost meter for truncated polynomial arithmetic; charge() throws BudgetError
// once the configured number of term multiplications is spent.
struct Budget {
    std::int64_t limit = 10'000'000;
    std::int64_t used = 0;

    void charge(std::int64_t amount);
};

// Sparse polynomial over F_p. Terms are kept sorted lexicographically by
// exponent vector; coefficients lie in [1, p), so the zero polynomial has no
// terms at all.
struct PrimePoly {
    std::int64_t p = 0;
    std::size_t vars = 0;
    std::vector<std::int32_t> exps;    // term-major, vars entries per term
    std::vector<std::int64_t> coeffs;  // one entry per term

    std::size_t term_count() const { return coeffs.size(); }
    bool is_zero() const { return coeffs.empty(); }
};

PrimePoly poly_one(std::int64_t p, std::size_t vars);

// Product with every monomial containing an exponent >= q deleted. The
// deleted monomials span the ideal (x_1^q, ..., x_n^q), so iterated
// truncated products agree with the true product reduced modulo that ideal.
PrimePoly poly_mul_truncated(const PrimePoly& a, const PrimePoly& b, std::int64_t q,
                             Budget& budget);

// Binomial coefficient mod a prime via the base-p digit product.
std::int64_t lucas_binom(std::int64_t m, std::int64_t n, std::int64_t p);

// Largest r such that some product of r generators (with repetition) keeps a
// monomial whose exponents all stay below q = p^e, after reducing generator
// coefficients mod p. A certificate seeds the search near value * (q - 1);
// the returned value never depends on the seed.
std::int64_t nu(const IdealSpec& spec, std::int64_t p, int e, Budget& budget,
                const LctCertificate* cert = nullptr);

// Least common multiple of the witness denominators. Primes p with
// p = 1 mod n_modulus(cert) make every scaled witness entry integral.
std::int64_t n_modulus(const LctCertificate& cert);

struct NuReport {
    std::int64_t p = 0;
    int e = 1;
    std::int64_t q = 0;
    std::int64_t nu = 0;
    Rational ratio;                       // nu / q
    std::optional<Rational> lower_bound;  // value * (q - 1)
    std::optional<bool> bound_satisfied;  // nu >= lower_bound
};

// Runs nu() seeded by an exact certificate and records whether the count
// reaches value * (q - 1). Requires p = 1 mod n_modulus(cert).
NuReport fpt_lower_check(const IdealSpec& spec, const LctCertificate& cert, std::int64_t p,
                         int e, Budget& budget);

struct CoefficientWitness {
    std::int64_t value = 0;   // in [0, p)
    ExponentVector monomial;  // exponents of the tracked term, entrywise < q
};

// Closed-form coefficient of the tracked monomial in the product of
// generator powers prescribed by the witness, reduced mod p. Defined for
// purely binomial ideals whose scaled witness entries are integers.
CoefficientWitness coefficient_witness(const IdealSpec& spec, const LctCertificate& cert,
                                       std::int64_t p, int e);

}  // namespace lct
