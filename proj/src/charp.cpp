#include "lct/charp.hpp"

#include "lct/error.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

namespace lct {

namespace {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::int64_t checked_power(std::int64_t p, int e) {
    if (e < 1) throw Error("exponent e must be positive");
    std::int64_t q = 1;
    const std::int64_t cap = std::numeric_limits<std::int32_t>::max();
    for (int t = 0; t < e; ++t) {
        if (q > cap / p) throw Error("q = p^e exceeds the supported range");
        q *= p;
    }
    return q;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t reduce_mod(const mpz_class& v, std::int64_t p) {
    mpz_class r = v % p;
    if (r < 0) r += p;
    return r.get_si();
}

// num/den mod p; both parts must stay nonzero for the reduction to preserve
// the generator.
std::int64_t reduce_coeff(const Rational& coeff, std::int64_t p, const std::string& label) {
    const std::int64_t num = reduce_mod(coeff.num(), p);
    const std::int64_t den = reduce_mod(coeff.den(), p);
    if (num == 0 || den == 0)
        throw Error(label + ": p divides a generator coefficient, reduction degenerates");
    mpz_class inv;
    mpz_class den_z(static_cast<long>(den)), p_z(static_cast<long>(p));
    if (mpz_invert(inv.get_mpz_t(), den_z.get_mpz_t(), p_z.get_mpz_t()) == 0)
        throw Error(label + ": coefficient denominator is not invertible mod p");
    return mul_mod(num, inv.get_si(), p);
}

bool lex_less(const std::vector<std::int32_t>& exps, std::size_t vars, std::size_t a,
              std::size_t b) {
    for (std::size_t j = 0; j < vars; ++j) {
        const std::int32_t ea = exps[a * vars + j], eb = exps[b * vars + j];
        if (ea != eb) return ea < eb;
    }
    return false;
}

void push_term(PrimePoly& poly, const ExponentVector& exps, std::int64_t coeff,
               std::int64_t q) {
    if (coeff == 0) return;
    for (std::int64_t v : exps)
        if (v >= q) return;
    for (std::int64_t v : exps) poly.exps.push_back(static_cast<std::int32_t>(v));
    poly.coeffs.push_back(coeff);
}

void sort_terms(PrimePoly& poly) {
    const std::size_t n = poly.term_count();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return lex_less(poly.exps, poly.vars, a, b);
    });
    PrimePoly out{poly.p, poly.vars, {}, {}};
    out.exps.reserve(poly.exps.size());
    out.coeffs.reserve(n);
    for (std::size_t i : idx) {
        for (std::size_t j = 0; j < poly.vars; ++j)
            out.exps.push_back(poly.exps[i * poly.vars + j]);
        out.coeffs.push_back(poly.coeffs[i]);
    }
    poly = std::move(out);
}

std::vector<PrimePoly> reduce_generators(const IdealSpec& spec, std::int64_t p,
                                         std::int64_t q) {
    std::vector<PrimePoly> gens;
    for (std::size_t i = 0; i < spec.binomials.size(); ++i) {
        const BinomialGen& g = spec.binomials[i];
        const std::int64_t gamma =
            reduce_coeff(g.coeff, p, "binomial " + std::to_string(i + 1));
        PrimePoly poly{p, spec.var_count(), {}, {}};
        push_term(poly, g.plus, 1, q);
        push_term(poly, g.minus, (p - gamma) % p, q);
        sort_terms(poly);
        gens.push_back(std::move(poly));
    }
    for (const MonomialGen& g : spec.monomials) {
        PrimePoly poly{p, spec.var_count(), {}, {}};
        push_term(poly, g.exponents, 1, q);
        gens.push_back(std::move(poly));
    }
    return gens;
}

// Truncated powers of each generator, one row per generator, grown on demand.
class PowerTable {
public:
    PowerTable(std::vector<PrimePoly> gens, std::int64_t q, Budget& budget)
        : gens_(std::move(gens)), q_(q), budget_(budget) {
        for (const PrimePoly& g : gens_)
            rows_.push_back({poly_one(g.p, g.vars)});
    }

    const PrimePoly& get(std::size_t i, std::int64_t k) {
        auto& row = rows_[i];
        while (static_cast<std::int64_t>(row.size()) <= k)
            row.push_back(poly_mul_truncated(row.back(), gens_[i], q_, budget_));
        return row[static_cast<std::size_t>(k)];
    }

private:
    std::vector<PrimePoly> gens_;
    std::int64_t q_;
    Budget& budget_;
    std::vector<std::vector<PrimePoly>> rows_;
};

// Does some product of r generators keep a term after truncation?
// Compositions are scanned in ascending lexicographic order and the scan
// stops at the first survivor.
bool power_survives(PowerTable& table, std::size_t gen_count, std::int64_t r, std::int64_t q,
                    Budget& budget) {
    if (r == 0) return true;
    std::vector<std::int64_t> parts(gen_count, 0);
    std::function<bool(std::size_t, std::int64_t)> scan = [&](std::size_t idx,
                                                              std::int64_t rest) -> bool {
        if (idx + 1 == gen_count) {
            parts[idx] = rest;
            std::vector<const PrimePoly*> factors;
            for (std::size_t i = 0; i < gen_count; ++i) {
                if (parts[i] == 0) continue;
                const PrimePoly& pw = table.get(i, parts[i]);
                if (pw.is_zero()) return false;
                factors.push_back(&pw);
            }
            std::sort(factors.begin(), factors.end(),
                      [](const PrimePoly* a, const PrimePoly* b) {
                          return a->term_count() < b->term_count();
                      });
            PrimePoly acc = *factors.front();
            for (std::size_t f = 1; f < factors.size(); ++f) {
                acc = poly_mul_truncated(acc, *factors[f], q, budget);
                if (acc.is_zero()) return false;
            }
            return true;
        }
        for (std::int64_t v = 0; v <= rest; ++v) {
            parts[idx] = v;
            if (scan(idx + 1, rest - v)) return true;
        }
        return false;
    };
    return scan(0, r);
}

}  // namespace

void Budget::charge(std::int64_t amount) {
    if (amount < 0) throw Error("Budget::charge: negative amount");
    if (used > limit - amount)
        throw BudgetError("term multiplication budget exceeded (limit " +
                          std::to_string(limit) + ", spent " + std::to_string(used) +
                          ", requested " + std::to_string(amount) + ")");
    used += amount;
}

PrimePoly poly_one(std::int64_t p, std::size_t vars) {
    PrimePoly poly{p, vars, {}, {}};
    poly.exps.assign(vars, 0);
    poly.coeffs.push_back(1);
    return poly;
}

PrimePoly poly_mul_truncated(const PrimePoly& a, const PrimePoly& b, std::int64_t q,
                             Budget& budget) {
    if (a.p != b.p || a.vars != b.vars) throw Error("poly_mul_truncated: mixed polynomials");
    const unsigned __int128 work =
        static_cast<unsigned __int128>(a.term_count()) * b.term_count();
    if (work > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max()))
        throw BudgetError("term multiplication budget exceeded (single product too large)");
    budget.charge(static_cast<std::int64_t>(work));

    const std::size_t vars = a.vars;
    PrimePoly prod{a.p, vars, {}, {}};
    std::vector<std::int32_t> term(vars);
    for (std::size_t i = 0; i < a.term_count(); ++i) {
        for (std::size_t j = 0; j < b.term_count(); ++j) {
            bool keep = true;
            for (std::size_t v = 0; v < vars; ++v) {
                const std::int64_t e = static_cast<std::int64_t>(a.exps[i * vars + v]) +
                                       b.exps[j * vars + v];
                if (e >= q) {
                    keep = false;
                    break;
                }
                term[v] = static_cast<std::int32_t>(e);
            }
            if (!keep) continue;
            prod.exps.insert(prod.exps.end(), term.begin(), term.end());
            prod.coeffs.push_back(mul_mod(a.coeffs[i], b.coeffs[j], a.p));
        }
    }
    sort_terms(prod);

    // Merge runs of equal exponent vectors.
    PrimePoly out{a.p, vars, {}, {}};
    std::size_t i = 0;
    while (i < prod.term_count()) {
        std::size_t j = i + 1;
        std::int64_t c = prod.coeffs[i];
        while (j < prod.term_count() && !lex_less(prod.exps, vars, i, j)) {
            c = (c + prod.coeffs[j]) % a.p;
            ++j;
        }
        if (c != 0) {
            for (std::size_t v = 0; v < vars; ++v) out.exps.push_back(prod.exps[i * vars + v]);
            out.coeffs.push_back(c);
        }
        i = j;
    }
    return out;
}

std::int64_t lucas_binom(std::int64_t m, std::int64_t n, std::int64_t p) {
    if (!is_prime(p)) throw Error("lucas_binom: modulus must be prime");
    if (m < 0 || n < 0) throw Error("lucas_binom: arguments must be nonnegative");
    if (n > m) return 0;
    mpz_class acc = 1;
    while (m > 0 || n > 0) {
        const unsigned long md = static_cast<unsigned long>(m % p);
        const unsigned long nd = static_cast<unsigned long>(n % p);
        if (nd > md) return 0;
        mpz_class digit;
        mpz_bin_uiui(digit.get_mpz_t(), md, nd);
        acc = acc * digit % p;
        m /= p;
        n /= p;
    }
    return acc.get_si();
}

std::int64_t nu(const IdealSpec& spec, std::int64_t p, int e, Budget& budget,
                const LctCertificate* cert) {
    auto diags = spec.validate();
    if (!diags.empty()) throw ValidationError(std::move(diags));
    if (!is_prime(p)) throw Error("nu: p must be prime");
    const std::int64_t q = checked_power(p, e);

    const std::int64_t n_vars = static_cast<std::int64_t>(spec.var_count());
    const std::int64_t max_r = n_vars * (q - 1);
    PowerTable table(reduce_generators(spec, p, q), q, budget);
    const std::size_t gens = spec.binomials.size() + spec.monomials.size();

    std::int64_t seed = 0;
    if (cert != nullptr) {
        mpz_class scaled = cert->value.num() * (q - 1) / cert->value.den();
        if (scaled < 0) scaled = 0;
        if (scaled > max_r) scaled = max_r;
        seed = scaled.get_si();
    }

    const auto survives = [&](std::int64_t r) {
        return power_survives(table, gens, r, q, budget);
    };
    if (survives(seed)) {
        std::int64_t r = seed;
        while (r < max_r && survives(r + 1)) ++r;
        return r;
    }
    for (std::int64_t r = seed - 1; r >= 0; --r)
        if (survives(r)) return r;
    throw Error("nu: the empty product cannot vanish");
}

std::int64_t n_modulus(const LctCertificate& cert) {
    if (!cert.criterion_witness) throw Error("n_modulus: certificate carries no witness");
    const mpz_class l = lcm_of_denominators(*cert.criterion_witness);
    if (!l.fits_slong_p()) throw Error("n_modulus: modulus out of range");
    return l.get_si();
}

NuReport fpt_lower_check(const IdealSpec& spec, const LctCertificate& cert, std::int64_t p,
                         int e, Budget& budget) {
    if (cert.status != CertStatus::exact)
        throw Error("fpt_lower_check: certificate must be exact");
    const std::int64_t modulus = n_modulus(cert);
    if (!is_prime(p)) throw Error("fpt_lower_check: p must be prime");
    if ((p - 1) % modulus != 0)
        throw Error("fpt_lower_check: p must be 1 mod " + std::to_string(modulus));

    NuReport report;
    report.p = p;
    report.e = e;
    report.q = checked_power(p, e);
    report.nu = nu(spec, p, e, budget, &cert);
    report.ratio = Rational(report.nu, report.q);
    report.lower_bound = cert.value * Rational(report.q - 1);
    report.bound_satisfied = Rational(report.nu) >= *report.lower_bound;
    return report;
}

CoefficientWitness coefficient_witness(const IdealSpec& spec, const LctCertificate& cert,
                                       std::int64_t p, int e) {
    if (!spec.monomials.empty())
        throw Error("coefficient_witness: monomial generators are not supported");
    if (!cert.criterion_witness)
        throw Error("coefficient_witness: certificate carries no witness");
    if (!is_prime(p)) throw Error("coefficient_witness: p must be prime");
    const std::int64_t q = checked_power(p, e);

    const RatVec& w = *cert.criterion_witness;
    const std::size_t r = spec.binomials.size();
    if (w.size() != 2 * r) throw Error("coefficient_witness: witness length mismatch");

    mpz_class acc = 1;
    const mpz_class p_z(static_cast<long>(p));
    CoefficientWitness result;
    result.monomial.assign(spec.var_count(), 0);
    for (std::size_t i = 0; i < r; ++i) {
        const Rational mu = w[i] * (q - 1);
        const Rational nv = w[r + i] * (q - 1);
        if (!mu.is_integer() || !nv.is_integer())
            throw Error("coefficient_witness: scaled witness entries must be integers; "
                        "pick p with p - 1 divisible by the witness modulus");
        const std::int64_t mu_i = mu.to_int(), nv_i = nv.to_int();

        const BinomialGen& g = spec.binomials[i];
        const std::int64_t gamma =
            reduce_coeff(g.coeff, p, "binomial " + std::to_string(i + 1));
        mpz_class factor;
        const mpz_class base(static_cast<long>((p - gamma) % p));
        const mpz_class exponent(static_cast<long>(nv_i));
        mpz_powm(factor.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), p_z.get_mpz_t());
        acc = acc * factor % p;
        acc = acc * lucas_binom(mu_i + nv_i, mu_i, p) % p;
        for (std::size_t j = 0; j < spec.var_count(); ++j)
            result.monomial[j] += g.plus[j] * mu_i + g.minus[j] * nv_i;
    }
    result.value = acc.get_si();
    return result;
}

}  // namespace lct
