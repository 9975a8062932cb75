#include "lct/rational.hpp"

#include "lct/error.hpp"

#include <cctype>

namespace lct {

Rational::Rational(long long num, long long den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_ = mpq_class(num) / mpq_class(den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::int64_t Rational::to_int() const {
    if (!is_integer()) throw Error("rational " + str() + " is not an integer");
    const mpz_class n = num();
    if (!n.fits_slong_p()) throw Error("integer " + str() + " does not fit in 64 bits");
    return n.get_si();
}

std::optional<Rational> Rational::parse(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    const std::size_t digits_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits_begin) return std::nullopt;
    const std::size_t num_end = i;
    mpz_class den = 1;
    if (i < s.size()) {
        if (s[i] != '/') return std::nullopt;
        ++i;
        const std::size_t den_begin = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == den_begin || i != s.size()) return std::nullopt;
        den = mpz_class(std::string(s.substr(den_begin, i - den_begin)), 10);
        if (den == 0) return std::nullopt;
    }
    const mpz_class num(std::string(s.substr(0, num_end)), 10);
    return Rational(num, den);
}

Rational dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw Error("dot product of vectors with different lengths");
    Rational acc;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

Rational sum(const RatVec& v) {
    Rational acc;
    for (const auto& x : v) acc += x;
    return acc;
}

mpz_class lcm_of_denominators(const RatVec& v) {
    mpz_class acc = 1;
    for (const auto& x : v) {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), acc.get_mpz_t(), x.den().get_mpz_t());
        acc = l;
    }
    return acc;
}

std::string to_string(const RatVec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    return out + ")";
}

}  // namespace lct
