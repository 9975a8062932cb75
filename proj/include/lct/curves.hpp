#pragma once

#include "lct/ideal.hpp"
#include "lct/lct_engine.hpp"
#include "lct/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace lct {

// Defining equations x^a1 - y^b1 and z^c - x^a2 y^b2 with gcd(a1, b1) = 1,
// a2 >= b2 >= 0 and a2 + b2 >= 1. The monomial curve they cut out is
// parametrized by t -> (t^(c b1), t^(c a1), t^(a1 b2 + a2 b1)).
struct CiParams {
    std::int64_t a1 = 0;
    std::int64_t b1 = 0;
    std::int64_t c = 0;
    std::int64_t a2 = 0;
    std::int64_t b2 = 0;

    std::array<std::int64_t, 3> weights() const;
    bool operator==(const CiParams&) const = default;
};

// Defining equations x^(a1+a2) - y^b1 z^c2, y^(b1+b2) - z^c1 x^a2 and
// z^(c1+c2) - x^a1 y^b2 with every entry >= 1. Labels are normalized so the
// weighted degrees of the three equations are strictly increasing.
struct HerzogParams {
    std::int64_t a1 = 0;
    std::int64_t a2 = 0;
    std::int64_t b1 = 0;
    std::int64_t b2 = 0;
    std::int64_t c1 = 0;
    std::int64_t c2 = 0;

    std::array<std::int64_t, 3> weights() const;
    Rational alpha() const;  // a1 / (a1 + a2)
    Rational beta() const;   // b1 / (b1 + b2)
    Rational gamma() const;  // c1 / (c1 + c2)
    bool operator==(const HerzogParams&) const = default;
};

enum class CurveKind { complete_intersection, almost_complete_intersection };

struct CurveParams {
    CurveKind kind = CurveKind::complete_intersection;
    std::variant<CiParams, HerzogParams> params;
    // Parameter exponents in role order (x, y, z); weights[i] is the input
    // exponent at position permutation[i].
    std::array<std::int64_t, 3> weights{};
    std::array<std::size_t, 3> permutation{};
};

// Lexicographically least nonnegative coefficients writing value as a sum of
// generator multiples, or nullopt when no such coefficients exist.
std::optional<std::vector<std::int64_t>> semigroup_member(
    std::int64_t value, const std::vector<std::int64_t>& generators);

// Requires each exponent >= 2, overall gcd 1, and no exponent lying in the
// semigroup generated by the other two; throws ValidationError otherwise.
CurveParams classify_curve(const std::array<std::int64_t, 3>& exponents);

IdealSpec curve_ideal(const CurveParams& params);

struct TableValue {
    Rational value;
    int row = 0;
};

TableValue lct_table(const CiParams& p);
TableValue lct_table(const HerzogParams& p);

enum class CurveMethod { table, lp, both };

struct CurveReport {
    CurveParams params;
    IdealSpec ideal;
    std::optional<TableValue> table;
    std::optional<LctCertificate> certificate;
    Rational lct;
};

// Classifies, then evaluates the closed form, the certified linear program,
// or both; with CurveMethod::both the two values must agree.
CurveReport curve_lct(const std::array<std::int64_t, 3>& exponents,
                      CurveMethod method = CurveMethod::both,
                      std::size_t vertex_cap = 10000);

}  // namespace lct
