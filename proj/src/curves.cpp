#include "lct/curves.hpp"

#include "lct/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <utility>

namespace lct {

namespace {

Rational inv(std::int64_t v) { return Rational(1, v); }

// All nonnegative (k1, k2) with k1*g1 + k2*g2 == value.
std::vector<std::array<std::int64_t, 2>> pair_representations(std::int64_t value,
                                                              std::int64_t g1,
                                                              std::int64_t g2) {
    std::vector<std::array<std::int64_t, 2>> reps;
    for (std::int64_t k1 = 0; k1 * g1 <= value; ++k1) {
        const std::int64_t rest = value - k1 * g1;
        if (rest % g2 == 0) reps.push_back({k1, rest / g2});
    }
    return reps;
}

// The two indices other than i, in ascending order.
std::array<std::size_t, 2> others(std::size_t i) {
    return {i == 0 ? std::size_t{1} : std::size_t{0}, i == 2 ? std::size_t{1} : std::size_t{2}};
}

}  // namespace

std::array<std::int64_t, 3> CiParams::weights() const {
    return {c * b1, c * a1, a1 * b2 + a2 * b1};
}

std::array<std::int64_t, 3> HerzogParams::weights() const {
    return {(b1 + b2) * (c1 + c2) - b2 * c1, (c1 + c2) * (a1 + a2) - c2 * a1,
            (a1 + a2) * (b1 + b2) - a2 * b1};
}

Rational HerzogParams::alpha() const { return Rational(a1, a1 + a2); }
Rational HerzogParams::beta() const { return Rational(b1, b1 + b2); }
Rational HerzogParams::gamma() const { return Rational(c1, c1 + c2); }

std::optional<std::vector<std::int64_t>> semigroup_member(
    std::int64_t value, const std::vector<std::int64_t>& generators) {
    if (generators.empty()) throw Error("semigroup_member: no generators");
    for (std::int64_t g : generators)
        if (g < 1) throw Error("semigroup_member: generators must be positive");
    if (value < 0) return std::nullopt;

    // Depth-first over the leading coefficient keeps the witness
    // lexicographically least.
    std::vector<std::int64_t> coeffs(generators.size(), 0);
    std::function<bool(std::size_t, std::int64_t)> search = [&](std::size_t idx,
                                                                std::int64_t rest) {
        if (idx + 1 == generators.size()) {
            if (rest % generators[idx] != 0) return false;
            coeffs[idx] = rest / generators[idx];
            return true;
        }
        for (std::int64_t k = 0; k * generators[idx] <= rest; ++k) {
            coeffs[idx] = k;
            if (search(idx + 1, rest - k * generators[idx])) return true;
        }
        return false;
    };
    if (!search(0, value)) return std::nullopt;
    return coeffs;
}

CurveParams classify_curve(const std::array<std::int64_t, 3>& n) {
    std::vector<std::string> diags;
    for (std::size_t i = 0; i < 3; ++i)
        if (n[i] < 2)
            diags.push_back("exponent " + std::to_string(i + 1) + " must be at least 2");
    if (!diags.empty()) throw ValidationError(std::move(diags));

    if (std::gcd(std::gcd(n[0], n[1]), n[2]) != 1)
        diags.push_back("exponents must have no common factor");
    for (std::size_t i = 0; i < 3; ++i) {
        const auto [j, k] = others(i);
        if (semigroup_member(n[i], {n[j], n[k]}))
            diags.push_back("exponent " + std::to_string(n[i]) +
                            " lies in the semigroup generated by " + std::to_string(n[j]) +
                            " and " + std::to_string(n[k]) +
                            ", so the generating set is not minimal");
    }
    if (!diags.empty()) throw ValidationError(std::move(diags));

    // A pair with a common factor whose quotient semigroup absorbs the third
    // exponent splits off a complete intersection.
    constexpr std::array<std::array<std::size_t, 2>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
    for (const auto& pr : pairs) {
        const std::size_t i = pr[0], j = pr[1], k = 3 - i - j;
        const std::int64_t d = std::gcd(n[i], n[j]);
        if (d < 2) continue;
        const auto rep = semigroup_member(n[k], {n[j] / d, n[i] / d});
        if (!rep) continue;

        CiParams p{n[j] / d, n[i] / d, d, (*rep)[1], (*rep)[0]};
        std::size_t xi = i, yj = j;
        if (p.a2 < p.b2) {
            std::swap(p.a1, p.b1);
            std::swap(p.a2, p.b2);
            std::swap(xi, yj);
        }
        CurveParams cp;
        cp.kind = CurveKind::complete_intersection;
        cp.params = p;
        cp.weights = {n[xi], n[yj], n[k]};
        cp.permutation = {xi, yj, k};
        if (p.weights() != cp.weights) throw Error("classify_curve: internal weight mismatch");
        return cp;
    }

    // No split: each generator satisfies one relation against the other two,
    // with unique strictly positive coefficients.
    std::array<std::int64_t, 3> h{};
    std::array<std::array<std::int64_t, 2>, 3> rep{};
    for (std::size_t i = 0; i < 3; ++i) {
        const auto [j, k] = others(i);
        bool found = false;
        for (std::int64_t m = 1; m <= n[j] * n[k] && !found; ++m) {
            auto reps = pair_representations(m * n[i], n[j], n[k]);
            if (reps.empty()) continue;
            if (reps.size() != 1)
                throw Error("classify_curve: relation for exponent " + std::to_string(n[i]) +
                            " is not unique; the pair scan should have split this curve");
            h[i] = m;
            rep[i] = reps.front();
            found = true;
        }
        if (!found)
            throw Error("classify_curve: no relation found for exponent " + std::to_string(n[i]));
        if (rep[i][0] < 1 || rep[i][1] < 1)
            throw Error("classify_curve: relation for exponent " + std::to_string(n[i]) +
                        " misses a generator; the pair scan should have split this curve");
    }

    // Equation degrees h[i]*n[i] are invariants of the input positions;
    // sorting them fixes the one admissible labeling.
    std::array<std::size_t, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return h[a] * n[a] < h[b] * n[b]; });
    if (h[order[0]] * n[order[0]] == h[order[1]] * n[order[1]] ||
        h[order[1]] * n[order[1]] == h[order[2]] * n[order[2]])
        throw Error("classify_curve: tied relation degrees; the pair scan should have split this curve");
    const std::size_t xi = order[0], yi = order[1], zi = order[2];

    const auto coeff = [&](std::size_t i, std::size_t other) {
        return other == others(i)[0] ? rep[i][0] : rep[i][1];
    };
    HerzogParams p;
    p.b1 = coeff(xi, yi);
    p.c2 = coeff(xi, zi);
    p.a2 = coeff(yi, xi);
    p.c1 = coeff(yi, zi);
    p.a1 = coeff(zi, xi);
    p.b2 = coeff(zi, yi);
    if (p.a1 + p.a2 != h[xi] || p.b1 + p.b2 != h[yi] || p.c1 + p.c2 != h[zi])
        throw Error("classify_curve: relation exponents do not close up");

    CurveParams cp;
    cp.kind = CurveKind::almost_complete_intersection;
    cp.params = p;
    cp.weights = {n[xi], n[yi], n[zi]};
    cp.permutation = {xi, yi, zi};
    if (p.weights() != cp.weights) throw Error("classify_curve: internal weight mismatch");
    return cp;
}

IdealSpec curve_ideal(const CurveParams& cp) {
    IdealSpec spec;
    spec.variables = {"x", "y", "z"};
    spec.weights = std::vector<std::int64_t>(cp.weights.begin(), cp.weights.end());
    if (cp.kind == CurveKind::complete_intersection) {
        const auto& p = std::get<CiParams>(cp.params);
        spec.binomials.push_back({{p.a1, 0, 0}, {0, p.b1, 0}});
        spec.binomials.push_back({{0, 0, p.c}, {p.a2, p.b2, 0}});
    } else {
        const auto& p = std::get<HerzogParams>(cp.params);
        spec.binomials.push_back({{p.a1 + p.a2, 0, 0}, {0, p.b1, p.c2}});
        spec.binomials.push_back({{0, p.b1 + p.b2, 0}, {p.a2, 0, p.c1}});
        spec.binomials.push_back({{0, 0, p.c1 + p.c2}, {p.a1, p.b2, 0}});
    }
    auto diags = spec.validate();
    if (!diags.empty())
        throw Error("curve_ideal: constructed generators fail validation: " + diags.front());
    return spec;
}

TableValue lct_table(const CiParams& p) {
    if (p.a1 < 1 || p.b1 < 1 || p.c < 1 || p.b2 < 0 || p.a2 < p.b2 || p.a2 + p.b2 < 1)
        throw Error("lct_table: complete intersection parameters out of range");
    if (std::gcd(p.a1, p.b1) != 1)
        throw Error("lct_table: binomial exponents must be coprime");

    const std::int64_t deg_f = p.a1 * p.b1 * p.c;
    const std::int64_t deg_g = p.c * (p.a1 * p.b2 + p.a2 * p.b1);
    if (deg_f <= deg_g || p.c == 1) return {inv(p.a1) + inv(p.b1) + inv(p.c), 1};
    if (p.a2 == 1 && p.b2 == 1) return {(inv(p.a1) + inv(p.b1)) / p.c + 1, 2};
    if (p.a2 == 1 && p.b2 == 0) return {inv(p.a1) / p.c + inv(p.b1) + 1, 3};
    if (p.a2 >= 2)
        return {inv(p.a2) + (Rational(1) - Rational(p.b2, p.a2)) / p.b1 + inv(p.c), 4};
    throw Error("lct_table: no row matched");
}

TableValue lct_table(const HerzogParams& p) {
    if (p.a1 < 1 || p.a2 < 1 || p.b1 < 1 || p.b2 < 1 || p.c1 < 1 || p.c2 < 1)
        throw Error("lct_table: relation parameters must all be positive");

    const auto w = p.weights();
    if (p.b1 == 1 && p.c2 == 1)
        return {Rational(1) + Rational(w[0]) / (Rational(w[1]) * (1 + p.b2)), 1};
    if (p.b1 <= p.c2 && p.c2 >= 2)
        return {inv(p.a1 + p.a2) + (Rational(1) + Rational(p.b2, p.c2)) / (p.b1 + p.b2), 2};
    if (p.b1 > p.c2 && p.alpha() <= p.gamma())
        return {inv(p.a1 + p.a2) + Rational(p.b1 + p.c1) / (Rational(p.b1) * (p.c1 + p.c2)), 3};
    const Rational mixed = Rational(p.c1, p.a2) + Rational(p.c2, p.b1);
    if (p.b1 > p.c2 && p.alpha() >= p.gamma() && mixed <= Rational(1))
        return {Rational(p.b1 + p.c1) / (Rational(p.b1) * (p.c1 + p.c2)) +
                    Rational(p.c2) / (Rational(p.a2) * (p.c1 + p.c2)),
                4};
    if (p.b1 > p.c2 && p.alpha() >= p.gamma() && mixed > Rational(1))
        return {inv(p.a1 + p.a2) + inv(p.b1) +
                    Rational(p.a1) * (Rational(1) - Rational(p.c2, p.b1)) /
                        (Rational(p.a1 + p.a2) * p.c1),
                5};
    throw Error("lct_table: no row matched");
}

CurveReport curve_lct(const std::array<std::int64_t, 3>& exponents, CurveMethod method,
                      std::size_t vertex_cap) {
    CurveParams params = classify_curve(exponents);
    IdealSpec ideal = curve_ideal(params);
    CurveReport report{std::move(params), std::move(ideal), std::nullopt, std::nullopt,
                       Rational(0)};
    if (method != CurveMethod::lp)
        report.table = std::visit([](const auto& p) { return lct_table(p); },
                                  report.params.params);
    if (method != CurveMethod::table) report.certificate = compute_lct(report.ideal, vertex_cap);
    if (report.table && report.certificate &&
        report.table->value != report.certificate->value)
        throw Error("curve_lct: closed form " + report.table->value.str() +
                    " disagrees with the certified value " + report.certificate->value.str());
    report.lct = report.table ? report.table->value : report.certificate->value;
    return report;
}

}  // namespace lct
