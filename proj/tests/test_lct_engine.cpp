#include "lct/lct_engine.hpp"

#include "lct/error.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

using lct::BinomialGen;
using lct::CertStatus;
using lct::ExponentVector;
using lct::IdealSpec;
using lct::LctCertificate;
using lct::LpProblem;
using lct::Rational;
using lct::RatVec;

namespace {

RatVec rv(const std::vector<Rational>& entries) { return entries; }

IdealSpec load(const std::string& name) { return lct::parse_ideal(read_data_file(name)); }

bool has_note(const LctCertificate& cert, const std::string& needle) {
    return std::any_of(cert.notes.begin(), cert.notes.end(), [&](const std::string& n) {
        return n.find(needle) != std::string::npos;
    });
}

}  // namespace

TEST_CASE("program shape for a two-binomial ideal") {
    const LpProblem p = lct::build_lp(load("ci_pair.json"));
    // 3 ring variables + 2 pair rows; columns (mu1, mu2, nu1, nu2).
    REQUIRE(p.constraints.rows() == 5);
    REQUIRE(p.constraints.cols() == 4);
    const std::vector<std::vector<int>> expected{
        {2, 0, 0, 1}, {0, 0, 3, 1}, {0, 2, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}};
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(p.constraints.at(i, j) == Rational(expected[i][j]));
    for (const auto& c : p.objective) CHECK(c == Rational(1));
    for (const auto& b : p.rhs) CHECK(b == Rational(1));
}

TEST_CASE("program shape with a monomial generator") {
    IdealSpec spec;
    spec.variables = {"x", "y"};
    spec.binomials.push_back(BinomialGen{{2, 0}, {0, 3}});
    spec.monomials.push_back(lct::MonomialGen{{1, 1}});
    const LpProblem p = lct::build_lp(spec);
    REQUIRE(p.constraints.rows() == 3);
    REQUIRE(p.constraints.cols() == 3);
    // Columns (mu1, nu1, lambda1); the lambda column has no pair row.
    const std::vector<std::vector<int>> expected{{2, 0, 1}, {0, 3, 1}, {1, 1, 0}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(p.constraints.at(i, j) == Rational(expected[i][j]));
}

TEST_CASE("three-generator curve ideal is certified at 13/9") {
    const LctCertificate cert = lct::compute_lct(load("curve_345.json"));
    CHECK(cert.value == Rational(13, 9));
    CHECK(cert.status == CertStatus::exact);
    REQUIRE(cert.criterion_witness.has_value());
    CHECK(lct::sum(*cert.criterion_witness) == Rational(13, 9));
    CHECK(cert.rank == 5);
    CHECK(cert.kernel_dim == 1);
    CHECK(cert.notes.empty());
}

TEST_CASE("five-generator ideal is certified at 11/6") {
    const LctCertificate cert = lct::compute_lct(load("gorenstein.json"));
    CHECK(cert.value == Rational(11, 6));
    CHECK(cert.status == CertStatus::exact);
    CHECK(cert.rank == 8);
    CHECK(cert.kernel_dim == 2);
    REQUIRE(cert.criterion_witness.has_value());
    CHECK(lct::check_criterion(lct::build_lp(load("gorenstein.json")), *cert.criterion_witness, 5));
}

TEST_CASE("complete intersection pair has a trivial kernel") {
    const LctCertificate cert = lct::compute_lct(load("ci_pair.json"));
    CHECK(cert.value == Rational(17, 12));
    CHECK(cert.status == CertStatus::exact);
    CHECK(cert.rank == 4);
    CHECK(cert.kernel_dim == 0);
}

TEST_CASE("criterion decisions on frozen optimal points") {
    const LpProblem p345 = lct::build_lp(load("curve_345.json"));
    const RatVec pass345 = rv({Rational(1, 9), Rational(1, 3), Rational(0), Rational(1, 3),
                               Rational(2, 3), Rational(0)});
    CHECK(lct::check_criterion(p345, pass345, 3));

    const LpProblem pg = lct::build_lp(load("gorenstein.json"));
    const RatVec passg = rv({Rational(1, 6), Rational(1, 6), Rational(0), Rational(0),
                             Rational(1, 2), Rational(1, 2), Rational(0), Rational(0), Rational(0),
                             Rational(1, 2)});
    const RatVec failg = rv({Rational(1, 3), Rational(0), Rational(0), Rational(1, 2), Rational(0),
                             Rational(0), Rational(0), Rational(0), Rational(0), Rational(1)});
    CHECK(lct::sum(passg) == Rational(11, 6));
    CHECK(lct::sum(failg) == Rational(11, 6));
    CHECK(lct::check_criterion(pg, passg, 5));
    CHECK_FALSE(lct::check_criterion(pg, failg, 5));
}

TEST_CASE("uncertifiable input degrades to an upper bound") {
    // Two monomials in one variable: the kernel of (2 3) meets the zero set
    // of the unique optimal vertex (1/2, 0) in a ray, so no vertex certifies.
    const LctCertificate cert = lct::compute_lct(load("upper_bound.json"));
    CHECK(cert.value == Rational(1, 2));
    CHECK(cert.status == CertStatus::upper_bound);
    CHECK_FALSE(cert.criterion_witness.has_value());
    CHECK(cert.kernel_dim == 1);
}

TEST_CASE("shared plus exponents are flagged") {
    IdealSpec spec;
    spec.variables = {"x", "y", "z"};
    spec.binomials.push_back(BinomialGen{{2, 0, 0}, {0, 3, 0}});
    spec.binomials.push_back(BinomialGen{{2, 0, 0}, {0, 0, 5}});
    const LctCertificate cert = lct::compute_lct(spec);
    CHECK(has_note(cert, "share the same plus exponents"));
}

TEST_CASE("invalid specs are rejected before solving") {
    IdealSpec spec;
    spec.variables = {"x", "x"};
    spec.binomials.push_back(BinomialGen{{2, 0}, {0, 3}});
    CHECK_THROWS_AS(lct::compute_lct(spec), lct::ValidationError);
    CHECK_THROWS_AS(lct::build_lp(spec), lct::ValidationError);
}

TEST_CASE("principal binomial threshold caps at 1") {
    CHECK(lct::principal_binomial_lct(BinomialGen{{2, 0}, {0, 3}}) == Rational(5, 6));
    CHECK(lct::principal_binomial_lct(BinomialGen{{1, 0}, {0, 1}}) == Rational(1));
    CHECK(lct::principal_binomial_lct(BinomialGen{{1, 0}, {0, 2}}) == Rational(1));
    CHECK(lct::principal_binomial_lct(BinomialGen{{0, 4}, {3, 0}}) == Rational(7, 12));
    CHECK_THROWS_AS(lct::principal_binomial_lct(BinomialGen{{1, 0}, {1, 0}}), lct::Error);
    BinomialGen zero_coeff{{1, 0}, {0, 1}};
    zero_coeff.coeff = Rational(0);
    CHECK_THROWS_AS(lct::principal_binomial_lct(zero_coeff), lct::Error);
}

TEST_CASE("plane binomials agree between the program and the principal formula") {
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            IdealSpec spec;
            spec.variables = {"x", "y"};
            spec.binomials.push_back(BinomialGen{{a, 0}, {0, b}});
            const LctCertificate cert = lct::compute_lct(spec);
            CAPTURE(a);
            CAPTURE(b);
            CHECK(cert.status == CertStatus::exact);
            CHECK(cert.value == lct::principal_binomial_lct(spec.binomials[0]));
            CHECK(cert.value == std::min(Rational(1, a) + Rational(1, b), Rational(1)));
        }
}

TEST_CASE("monomial thresholds") {
    CHECK(lct::monomial_lct({{2, 0}, {0, 3}}) == Rational(5, 6));
    CHECK(lct::monomial_lct({{4, 0}, {0, 6}}) == Rational(5, 12));
    CHECK(lct::monomial_lct({{1, 1}}) == Rational(1));
    CHECK(lct::monomial_lct({{2}}) == Rational(1, 2));
    CHECK(lct::monomial_lct({{3, 3, 3}}) == Rational(1, 3));
    // Unit vectors give the whole maximal ideal.
    CHECK(lct::monomial_lct({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == Rational(3));
    CHECK_THROWS_AS(lct::monomial_lct({}), lct::Error);
    CHECK_THROWS_AS(lct::monomial_lct({{0, 0}}), lct::Error);
    CHECK_THROWS_AS(lct::monomial_lct({{1, 0}, {0, -1}}), lct::Error);
}

TEST_CASE("newton membership and interior on the cusp ideal") {
    const std::vector<ExponentVector> gens{{2, 0}, {0, 3}};
    CHECK(lct::newton_membership(rv({Rational(2), Rational(0)}), Rational(1), gens));
    CHECK(lct::newton_membership(rv({Rational(0), Rational(3)}), Rational(1), gens));
    CHECK(lct::newton_membership(rv({Rational(1), Rational(2)}), Rational(1), gens));
    CHECK_FALSE(lct::newton_membership(rv({Rational(1), Rational(1)}), Rational(1), gens));
    CHECK(lct::newton_membership(rv({Rational(1), Rational(1)}), Rational(5, 6), gens));
    CHECK_FALSE(lct::newton_membership(rv({Rational(1), Rational(1)}), Rational(9, 10), gens));

    // (1,1) sits on the boundary of (5/6)P: member but not interior.
    CHECK_FALSE(lct::newton_interior(rv({Rational(1), Rational(1)}), Rational(5, 6), gens));
    CHECK(lct::newton_interior(rv({Rational(1), Rational(1)}), Rational(4, 5), gens));
    CHECK(lct::newton_interior(rv({Rational(2), Rational(3)}), Rational(1), gens));

    CHECK_THROWS_AS(lct::newton_membership(rv({Rational(1), Rational(1)}), Rational(0), gens),
                    lct::Error);
}

TEST_CASE("multiplier ideal membership flips at the threshold") {
    const std::vector<ExponentVector> gens{{2, 0}, {0, 3}};
    CHECK(lct::multiplier_monomial_contains({0, 0}, Rational(4, 5), gens));
    CHECK_FALSE(lct::multiplier_monomial_contains({0, 0}, Rational(5, 6), gens));
    CHECK(lct::multiplier_monomial_contains({1, 0}, Rational(1), gens));
    CHECK_FALSE(lct::multiplier_monomial_contains({0, 1}, Rational(4, 3), gens));
    CHECK_THROWS_AS(lct::multiplier_monomial_contains({-1, 0}, Rational(1, 2), gens), lct::Error);
}

namespace {

// Independent plane-geometry oracle: Q = conv(points) + R_{>=0}^2 is cut out
// by inequalities whose normals are the axis directions or normals to lines
// through two generator points. Any nonnegative normal gives a valid
// inequality, so testing the whole candidate set is sound and complete.
bool membership_oracle(const RatVec& v, const Rational& t,
                       const std::vector<ExponentVector>& points) {
    std::vector<std::pair<Rational, Rational>> normals{{Rational(1), Rational(0)},
                                                       {Rational(0), Rational(1)}};
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            const Rational dx(points[j][0] - points[i][0]);
            const Rational dy(points[j][1] - points[i][1]);
            for (const auto& w : {std::pair{-dy, dx}, std::pair{dy, -dx}})
                if (w.first >= Rational(0) && w.second >= Rational(0) &&
                    !(w.first.is_zero() && w.second.is_zero()))
                    normals.push_back(w);
        }
    for (const auto& [w1, w2] : normals) {
        Rational support = w1 * Rational(points[0][0]) + w2 * Rational(points[0][1]);
        for (const auto& pt : points)
            support = std::min(support, w1 * Rational(pt[0]) + w2 * Rational(pt[1]));
        if (w1 * v[0] + w2 * v[1] < t * support) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("random membership queries agree with the supporting-line oracle") {
    std::mt19937 rng(160816);
    std::uniform_int_distribution<int> coord(0, 4);
    std::uniform_int_distribution<int> vcoord(0, 6);
    std::uniform_int_distribution<std::size_t> npts(1, 4);
    const std::vector<Rational> ts{Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(1),
                                   Rational(3, 2), Rational(2)};
    std::uniform_int_distribution<std::size_t> tpick(0, ts.size() - 1);

    int checked = 0;
    for (int iter = 0; iter < 400 || checked < 200; ++iter) {
        REQUIRE(iter < 2000);
        std::vector<ExponentVector> points;
        const std::size_t k = npts(rng);
        for (std::size_t i = 0; i < k; ++i) {
            ExponentVector pt{coord(rng), coord(rng)};
            if (pt[0] == 0 && pt[1] == 0) pt[0] = 1;
            points.push_back(std::move(pt));
        }
        const RatVec v = rv({Rational(vcoord(rng)), Rational(vcoord(rng))});
        const Rational t = ts[tpick(rng)];
        CAPTURE(iter);
        CHECK(lct::newton_membership(v, t, points) == membership_oracle(v, t, points));
        ++checked;
    }
}

TEST_CASE("threshold computation is invariant under relabeling") {
    const IdealSpec spec = load("curve_345.json");

    IdealSpec permuted;
    permuted.variables = {"z", "x", "y"};
    permuted.weights = std::vector<std::int64_t>{5, 3, 4};
    const auto shuffle_exps = [](const ExponentVector& v) {
        return ExponentVector{v[2], v[0], v[1]};
    };
    // Reverse the generator order too.
    for (auto it = spec.binomials.rbegin(); it != spec.binomials.rend(); ++it)
        permuted.binomials.push_back(BinomialGen{shuffle_exps(it->plus), shuffle_exps(it->minus)});

    const LctCertificate a = lct::compute_lct(spec);
    const LctCertificate b = lct::compute_lct(permuted);
    CHECK(a.value == b.value);
    CHECK(a.status == b.status);
    CHECK(a.rank == b.rank);
    CHECK(a.kernel_dim == b.kernel_dim);
}

TEST_CASE("monomial threshold scales inversely under dilation") {
    std::mt19937 rng(2718);
    std::uniform_int_distribution<int> coord(0, 5);
    for (int iter = 0; iter < 30; ++iter) {
        std::vector<ExponentVector> points;
        for (int i = 0; i < 3; ++i) {
            ExponentVector pt{coord(rng), coord(rng), coord(rng)};
            if (pt == ExponentVector{0, 0, 0}) pt[1] = 2;
            points.push_back(std::move(pt));
        }
        std::vector<ExponentVector> doubled;
        for (const auto& pt : points) doubled.push_back({2 * pt[0], 2 * pt[1], 2 * pt[2]});
        CAPTURE(iter);
        CHECK(lct::monomial_lct(points) == Rational(2) * lct::monomial_lct(doubled));
    }
}
