#include "fpsrev/autolab.hpp"
#include "fpsrev/error.hpp"
#include "fpsrev/inversion.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace fpsrev;
using namespace fpsrev::testing;

namespace {

PolynomialMap x_plus_y_squared()
{
    return make_polymap(2, {{0, {1, 0}, 1}, {0, {0, 2}, 1}, {1, {0, 1}, 1}});
}

Polynomial poly(unsigned n, const std::vector<std::pair<std::vector<MultiIndex::value_type>, Rational>>& terms)
{
    Polynomial p(n);
    for (const auto& [e, c] : terms) {
        p.add_term(MultiIndex(e), c);
    }
    return p;
}

} // namespace

TEST_CASE("polynomial maps")
{
    const auto id = PolynomialMap::identity(2);
    CHECK(id.is_identity());
    CHECK(id.has_unit_tangent());
    CHECK(x_plus_y_squared().has_unit_tangent());
    CHECK_FALSE(x_plus_y_squared().is_identity());
    CHECK(x_plus_y_squared().degree() == 2U);
    CHECK(compose(x_plus_y_squared(), id) == x_plus_y_squared());
    CHECK((x_plus_y_squared() - x_plus_y_squared()).is_zero());

    std::vector<Polynomial> bad{Polynomial::constant(1, Rational(1))};
    try {
        (void)PolynomialMap(bad);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ConstantTerm);
    }
}

TEST_CASE("exact composition keeps every degree")
{
    const auto phi = make_polymap(1, {{0, {1}, 1}, {0, {2}, 1}});
    const auto sq = compose(phi, phi);
    const auto expected = make_polymap(1, {{0, {1}, 1}, {0, {2}, 2}, {0, {3}, 2}, {0, {4}, 1}});
    CHECK(sq == expected);
}

TEST_CASE("tail vanishing test")
{
    SUBCASE("(x + y^2, y)")
    {
        const auto report = tail_vanishing_test(x_plus_y_squared(), 4);
        REQUIRE(report.vanishing_m0.has_value());
        CHECK(*report.vanishing_m0 == 2);
        REQUIRE(report.certificate_inverse.has_value());
        CHECK(*report.certificate_inverse == make_polymap(2, {{0, {1, 0}, 1}, {0, {0, 2}, -1}, {1, {0, 1}, 1}}));
        REQUIRE(report.records.size() == 4);
        CHECK(report.records[0].degree == 2U);
        CHECK_FALSE(report.records[0].zero);
        for (std::size_t i = 1; i < 4; ++i) {
            CHECK(report.records[i].zero);
            CHECK_FALSE(report.records[i].degree.has_value());
        }
    }
    SUBCASE("identity")
    {
        const auto report = tail_vanishing_test(PolynomialMap::identity(3), 3);
        CHECK(report.vanishing_m0 == 1U);
        CHECK(report.certificate_inverse == PolynomialMap::identity(3));
    }
    SUBCASE("x + x^2 never vanishes")
    {
        const auto report = tail_vanishing_test(make_polymap(1, {{0, {1}, 1}, {0, {2}, 1}}), 6);
        CHECK_FALSE(report.vanishing_m0.has_value());
        CHECK_FALSE(report.certificate_inverse.has_value());
        const auto degrees = report.degrees();
        REQUIRE(degrees.size() == 6);
        for (std::size_t i = 0; i < degrees.size(); ++i) {
            REQUIRE(degrees[i].has_value());
            if (i > 0) {
                CHECK(*degrees[i] > *degrees[i - 1]);
            }
        }
        CHECK(*degrees[0] == 2);
        CHECK(*degrees[1] == 4);
    }
    SUBCASE("preconditions and resource caps")
    {
        try {
            (void)tail_vanishing_test(make_polymap(1, {{0, {1}, 2}}), 3);
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NonIdentityLinearPart);
        }
        CHECK_THROWS_AS(tail_vanishing_test(x_plus_y_squared(), 0), Error);
        ResourceLimits tight;
        tight.max_degree = 10;
        try {
            (void)tail_vanishing_test(make_polymap(1, {{0, {1}, 1}, {0, {2}, 1}}), 8, tight);
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::ResourceLimit);
        }
    }
}

TEST_CASE("single elementary steps vanish at the second tail term")
{
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const auto tame = random_tame(2 + seed % 2, 1, seed);
        const auto report = tail_vanishing_test(tame.map, 4);
        CHECK(report.vanishing_m0 == 2U);
        REQUIRE(report.certificate_inverse.has_value());
        CHECK(*report.certificate_inverse == tame.inverse);
    }
}

TEST_CASE("tail test on longer tame words is consistent with the known inverse")
{
    ResourceLimits limits;
    limits.max_terms = 20'000;
    limits.max_degree = 64;
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const auto tame = random_tame(2, 2 + seed % 2, seed);
        const SeriesContext ctx(2, 6);
        CHECK(invert_neumann(tame.map.truncate(ctx)) == tame.inverse.truncate(ctx));
        try {
            const auto report = tail_vanishing_test(tame.map, 4, limits);
            if (report.certificate_inverse) {
                CHECK(*report.certificate_inverse == tame.inverse);
            }
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::ResourceLimit);
        }
    }
}

TEST_CASE("jacobian form check")
{
    SUBCASE("(x + y^2, y) with m = 2")
    {
        const auto r = jacobian_form_check(x_plus_y_squared(), 2, 4);
        CHECK(r.holds);
        CHECK(r.residual.is_zero());
        CHECK(r.lhs == JacobianSeriesMatrix::identity(2, 3));
    }
    SUBCASE("identity with m = 1")
    {
        CHECK(jacobian_form_check(PolynomialMap::identity(2), 1, 3).holds);
    }
    SUBCASE("x + x^2 with m = 2 leaves -6x^2 - 4x^3")
    {
        const auto r = jacobian_form_check(make_polymap(1, {{0, {1}, 1}, {0, {2}, 1}}), 2, 4);
        CHECK_FALSE(r.holds);
        CHECK(r.residual.at(0, 0) == poly(1, {{{2}, -6}, {{3}, -4}}));
        CHECK(r.lhs.at(0, 0) == poly(1, {{{0}, 1}, {{2}, -6}, {{3}, -4}}));
    }
    SUBCASE("holds exactly when the phi term vanishes")
    {
        std::mt19937_64 rng(17);
        int held = 0;
        for (int trial = 0; trial < 10; ++trial) {
            const auto phi = trial % 2 == 0 ? random_tame(2, 2, 100 + trial).map
                                            : random_unit_map(RandomMapOptions{2, 2, 2, 2, 0.5}, rng);
            const SeriesContext ctx(2, 5);
            const PhiSequence seq(phi.truncate(ctx));
            for (unsigned m = 1; m <= 4; ++m) {
                const auto r = jacobian_form_check(phi, m, 5);
                CHECK(r.holds == seq.term(m).is_zero());
                held += r.holds ? 1 : 0;
            }
        }
        CHECK(held > 0);
    }
    CHECK_THROWS_AS(jacobian_form_check(x_plus_y_squared(), 0, 4), Error);
}

TEST_CASE("elementary automorphisms")
{
    const auto sigma = elementary_automorphism(2, 1, poly(2, {{{2, 0}, 1}}));
    const auto tau = elementary_automorphism(2, 0, poly(2, {{{0, 2}, 1}}));
    CHECK(sigma == make_polymap(2, {{0, {1, 0}, 1}, {1, {0, 1}, 1}, {1, {2, 0}, 1}}));
    CHECK(tau == x_plus_y_squared());

    const auto composed = compose(tau, sigma);
    const auto expected = make_polymap(
        2, {{0, {1, 0}, 1}, {0, {0, 2}, 1}, {0, {2, 1}, 2}, {0, {4, 0}, 1}, {1, {0, 1}, 1}, {1, {2, 0}, 1}});
    CHECK(composed == expected);

    const auto inverse = make_polymap(
        2, {{0, {1, 0}, 1}, {0, {0, 2}, -1}, {1, {0, 1}, 1}, {1, {2, 0}, -1}, {1, {1, 2}, 2}, {1, {0, 4}, -1}});
    CHECK(compose(composed, inverse) == PolynomialMap::identity(2));
    CHECK(compose(inverse, composed) == PolynomialMap::identity(2));
    CHECK(invert_neumann(composed.truncate(SeriesContext(2, 8))) == inverse.truncate(SeriesContext(2, 8)));

    try {
        (void)elementary_automorphism(2, 0, poly(2, {{{1, 1}, 1}}));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidArgument);
    }
}

TEST_CASE("random tame maps carry exact inverses")
{
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const unsigned n = 2 + seed % 2;
        const auto tame = random_tame(n, 1 + seed % 3, seed);
        CHECK(tame.map.has_unit_tangent());
        CHECK(compose(tame.map, tame.inverse) == PolynomialMap::identity(n));
        CHECK(compose(tame.inverse, tame.map) == PolynomialMap::identity(n));
        CHECK(tame.steps.size() == 1 + seed % 3);
    }
    const auto a = random_tame(2, 3, 42);
    const auto b = random_tame(2, 3, 42);
    CHECK(a.map == b.map);
    CHECK_THROWS_AS(random_tame(1, 2, 1), Error);
}

TEST_CASE("random unit maps")
{
    std::mt19937_64 rng(3);
    RandomMapOptions opt;
    opt.nvars = 2;
    opt.max_degree = 2;
    opt.density = 1.0;
    const auto f = random_unit_map(opt, rng);
    CHECK(f.has_unit_tangent());
    // Two linear terms plus three quadratic monomials per component.
    CHECK(f.term_count() == 2 + 2 * 3);
    for (const auto& comp : f.components()) {
        for (const auto& [a, c] : comp.terms()) {
            if (a.weight() >= 2) {
                CHECK_FALSE(c.is_zero());
                CHECK(c.is_integer());
                CHECK(abs(c.numerator()) <= 3);
            }
        }
    }
}
