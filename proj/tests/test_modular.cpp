#include <catch2/catch_amalgamated.hpp>

#include "bibracket/modular.hpp"

using namespace bibracket;

TEST_CASE("Eisenstein constants") {
    CHECK(eisenstein_constant(2) == rat(-1, 24));
    CHECK(eisenstein_constant(4) == rat(1, 1440));
    CHECK(eisenstein_constant(6) == rat(-1, 60480));
    CHECK(eisenstein_constant(8) == rat(1, 2419200));
    CHECK_THROWS_AS(eisenstein_constant(3), std::invalid_argument);
    CHECK_THROWS_AS(eisenstein_constant(0), std::invalid_argument);
}

TEST_CASE("Eisenstein series expansion") {
    Evaluator ev(10);
    QModForm G4 = eisenstein(4, ev);
    CHECK(G4.series.coeff(0) == rat(1, 1440));
    // [4] has coefficients sigma_3(n)/3!
    CHECK(G4.series.coeff(1) == rat(1, 6));
    CHECK(G4.series.coeff(2) == rat(9, 6));
    CHECK(G4.series.coeff(3) == rat(28, 6));
    CHECK(G4.series.coeff(4) == rat(73, 6));
}

TEST_CASE("discriminant expansion") {
    QSeries d = delta_series(10);
    // Ramanujan tau
    long tau[] = {1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920};
    CHECK(d.coeff(0) == 0);
    for (int n = 1; n <= 10; ++n) CHECK(d.coeff(n) == rat(tau[n - 1]));
}

TEST_CASE("Rankin-Cohen bracket basics") {
    Evaluator ev(12);
    QModForm G4 = eisenstein(4, ev), G6 = eisenstein(6, ev);
    SECTION("n = 0 is the plain product") {
        CHECK(rankin_cohen(G4, G6, 0) == G4.series * G6.series);
    }
    SECTION("n = 1 is antisymmetric") {
        CHECK(rankin_cohen(G4, G6, 1) == -rankin_cohen(G6, G4, 1));
        CHECK(rankin_cohen(G4, G4, 1).is_zero());
    }
    SECTION("(G4,G6)_1 is a multiple of Delta") {
        QSeries rc = rankin_cohen(G4, G6, 1);
        QSeries d = delta_series(12);
        REQUIRE(rc.coeff(1) != 0);
        Rational c = rc.coeff(1);
        CHECK(rc == c * d);
    }
}

TEST_CASE("cusp forms from length-one bi-brackets") {
    Evaluator ev(20);
    SECTION("C^4_{4,4} is a cusp form proportional to Delta") {
        QSeries c = cusp_bracket_C(4, 4, 2, ev);
        CHECK(c.coeff(0) == 0);
        CHECK(rat(12) * Rational(factorial(5)) * Rational(factorial(5)) * c == delta_series(20));
    }
    SECTION("input validation") {
        CHECK_THROWS_AS(cusp_bracket_C(3, 4, 1, ev), std::invalid_argument);
        CHECK_THROWS_AS(cusp_bracket_C(4, 4, 0, ev), std::invalid_argument);
    }
}

TEST_CASE("the full quasi-modular identity suite passes") {
    auto results = modular_suite(40);
    REQUIRE(results.size() == 10);
    for (const auto& r : results) {
        INFO(r.name);
        CHECK(r.passed);
    }
}
