#include <catch2/catch_amalgamated.hpp>

#include "bp/formula.hpp"

TEST_CASE("series and bridge formulas evaluate to the expected tables") {
    const auto series = bp::parse_formula("x1*x2*x3", 3);
    for (bp::Mask a = 0; a < 8; ++a) CHECK(series(a) == (a == 7 ? 1 : 0));

    const auto bridge = bp::parse_formula("x1*x4 | x2*x5 | x1*x3*x5 | x2*x3*x4", 5);
    CHECK(bridge.table() == bp::make_bridge().table());
}

TEST_CASE("product binds tighter than coproduct") {
    const auto phi = bp::parse_formula("x1|x2*x3", 3);
    CHECK(phi(bp::component_bit(1)) == 1);
    CHECK(phi(bp::component_bit(2)) == 0);
    CHECK(phi(bp::component_bit(2) | bp::component_bit(3)) == 1);

    const auto grouped = bp::parse_formula("(x1|x2)*x3", 3);
    CHECK(grouped(bp::component_bit(1)) == 0);
    CHECK(grouped(bp::component_bit(1) | bp::component_bit(3)) == 1);
}

TEST_CASE("whitespace is insignificant") {
    CHECK(bp::parse_formula("  x1 * x2 ", 2).table() == bp::parse_formula("x1*x2", 2).table());
}

TEST_CASE("parse errors carry positions") {
    try {
        bp::parse_formula("x1*(x2|", 2);
        FAIL("expected ParseError");
    } catch (const bp::ParseError& e) {
        CHECK(e.position == 7);
    }

    CHECK_THROWS_AS(bp::parse_formula("", 2), bp::ParseError);
    CHECK_THROWS_AS(bp::parse_formula("(x1|x2", 2), bp::ParseError);
    CHECK_THROWS_AS(bp::parse_formula("x1&x2", 2), bp::ParseError);
    CHECK_THROWS_AS(bp::parse_formula("x1**x2", 2), bp::ParseError);
    CHECK_THROWS_AS(bp::parse_formula("x", 2), bp::ParseError);

    // Juxtaposition is not product.
    CHECK_THROWS_AS(bp::parse_formula("x1 x2", 2), bp::ParseError);
}

TEST_CASE("unknown variables are rejected") {
    CHECK_THROWS_AS(bp::parse_formula("x5", 3), bp::UnknownVariable);
    CHECK_THROWS_AS(bp::parse_formula("x0*x1", 2), bp::UnknownVariable);
    try {
        bp::parse_formula("x1*x9", 3);
        FAIL("expected UnknownVariable");
    } catch (const bp::UnknownVariable& e) {
        CHECK(e.position == 3);
    }
}
