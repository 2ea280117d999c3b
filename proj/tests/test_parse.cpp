#include "doctest.h"

#include "hijac/parse.hpp"

using namespace hijac;

TEST_CASE("grammar examples") {
    Polynomial f = parse_poly("x1^3 - x2^2", 2);
    CHECK(f.coeff(MultiIndex({3, 0})) == 1);
    CHECK(f.coeff(MultiIndex({0, 2})) == -1);
    CHECK(f.num_terms() == 2);

    CHECK(parse_poly("0", 3).is_zero());

    Polynomial g = parse_poly("(1/2)*x1*x2 + x1", 2);
    CHECK(g.coeff(MultiIndex({1, 1})) == make_rat(1, 2));
    CHECK(g.coeff(MultiIndex({1, 0})) == 1);
    CHECK(g.num_terms() == 2);
}

TEST_CASE("rationals, parentheses, powers") {
    CHECK(parse_poly("2/4", 1) == Polynomial::constant(1, make_rat(1, 2)));
    CHECK(parse_poly("-3*x1", 1) == Polynomial::variable(1, 0).scaled(make_rat(-3)));
    CHECK(parse_poly("(x1 + 1)^3", 1) ==
          parse_poly("x1^3 + 3*x1^2 + 3*x1 + 1", 1));
    CHECK(parse_poly("x1^0", 1) == Polynomial::constant(1, 1));
    CHECK(parse_poly("1/2*x1", 1) == parse_poly("(1/2)*x1", 1));
}

TEST_CASE("errors carry a position") {
    CHECK_THROWS_AS(parse_poly("x3", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("x1^-2", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("x1 +", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("(x1", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("x1 x2", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("1/0", 2), ParseError);
    try {
        parse_poly("x1 + x9", 2);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.pos == 5);
    }
}

TEST_CASE("parse_rat") {
    CHECK(parse_rat("-7/3") == make_rat(-7, 3));
    CHECK_THROWS_AS(parse_rat("x1"), ParseError);
}
