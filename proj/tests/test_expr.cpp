#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "testutil.hpp"
#include "webs/expr.hpp"
#include "webs/series.hpp"

#include <doctest.h>

#include <string>

using namespace webs;
using namespace webs::test;

TEST_CASE("basic parses and evaluation") {
    CHECK(s2("x", 3) == Series2::var_x(3));
    CHECK(s2("-x", 3) == -Series2::var_x(3));
    CHECK(s2("3/2", 2) == Series2::constant(rat(3, 2), 2));
    CHECK(s2("x^2 + 1/2*x*y", 4) ==
          Series2::monomial(4, 2, 0, 1) + Series2::monomial(4, 1, 1, rat(1, 2)));
    CHECK(s1("2*t + t^2", 4) ==
          Series1::monomial(4, 1, 2) + Series1::monomial(4, 2, 1));
}

TEST_CASE("juxtaposition multiplies and binds looser than ^") {
    CHECK(s2("x y", 4) == s2("x*y", 4));
    CHECK(s2("2x^2", 4) == s2("2*(x^2)", 4));
    CHECK(s2("x y^2", 4) == s2("x*(y^2)", 4));
    CHECK(s2("(x+y)(x-y)", 4) == s2("x^2 - y^2", 4));
    CHECK(s2("x y (x-y)(x+y)(2x+y)(x+2y)", 6) ==
          s2("2x^5 y + 5x^4 y^2 - 5x^2 y^4 - 2x y^5", 6));
}

TEST_CASE("operator precedence and unary minus") {
    CHECK(s1("1 - t - t", 2) == s1("1 - 2t", 2));
    CHECK(s1("-t^2", 3) == -Series1::monomial(3, 2, 1));
    CHECK(s1("(-t)^2", 3) == Series1::monomial(3, 2, 1));
    CHECK(s1("2 - 3 * t", 2) == s1("2 - 3t", 2));
    CHECK(s2("x - y + x", 2) == s2("2x - y", 2));
}

TEST_CASE("truncation to order during evaluation") {
    CHECK(s2("x^5", 3).is_zero());
    CHECK(s2("(x+y)^3", 2).is_zero());
    CHECK(s2("(x+y)^3", 3).coeff(2, 1) == 3);
}

TEST_CASE("parse errors carry offsets and expectations") {
    auto offset_of = [](const std::string& src) -> std::size_t {
        try {
            parse_expr(src);
        } catch (const ParseError& e) {
            return e.offset;
        }
        FAIL("expected a parse error for: ", src);
        return std::size_t(-1);
    };

    CHECK(offset_of("x +") == 3);
    CHECK(offset_of("(x + y") == 6);
    CHECK(offset_of("") == 0);
    CHECK(offset_of("x^y") == 2);      // exponent must be a natural number
    CHECK(offset_of("1/0") == 2);      // zero denominator flagged at the digit
    CHECK(offset_of("x $") == 2);      // trailing garbage
    CHECK(offset_of("x^1000001") == 9);  // exponent cap, flagged after the digits

    CHECK_THROWS_AS(parse_expr("x^-2"), const NegativeExponent&);
    try {
        parse_expr("x^-2");
    } catch (const ParseError& e) {
        CHECK(e.offset == 2);
    }
}

TEST_CASE("evaluation rejects the wrong variable set") {
    CHECK_THROWS_AS(eval2(parse_expr("t + x"), 3), const EvalError&);
    CHECK_THROWS_AS(eval1(parse_expr("x"), 3), const EvalError&);
    CHECK_THROWS_AS(eval1(parse_expr("y^2"), 3), const EvalError&);
    CHECK_NOTHROW(eval1(parse_expr("7"), 3));
}

TEST_CASE("canonical formatting") {
    CHECK(format_series(Series2(4)) == "0");
    CHECK(format_series(Series1(2)) == "0");
    CHECK(format_series(-Series2::var_x(3)) == "-x");
    CHECK(format_series(s2("x^2 + 1/2 x y", 4)) == "x^2 + 1/2*x*y");
    CHECK(format_series(s1("2t + t^2", 4)) == "2*t + t^2");
    CHECK(format_series(s2("y - x", 2)) == "-x + y");  // graded, x first
    CHECK(format_series(s2("1 + x^2", 3)) == "1 + x^2");
    CHECK(format_series(s2("x y - 1/3", 3)) == "-1/3 + x*y");
    // Degree blocks ascend; within a block the x-exponent descends.
    CHECK(format_series(s2("y^2 + x^2 + x y + x + y", 2)) ==
          "x + y + x^2 + x*y + y^2");
}

TEST_CASE("format -> parse -> eval is the identity") {
    Gen gen(201);
    for (int trial = 0; trial < 300; ++trial) {
        const int N = gen.uniform(0, 8);
        const Series2 p = gen.series2(N);
        CHECK(s2(format_series(p), N) == p);
        const Series1 u = gen.series1(N);
        CHECK(s1(format_series(u), N) == u);
    }
}
