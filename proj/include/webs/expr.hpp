#pragma once

// The polynomial-expression language shared by the CLI and the tests, and the
// canonical text form of a series.  format_series output round-trips through
// parse + eval bit-exactly at the same validity order.

#include "webs/series.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace webs {

// Grammar (whitespace is insignificant; juxtaposition multiplies):
//   expr     := ["+"|"-"] term (("+"|"-") term)*
//   term     := factor ("*"? factor)*
//   factor   := base ("^" natural)?
//   base     := rational | "x" | "y" | "t" | "(" expr ")"
//   rational := natural ("/" natural)?
// Signs live only at the front of an expr (possibly parenthesized); "^" with a
// negative exponent raises NegativeExponent rather than a generic ParseError.
struct Expr {
    enum class Kind { Number, Var, Neg, Add, Sub, Mul, Pow };
    Kind kind = Kind::Number;
    Rat number;             // Number
    char var = 0;           // Var: 'x', 'y' or 't'
    unsigned long exponent = 0;  // Pow
    std::vector<Expr> kids;
};

Expr parse_expr(const std::string& src);

// Evaluate in the bivariate ring at the given validity order ('t' rejected),
// or in the univariate ring ('x'/'y' rejected).
Series2 eval2(const Expr& e, int order);
Series1 eval1(const Expr& e, int order);

std::string format_series(const Series2& s);
std::string format_series(const Series1& s);

inline std::ostream& operator<<(std::ostream& os, const Series2& s) {
    return os << format_series(s);
}
inline std::ostream& operator<<(std::ostream& os, const Series1& s) {
    return os << format_series(s);
}

}  // namespace webs
