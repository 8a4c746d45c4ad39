#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace webs {

// Root of the library's error hierarchy.  Everything below it is a violated
// precondition of the operation that threw (the CLI maps these to exit 3),
// except InternalCheckFailed and the parser errors, which get their own exits.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A series that must vanish at the origin has a constant term.
struct NonzeroConstantTerm : Error {
    using Error::Error;
};

// A univariate series or plane map with no (or a singular) linear part was
// asked for a compositional inverse.
struct NotInvertible : Error {
    using Error::Error;
};

// Exact division by x, y, or x-y hit a nonzero remainder.  `degree` is the
// lowest total degree at which divisibility fails.
struct InexactDivision : Error {
    int degree;
    explicit InexactDivision(int d)
        : Error("series is not exactly divisible (first failure at total degree " +
                std::to_string(d) + ")"),
          degree(d) {}
};

// A web presentation whose f has a vanishing partial derivative at the origin.
struct DegenerateLinearPart : Error {
    using Error::Error;
};

// A univariate series whose linear coefficient is not the one the algorithm
// requires (e.g. Sternberg linearization needs c'(0) = 2).
struct BadLinearCoefficient : Error {
    using Error::Error;
};

// A series or map whose linear part is not the exact one an equation demands
// (solve_circular needs V = y + higher, mu = +/-x + higher).
struct BadLinearPart : Error {
    using Error::Error;
};

// The homothety action was asked for lambda = 0.
struct ZeroLambda : Error {
    using Error::Error;
};

// A perturbation whose 1-jet does not vanish where the synthesis requires it.
struct BadJet : Error {
    using Error::Error;
};

// The polynomial handed to the Lemma-1 synthesis is not invariant under the
// chosen linear model.
struct NotInvariant : Error {
    using Error::Error;
};

// The requested computation needs more valid orders than the input carries.
struct InsufficientOrder : Error {
    using Error::Error;
};

// An a-posteriori certification failed.  This never fires for valid inputs; it
// means a solver produced an answer that does not satisfy its own defining
// equations, i.e. a bug, so the CLI reports it as an internal error (exit 1),
// not as a precondition violation.
struct InternalCheckFailed : Error {
    using Error::Error;
};

// Expression-syntax error.  `offset` is the byte offset into the source where
// parsing failed; `expected` describes what would have been legal there.
struct ParseError : Error {
    std::size_t offset;
    std::string expected;
    ParseError(std::size_t off, std::string exp)
        : Error("parse error at offset " + std::to_string(off) + ": expected " + exp),
          offset(off),
          expected(std::move(exp)) {}
};

// "^" followed by a negative exponent: syntactically recognized, semantically
// rejected (series live in a power-series ring, not a Laurent ring).
struct NegativeExponent : ParseError {
    explicit NegativeExponent(std::size_t off)
        : ParseError(off, "a nonnegative integer exponent") {}
};

// An expression evaluated in a context whose variables it does not use
// (e.g. `t` in a bivariate context, or `x` in a univariate one).
struct EvalError : Error {
    using Error::Error;
};

}  // namespace webs
