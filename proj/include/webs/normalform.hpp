#pragma once

// Normal-form reduction for planar 3-webs around a point.
//
// A web is presented by the foliations {x = const}, {y = const}, {f = const}.
// Changing coordinates x -> X(x), y -> Y(y) and relabeling f -> Z(f) reduces
// every such web to
//     f~(x, y) = x + y + x y (x - y) g(x, y),
// characterized by f~(t,0) = f~(0,t) = t and f~(t,t) = 2t.  The residual
// series g (valid three orders below f) carries all the local invariants.

#include "webs/series.hpp"

#include <optional>

namespace webs {

// A web presentation: f vanishes at the origin with nonzero partials there.
class Web {
public:
    explicit Web(const Series2& f);
    const Series2& f() const { return f_; }
    int order() const { return f_.order(); }

private:
    Series2 f_;
};

// Restrictions of a unit-linear-part web to the axes and the diagonal:
// a(t) = f(t,0), b(t) = f(0,t), c(t) = f(t,t) = 2t + higher.
struct BoundaryData {
    Series1 a, b, c;
};
BoundaryData boundary_and_diagonal(const Web& w);

// Sternberg linearization of a germ c(t) = 2t + higher: the unique k tangent
// to the identity with k(2t) = c(k(t)).  Coefficient n is pinned by the
// denominator 2^n - 2, nonzero for every n >= 2.
Series1 sternberg_k(const Series1& c);

struct NormalForm {
    Series1 X, Y, Z;  // coordinate changes and relabeling, all fixing 0
    Series2 g;        // residual series, valid to order(f) - 3
};

// Reduce w to normal form: Z(f(X(x), Y(y))) = x + y + x y (x - y) g.
// The boundary/diagonal identities are certified before g is extracted.
NormalForm normalize(const Web& w);

// {t, t, t, g}: the normal form of a web already in normal coordinates.
NormalForm trivial_normal_form(const Series2& g);

// x + y + x y (x - y) g, valid to order(g) + 3.  The cofactor has valuation 3,
// so the unknown tail of g stays strictly beyond that order; this is the one
// place the library hands back more validity than the blanket min rule.
Series2 reconstruct_f(const Series2& g);

// Residue transform under the homothety (x,y) -> (lambda x, lambda y):
// g_{r,s} -> lambda^{r+s+2} g_{r,s}.
Series2 lambda_action(const Series2& g, const Rat& lambda);

// Witness data for "g2 = lambda_action(g1, lambda) for some real lambda != 0".
// anchor is the pinned monomial (nullopt when both series vanish and any
// lambda works); lambda_power = lambda^exponent at the anchor; lambda_sign is
// +1/-1 when the odd-degree part forces the sign of lambda, 0 when either
// sign works.
struct ScaleMatch {
    std::optional<Mono> anchor;
    int exponent = 0;
    Rat lambda_power = 1;
    int lambda_sign = 0;
};

// Decides scale equivalence exactly, in rational arithmetic only: lambda
// itself may be irrational, so the test compares |rho|^exponent against
// |lambda_power|^(degree+2) instead of extracting roots.
std::optional<ScaleMatch> scale_equivalent(const Series2& g1, const Series2& g2);

}  // namespace webs
