#include "webs/normalform.hpp"

#include <algorithm>

namespace webs {

Web::Web(const Series2& f) : f_(f) {
    if (f.order() < 1) throw InsufficientOrder("a web needs validity order >= 1");
    if (!is_zero(f.coeff(0, 0)))
        throw NonzeroConstantTerm("a web function must vanish at the origin");
    if (is_zero(f.coeff(1, 0)) || is_zero(f.coeff(0, 1)))
        throw DegenerateLinearPart("a web function needs nonzero partials at the origin");
}

BoundaryData boundary_and_diagonal(const Web& w) {
    const Series2& f = w.f();
    if (f.coeff(1, 0) != 1 || f.coeff(0, 1) != 1)
        throw BadLinearPart("boundary data expects f = x + y + higher-order");
    return {restrict_line(f, 1, 0), restrict_line(f, 0, 1), restrict_line(f, 1, 1)};
}

Series1 sternberg_k(const Series1& c) {
    if (c.order() < 1) throw InsufficientOrder("linearization needs validity order >= 1");
    if (!is_zero(c.coeff(0)))
        throw NonzeroConstantTerm("diagonal germ must fix the origin");
    if (c.coeff(1) != 2)
        throw BadLinearCoefficient("Sternberg linearization expects c'(0) = 2");

    const int N = c.order();
    Series1 k(N);
    k.set_coeff(1, 1);
    // With k correct below degree n, coefficient n of k(2t) - c(k(t)) reads
    // (2^n - 2) k_n - rho, rho collecting only lower coefficients of k; the
    // denominator never vanishes for n >= 2, so each k_n is pinned uniquely.
    for (int n = 2; n <= N; ++n) {
        const Rat rho = compose1(c, k).coeff(n);
        if (!is_zero(rho)) k.set_coeff(n, rho / (rat_pow(rat(2), n) - 2));
    }
    if (compose1(k, Series1::monomial(N, 1, 2)) != compose1(c, k))
        throw InternalCheckFailed("Sternberg conjugacy residual is nonzero");
    return k;
}

NormalForm normalize(const Web& w) {
    const Series2& f = w.f();
    const int N = f.order();
    if (N < 3) throw InsufficientOrder("normal form needs validity order >= 3");
    const Rat c1 = f.coeff(1, 0), c2 = f.coeff(0, 1);

    // (i) linear prescale to unit linear part: f1 = f(x/c1, y/c2).
    const PlaneMap pre(Series2::monomial(N, 1, 0, Rat(1) / c1),
                       Series2::monomial(N, 0, 1, Rat(1) / c2));
    const Series2 f1 = compose2(f, pre);

    // (ii) absorb the boundary restrictions: f2(t,0) = f2(0,t) = t.
    const BoundaryData bd = boundary_and_diagonal(Web(f1));
    const Series1 ainv = invert1(bd.a), binv = invert1(bd.b);
    const Series2 f2 = compose2(f1, PlaneMap(embed_x(ainv), embed_y(binv)));

    // (iii) Sternberg-linearize the diagonal and relabel: f3(t,t) = 2t.
    const Series1 k = sternberg_k(restrict_line(f2, 1, 1));
    const Series1 kinv = invert1(k);
    const Series2 f3 = apply1(kinv, compose2(f2, PlaneMap(embed_x(k), embed_y(k))));

    const Series1 t = Series1::var_t(N);
    if (restrict_line(f3, 1, 0) != t || restrict_line(f3, 0, 1) != t ||
        restrict_line(f3, 1, 1) != 2 * t)
        throw InternalCheckFailed("normal-form boundary/diagonal identities failed");

    // The three certified identities make f3 - x - y vanish on y = 0, x = 0
    // and the diagonal in turn, so each division is exact.
    const Series2 rest = f3 - Series2::var_x(N) - Series2::var_y(N);
    const Series2 g =
        div_exact(div_exact(div_exact(rest, Divisor::Y), Divisor::X), Divisor::XMinusY);

    return NormalForm{(Rat(1) / c1) * compose1(ainv, k),
                      (Rat(1) / c2) * compose1(binv, k), kinv, g};
}

NormalForm trivial_normal_form(const Series2& g) {
    const Series1 t = Series1::var_t(g.order() + 3);
    return {t, t, t, g};
}

Series2 reconstruct_f(const Series2& g) {
    Series2 f(g.order() + 3);
    f.set_coeff(1, 0, 1);
    f.set_coeff(0, 1, 1);
    // x y (x-y) g term by term: (r,s) feeds (r+2, s+1) and -(r+1, s+2).
    for (const auto& [m, c] : g.terms()) {
        f.add_coeff(m.r + 2, m.s + 1, c);
        f.add_coeff(m.r + 1, m.s + 2, -c);
    }
    return f;
}

Series2 lambda_action(const Series2& g, const Rat& lambda) {
    if (is_zero(lambda)) throw ZeroLambda("homothety scale must be nonzero");
    Series2 out(g.order());
    for (const auto& [m, c] : g.terms())
        out.set_coeff(m.r, m.s, c * rat_pow(lambda, m.total() + 2));
    return out;
}

std::optional<ScaleMatch> scale_equivalent(const Series2& g1, const Series2& g2) {
    const int T = std::min(g1.order(), g2.order());
    const Series2 a = truncated(g1, T), b = truncated(g2, T);

    // lambda^k never vanishes, so the supports must agree exactly.
    for (const auto& [m, c] : a.terms())
        if (is_zero(b.coeff(m.r, m.s))) return std::nullopt;
    for (const auto& [m, c] : b.terms())
        if (is_zero(a.coeff(m.r, m.s))) return std::nullopt;

    if (a.is_zero()) return ScaleMatch{};  // any lambda works

    // Anchor: lowest total degree, then smallest exponent of x.  The map is
    // sorted with the x-exponent descending inside a degree, so the anchor is
    // the last entry of the first degree block.
    Mono anchor = a.terms().begin()->first;
    for (const auto& [m, c] : a.terms()) {
        if (m.total() != anchor.total()) break;
        anchor = m;
    }
    const int e0 = anchor.total() + 2;
    const Rat q = b.coeff(anchor.r, anchor.s) / a.coeff(anchor.r, anchor.s);

    int sign = 0;
    for (const auto& [m, ca] : a.terms()) {
        const Rat rho = b.coeff(m.r, m.s) / ca;  // must equal lambda^{deg+2}
        const int e = m.total() + 2;
        // Root-free cross-consistency: |rho| = |lambda|^e and |q| = |lambda|^e0
        // together force |rho|^e0 = |q|^e.
        if (rat_pow(abs(rho), e0) != rat_pow(abs(q), e)) return std::nullopt;
        if (e % 2 == 0) {
            // even power of a real is positive
            if (sgn(rho) < 0) return std::nullopt;
        } else {
            const int s = sgn(rho) > 0 ? 1 : -1;
            if (sign == 0)
                sign = s;
            else if (sign != s)
                return std::nullopt;
        }
    }
    return ScaleMatch{anchor, e0, q, sign};
}

}  // namespace webs
