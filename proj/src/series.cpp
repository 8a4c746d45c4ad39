#include "webs/series.hpp"

#include <algorithm>
#include <vector>

namespace webs {

namespace detail {

Series1 assume_order(Series1 s, int order) {
    if (order < s.order_) throw Error("assume_order cannot lower validity");
    s.order_ = order;
    return s;
}

Series2 assume_order(Series2 s, int order) {
    if (order < s.order_) throw Error("assume_order cannot lower validity");
    s.order_ = order;
    return s;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Series1

void Series1::add_scaled(const Series1& other, const Rat& q) {
    if (other.order() < order_)
        throw Error("add_scaled: operand valid to fewer orders than target");
    if (webs::is_zero(q)) return;
    for (const auto& [d, c] : other.terms()) {
        if (d > order_) break;
        add_coeff(d, q * c);
    }
}

Series1 operator+(const Series1& a, const Series1& b) {
    Series1 out(std::min(a.order(), b.order()));
    out.add_scaled(a, 1);
    out.add_scaled(b, 1);
    return out;
}

Series1 operator-(const Series1& a, const Series1& b) {
    Series1 out(std::min(a.order(), b.order()));
    out.add_scaled(a, 1);
    out.add_scaled(b, -1);
    return out;
}

Series1 operator-(const Series1& a) {
    Series1 out(a.order());
    out.add_scaled(a, -1);
    return out;
}

Series1 operator*(const Series1& a, const Series1& b) {
    const int T = std::min(a.order(), b.order());
    std::vector<Rat> acc(T + 1);
    for (const auto& [da, ca] : a.terms()) {
        if (da > T) break;
        for (const auto& [db, cb] : b.terms()) {
            if (da + db > T) break;
            acc[da + db] += ca * cb;
        }
    }
    Series1 out(T);
    for (int d = 0; d <= T; ++d)
        if (!is_zero(acc[d])) out.set_coeff(d, acc[d]);
    return out;
}

Series1 operator*(const Rat& q, const Series1& a) {
    Series1 out(a.order());
    out.add_scaled(a, q);
    return out;
}

Series1 operator+(const Series1& a, const Rat& q) {
    Series1 out = a;
    out.add_coeff(0, q);
    return out;
}

Series1 operator-(const Series1& a, const Rat& q) { return a + Rat(-q); }

Series1 truncated(const Series1& a, int M) {
    if (M < 0 || M > a.order())
        throw InsufficientOrder("cannot truncate beyond the validity order");
    Series1 out(M);
    for (const auto& [d, c] : a.terms()) {
        if (d > M) break;
        out.set_coeff(d, c);
    }
    return out;
}

bool equal_to_order(const Series1& a, const Series1& b, int M) {
    return truncated(a, M) == truncated(b, M);
}

Series1 compose1(const Series1& outer, const Series1& inner) {
    if (!is_zero(inner.coeff(0)))
        throw NonzeroConstantTerm("composition requires the inner series to vanish at 0");
    const int T = std::min(outer.order(), inner.order());
    // Horner: result = (((h_T) u + h_{T-1}) u + ...) + h_0.
    Series1 res(T);
    const Series1 u = truncated(inner, T);
    for (int j = T; j >= 0; --j) {
        res = res * u;
        res.add_coeff(0, outer.coeff(j));
    }
    return res;
}

Series1 invert1(const Series1& h) {
    if (h.order() < 1) throw InsufficientOrder("inversion needs validity order >= 1");
    if (!is_zero(h.coeff(0)))
        throw NotInvertible("series with nonzero constant term has no compositional inverse");
    const Rat h1 = h.coeff(1);
    if (is_zero(h1))
        throw NotInvertible("series with vanishing linear coefficient has no compositional inverse");
    const int N = h.order();
    Series1 k(N);
    k.set_coeff(1, Rat(1) / h1);
    // With k correct below degree n, [t^n] h(k) depends on k_n only through the
    // chain-rule term h1 * k_n, so each residual is cancelled exactly once.
    for (int n = 2; n <= N; ++n) {
        const Rat rho = compose1(h, k).coeff(n);
        if (!is_zero(rho)) k.set_coeff(n, -rho / h1);
    }
    return k;
}

// ---------------------------------------------------------------------------
// Series2

namespace {

// Dense triangular buffer index for exponents (r, s) with r + s <= T.
inline int tri(int n) { return n * (n + 1) / 2; }
inline int didx(int r, int s) { return tri(r + s) + s; }

}  // namespace

void Series2::add_scaled(const Series2& other, const Rat& q) {
    if (other.order() < order_)
        throw Error("add_scaled: operand valid to fewer orders than target");
    if (webs::is_zero(q)) return;
    for (const auto& [m, c] : other.terms()) {
        if (m.total() > order_) break;
        add_coeff(m.r, m.s, q * c);
    }
}

Series2 operator+(const Series2& a, const Series2& b) {
    Series2 out(std::min(a.order(), b.order()));
    out.add_scaled(a, 1);
    out.add_scaled(b, 1);
    return out;
}

Series2 operator-(const Series2& a, const Series2& b) {
    Series2 out(std::min(a.order(), b.order()));
    out.add_scaled(a, 1);
    out.add_scaled(b, -1);
    return out;
}

Series2 operator-(const Series2& a) {
    Series2 out(a.order());
    out.add_scaled(a, -1);
    return out;
}

Series2 operator*(const Series2& a, const Series2& b) {
    const int T = std::min(a.order(), b.order());
    std::vector<Rat> acc(tri(T + 1));
    for (const auto& [ma, ca] : a.terms()) {
        if (ma.total() > T) break;
        for (const auto& [mb, cb] : b.terms()) {
            if (ma.total() + mb.total() > T) break;
            acc[didx(ma.r + mb.r, ma.s + mb.s)] += ca * cb;
        }
    }
    Series2 out(T);
    for (int n = 0; n <= T; ++n)
        for (int s = 0; s <= n; ++s)
            if (!is_zero(acc[tri(n) + s])) out.set_coeff(n - s, s, acc[tri(n) + s]);
    return out;
}

Series2 operator*(const Rat& q, const Series2& a) {
    Series2 out(a.order());
    out.add_scaled(a, q);
    return out;
}

Series2 operator+(const Series2& a, const Rat& q) {
    Series2 out = a;
    out.add_coeff(0, 0, q);
    return out;
}

Series2 operator-(const Series2& a, const Rat& q) { return a + Rat(-q); }

Series2 truncated(const Series2& a, int M) {
    if (M < 0 || M > a.order())
        throw InsufficientOrder("cannot truncate beyond the validity order");
    Series2 out(M);
    for (const auto& [m, c] : a.terms()) {
        if (m.total() > M) break;
        out.set_coeff(m.r, m.s, c);
    }
    return out;
}

bool equal_to_order(const Series2& a, const Series2& b, int M) {
    return truncated(a, M) == truncated(b, M);
}

// ---------------------------------------------------------------------------
// PlaneMap and composition

PlaneMap::PlaneMap(const Series2& a, const Series2& b)
    : first_(truncated(a, std::min(a.order(), b.order()))),
      second_(truncated(b, std::min(a.order(), b.order()))) {
    if (!is_zero(first_.coeff(0, 0)) || !is_zero(second_.coeff(0, 0)))
        throw NonzeroConstantTerm("plane-map components must vanish at the origin");
}

std::array<Rat, 4> PlaneMap::linear() const {
    if (order() < 1) throw InsufficientOrder("linear part needs validity order >= 1");
    return {first_.coeff(1, 0), first_.coeff(0, 1), second_.coeff(1, 0), second_.coeff(0, 1)};
}

Series2 compose2(const Series2& f, const PlaneMap& m) {
    const int T = std::min(f.order(), m.order());
    int rmax = -1, smax = -1;
    for (const auto& [mo, c] : f.terms()) {
        if (mo.total() > T) break;
        rmax = std::max(rmax, mo.r);
        smax = std::max(smax, mo.s);
    }
    if (rmax < 0) return Series2(T);

    const Series2 X = truncated(m.first(), T);
    const Series2 Y = truncated(m.second(), T);

    // Cache Y^0..Y^smax, then run Horner in X over the coefficient rows
    // f(r, .): about rmax + smax full series products in total.
    std::vector<Series2> yp;
    yp.reserve(smax + 1);
    yp.push_back(Series2::constant(1, T));
    for (int j = 1; j <= smax; ++j) yp.push_back(yp.back() * Y);

    std::vector<std::vector<std::pair<int, Rat>>> rows(rmax + 1);
    for (const auto& [mo, c] : f.terms()) {
        if (mo.total() > T) break;
        rows[mo.r].emplace_back(mo.s, c);
    }

    Series2 res(T);
    for (int r = rmax; r >= 0; --r) {
        res = res * X;
        for (const auto& [s, c] : rows[r]) res.add_scaled(yp[s], c);
    }
    return res;
}

PlaneMap compose_map(const PlaneMap& outer, const PlaneMap& inner) {
    return PlaneMap(compose2(outer.first(), inner), compose2(outer.second(), inner));
}

PlaneMap invert_map(const PlaneMap& m) {
    if (m.order() < 1) throw InsufficientOrder("inversion needs validity order >= 1");
    const auto [a, b, c, d] = m.linear();
    const Rat det = a * d - b * c;
    if (is_zero(det)) throw NotInvertible("plane map has singular linear part");
    const Rat ia = d / det, ib = -b / det, ic = -c / det, id = a / det;

    const int N = m.order();
    // Nonlinear tails of m.
    Series2 M1 = m.first(), M2 = m.second();
    M1.set_coeff(1, 0, 0);
    M1.set_coeff(0, 1, 0);
    M2.set_coeff(1, 0, 0);
    M2.set_coeff(0, 1, 0);

    // Fixed point w = L^{-1}(id - M(w)) on a growing validity order.  The tails
    // have valuation >= 2, so an error of degree n in w perturbs M(w) only in
    // degrees > n: each pass is exact one order further than the last.
    Series2 w1(1), w2(1);
    w1.set_coeff(1, 0, ia);
    w1.set_coeff(0, 1, ib);
    w2.set_coeff(1, 0, ic);
    w2.set_coeff(0, 1, id);
    for (int ord = 2; ord <= N; ++ord) {
        const PlaneMap w(detail::assume_order(w1, ord), detail::assume_order(w2, ord));
        const Series2 s1 = Series2::var_x(ord) - compose2(M1, w);
        const Series2 s2 = Series2::var_y(ord) - compose2(M2, w);
        w1 = ia * s1 + ib * s2;
        w2 = ic * s1 + id * s2;
    }

    const PlaneMap w(w1, w2);
    if (compose_map(m, w) != PlaneMap::identity(N))
        throw InternalCheckFailed("map inversion residual is nonzero");
    return w;
}

Series1 restrict_line(const Series2& f, const Rat& a, const Rat& b) {
    const int N = f.order();
    std::vector<Rat> ap(N + 1), bp(N + 1);
    ap[0] = 1;
    bp[0] = 1;
    for (int i = 1; i <= N; ++i) {
        ap[i] = ap[i - 1] * a;
        bp[i] = bp[i - 1] * b;
    }
    Series1 out(N);
    for (const auto& [m, c] : f.terms()) out.add_coeff(m.total(), c * ap[m.r] * bp[m.s]);
    return out;
}

Series2 div_exact(const Series2& f, Divisor d) {
    if (f.order() < 1) throw InsufficientOrder("exact division needs validity order >= 1");
    const int N = f.order();
    Series2 out(N - 1);

    if (d == Divisor::X || d == Divisor::Y) {
        for (const auto& [m, c] : f.terms()) {
            const int e = (d == Divisor::X) ? m.r : m.s;
            if (e == 0) throw InexactDivision(m.total());
            if (d == Divisor::X)
                out.set_coeff(m.r - 1, m.s, c);
            else
                out.set_coeff(m.r, m.s - 1, c);
        }
        return out;
    }

    // Division by x - y, one homogeneous row at a time.  Writing the degree-n
    // part of f as sum_i a_i x^{n-i} y^i and the degree-(n-1) part of the
    // quotient as sum_i b_i x^{n-1-i} y^i, the product recurrence gives
    // b_i = a_i + b_{i-1}, with the remainder test b_{n-1} + a_n = 0.
    if (!is_zero(f.coeff(0, 0))) throw InexactDivision(0);
    for (int n = 1; n <= N; ++n) {
        Rat prev = f.coeff(n, 0);
        out.set_coeff(n - 1, 0, prev);
        for (int i = 1; i <= n - 1; ++i) {
            const Rat bi = f.coeff(n - i, i) + prev;
            out.set_coeff(n - 1 - i, i, bi);
            prev = bi;
        }
        if (!is_zero(prev + f.coeff(0, n))) throw InexactDivision(n);
    }
    return out;
}

Series2 log1p(const Series2& u) {
    if (!is_zero(u.coeff(0, 0)))
        throw NonzeroConstantTerm("log1p requires a series vanishing at the origin");
    const int N = u.order();
    Series2 out = u;
    Series2 pw = u;
    // u has valuation >= 1, so powers beyond u^N cannot touch degree <= N.
    for (int k = 2; k <= N && !pw.is_zero(); ++k) {
        pw = pw * u;
        out.add_scaled(pw, Rat(k % 2 == 0 ? -1 : 1) / k);
    }
    return out;
}

Series2 d_dx(const Series2& f) {
    if (f.order() < 1) throw InsufficientOrder("differentiation needs validity order >= 1");
    Series2 out(f.order() - 1);
    for (const auto& [m, c] : f.terms())
        if (m.r >= 1) out.set_coeff(m.r - 1, m.s, Rat(m.r) * c);
    return out;
}

Series2 d_dy(const Series2& f) {
    if (f.order() < 1) throw InsufficientOrder("differentiation needs validity order >= 1");
    Series2 out(f.order() - 1);
    for (const auto& [m, c] : f.terms())
        if (m.s >= 1) out.set_coeff(m.r, m.s - 1, Rat(m.s) * c);
    return out;
}

Series2 apply1(const Series1& h, const Series2& u) {
    if (!is_zero(u.coeff(0, 0)))
        throw NonzeroConstantTerm("composition requires the inner series to vanish at the origin");
    const int T = std::min(h.order(), u.order());
    const Series2 ut = truncated(u, T);
    Series2 res(T);
    for (int j = T; j >= 0; --j) {
        res = res * ut;
        res.add_coeff(0, 0, h.coeff(j));
    }
    return res;
}

Series2 embed_x(const Series1& h) {
    Series2 out(h.order());
    for (const auto& [d, c] : h.terms()) out.set_coeff(d, 0, c);
    return out;
}

Series2 embed_y(const Series1& h) {
    Series2 out(h.order());
    for (const auto& [d, c] : h.terms()) out.set_coeff(0, d, c);
    return out;
}

Series1 series1_in_x(const Series2& f) {
    Series1 out(f.order());
    for (const auto& [m, c] : f.terms()) {
        if (m.s != 0) throw Error("series depends on y, cannot reread as univariate");
        out.set_coeff(m.r, c);
    }
    return out;
}

}  // namespace webs
