#pragma once

// Truncated formal power series with exact rational coefficients.
//
// A Series1/Series2 value represents an equivalence class of series modulo
// terms of total degree > order(): the "validity order".  Coefficients beyond
// the validity order are unknown, not zero, and the API refuses to read them.
// Operations track validity explicitly and never silently extend it:
//   - ring ops (+, -, *) return min(order of inputs);
//   - composition with components vanishing at the origin returns min(orders);
//   - differentiation and exact division by x, y, or x-y lose one order.
// Stored terms are always nonzero and of total degree <= order().

#include "webs/errors.hpp"
#include "webs/rational.hpp"

#include <array>
#include <map>
#include <utility>

namespace webs {

class Series1;
class Series2;

namespace detail {
Series1 assume_order(Series1 s, int order);
Series2 assume_order(Series2 s, int order);
}  // namespace detail

// ---------------------------------------------------------------------------
// Univariate series in the formal variable t.

class Series1 {
public:
    explicit Series1(int order) : order_(order) {
        if (order < 0) throw InsufficientOrder("series order must be >= 0");
    }

    static Series1 constant(const Rat& q, int order) {
        Series1 s(order);
        s.set_coeff(0, q);
        return s;
    }
    static Series1 var_t(int order) { return monomial(order, 1, 1); }
    static Series1 monomial(int order, int degree, const Rat& q) {
        Series1 s(order);
        s.set_coeff(degree, q);
        return s;
    }

    int order() const { return order_; }
    bool is_zero() const { return terms_.empty(); }
    // Lowest degree carrying a nonzero coefficient; order()+1 when zero to order.
    int valuation() const { return terms_.empty() ? order_ + 1 : terms_.begin()->first; }

    const std::map<int, Rat>& terms() const { return terms_; }

    Rat coeff(int degree) const {
        check_degree(degree);
        auto it = terms_.find(degree);
        return it == terms_.end() ? Rat(0) : it->second;
    }
    void set_coeff(int degree, const Rat& v) {
        check_degree(degree);
        if (webs::is_zero(v))
            terms_.erase(degree);
        else
            terms_[degree] = v;
    }
    void add_coeff(int degree, const Rat& v) {
        check_degree(degree);
        auto [it, inserted] = terms_.emplace(degree, v);
        if (!inserted) {
            it->second += v;
            if (webs::is_zero(it->second)) terms_.erase(it);
        } else if (webs::is_zero(it->second)) {
            terms_.erase(it);
        }
    }
    // this += q * other, requiring other to be valid at least as far as this.
    void add_scaled(const Series1& other, const Rat& q);

    friend bool operator==(const Series1&, const Series1&) = default;

private:
    void check_degree(int degree) const {
        if (degree < 0 || degree > order_)
            throw Error("univariate coefficient index outside validity order");
    }

    int order_;
    std::map<int, Rat> terms_;

    friend Series1 detail::assume_order(Series1, int);
};

Series1 operator+(const Series1& a, const Series1& b);
Series1 operator-(const Series1& a, const Series1& b);
Series1 operator-(const Series1& a);
Series1 operator*(const Series1& a, const Series1& b);
Series1 operator*(const Rat& q, const Series1& a);
Series1 operator+(const Series1& a, const Rat& q);
Series1 operator-(const Series1& a, const Rat& q);

// Restriction to validity order M <= order (the only direction that exists).
Series1 truncated(const Series1& a, int M);
bool equal_to_order(const Series1& a, const Series1& b, int M);

// outer(inner(t)); inner must vanish at t = 0.  Order: min of the two.
Series1 compose1(const Series1& outer, const Series1& inner);

// Compositional inverse of h = h1*t + ..., h1 != 0; h(k(t)) = t to order.
Series1 invert1(const Series1& h);

// ---------------------------------------------------------------------------
// Bivariate series in x, y.

struct Mono {
    int r = 0;  // exponent of x
    int s = 0;  // exponent of y
    int total() const { return r + s; }
    friend bool operator==(const Mono&, const Mono&) = default;
};

// Graded order matching the canonical print order: total degree ascending,
// then exponent of x descending (x^2, then x*y, then y^2).
struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const {
        if (a.total() != b.total()) return a.total() < b.total();
        return a.r > b.r;
    }
};

class Series2 {
public:
    explicit Series2(int order) : order_(order) {
        if (order < 0) throw InsufficientOrder("series order must be >= 0");
    }

    static Series2 constant(const Rat& q, int order) {
        Series2 s(order);
        s.set_coeff(0, 0, q);
        return s;
    }
    static Series2 var_x(int order) { return monomial(order, 1, 0, 1); }
    static Series2 var_y(int order) { return monomial(order, 0, 1, 1); }
    static Series2 monomial(int order, int r, int s, const Rat& q) {
        Series2 m(order);
        m.set_coeff(r, s, q);
        return m;
    }

    int order() const { return order_; }
    bool is_zero() const { return terms_.empty(); }
    int valuation() const { return terms_.empty() ? order_ + 1 : terms_.begin()->first.total(); }

    const std::map<Mono, Rat, MonoLess>& terms() const { return terms_; }

    Rat coeff(int r, int s) const {
        check_mono(r, s);
        auto it = terms_.find(Mono{r, s});
        return it == terms_.end() ? Rat(0) : it->second;
    }
    void set_coeff(int r, int s, const Rat& v) {
        check_mono(r, s);
        if (webs::is_zero(v))
            terms_.erase(Mono{r, s});
        else
            terms_[Mono{r, s}] = v;
    }
    void add_coeff(int r, int s, const Rat& v) {
        check_mono(r, s);
        auto [it, inserted] = terms_.emplace(Mono{r, s}, v);
        if (!inserted) {
            it->second += v;
            if (webs::is_zero(it->second)) terms_.erase(it);
        } else if (webs::is_zero(it->second)) {
            terms_.erase(it);
        }
    }
    void add_scaled(const Series2& other, const Rat& q);

    friend bool operator==(const Series2&, const Series2&) = default;

private:
    void check_mono(int r, int s) const {
        if (r < 0 || s < 0 || r + s > order_)
            throw Error("bivariate coefficient index outside validity order");
    }

    int order_;
    std::map<Mono, Rat, MonoLess> terms_;

    friend Series2 detail::assume_order(Series2, int);
};

Series2 operator+(const Series2& a, const Series2& b);
Series2 operator-(const Series2& a, const Series2& b);
Series2 operator-(const Series2& a);
Series2 operator*(const Series2& a, const Series2& b);
Series2 operator*(const Rat& q, const Series2& a);
Series2 operator+(const Series2& a, const Rat& q);
Series2 operator-(const Series2& a, const Rat& q);

Series2 truncated(const Series2& a, int M);
bool equal_to_order(const Series2& a, const Series2& b, int M);

// ---------------------------------------------------------------------------
// Formal plane maps (pairs of bivariate series vanishing at the origin).

class PlaneMap {
public:
    // Both components must vanish at (0,0); validity is the min of the two.
    PlaneMap(const Series2& a, const Series2& b);

    static PlaneMap identity(int order) {
        return PlaneMap(Series2::var_x(order), Series2::var_y(order));
    }

    const Series2& first() const { return first_; }
    const Series2& second() const { return second_; }
    int order() const { return first_.order(); }

    // {a, b, c, d} with first = a x + b y + ..., second = c x + d y + ...
    std::array<Rat, 4> linear() const;

    friend bool operator==(const PlaneMap&, const PlaneMap&) = default;

private:
    Series2 first_, second_;
};

// f(m1(x,y), m2(x,y)).  Order: min(order of f, order of m).
Series2 compose2(const Series2& f, const PlaneMap& m);

// outer(inner): plane-map composition.
PlaneMap compose_map(const PlaneMap& outer, const PlaneMap& inner);

// Two-sided compositional inverse; m(w) = id certified to the validity order.
PlaneMap invert_map(const PlaneMap& m);

// t -> f(a t, b t): restriction to a parametrized line through the origin.
Series1 restrict_line(const Series2& f, const Rat& a, const Rat& b);

// Exact division by one of the three distinguished linear forms.  The quotient
// is valid one order lower; a nonzero remainder raises InexactDivision carrying
// the lowest total degree at which divisibility fails.
enum class Divisor { X, Y, XMinusY };
Series2 div_exact(const Series2& f, Divisor d);

// log(1 + u) for u vanishing at the origin.  Same validity order as u.
Series2 log1p(const Series2& u);

Series2 d_dx(const Series2& f);  // order drops by 1
Series2 d_dy(const Series2& f);

// h(u(x,y)) for univariate h and bivariate u vanishing at the origin.
Series2 apply1(const Series1& h, const Series2& u);

// h(t) reread as a series in x alone / y alone (same validity order).
Series2 embed_x(const Series1& h);
Series2 embed_y(const Series1& h);

// Inverse of embed_x; requires f to carry no y-dependent terms.
Series1 series1_in_x(const Series2& f);

}  // namespace webs
