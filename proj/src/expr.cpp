#include "webs/expr.hpp"

#include <cctype>
#include <string_view>

namespace webs {

namespace {

constexpr unsigned long kMaxExponent = 1'000'000;

struct Parser {
    std::string_view src;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    bool at(char c) {
        skip_ws();
        return pos < src.size() && src[pos] == c;
    }
    bool eat(char c) {
        if (at(c)) {
            ++pos;
            return true;
        }
        return false;
    }
    bool at_digit() {
        skip_ws();
        return pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]));
    }

    mpz_class natural() {
        const std::size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        return mpz_class(std::string(src.substr(start, pos - start)), 10);
    }

    bool starts_factor() {
        skip_ws();
        if (pos >= src.size()) return false;
        const char c = src[pos];
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' ||
               c == 't' || c == '(';
    }

    Expr expr() {
        skip_ws();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Expr e = term();
        if (neg) {
            Expr n;
            n.kind = Expr::Kind::Neg;
            n.kids.push_back(std::move(e));
            e = std::move(n);
        }
        while (true) {
            Expr::Kind k;
            if (eat('+'))
                k = Expr::Kind::Add;
            else if (eat('-'))
                k = Expr::Kind::Sub;
            else
                break;
            Expr n;
            n.kind = k;
            n.kids.push_back(std::move(e));
            n.kids.push_back(term());
            e = std::move(n);
        }
        return e;
    }

    Expr term() {
        Expr e = factor();
        while (true) {
            if (eat('*')) {
                // explicit product
            } else if (!starts_factor()) {
                break;
            }
            Expr n;
            n.kind = Expr::Kind::Mul;
            n.kids.push_back(std::move(e));
            n.kids.push_back(factor());
            e = std::move(n);
        }
        return e;
    }

    Expr factor() {
        Expr b = base();
        if (eat('^')) {
            skip_ws();
            if (pos < src.size() && src[pos] == '-') throw NegativeExponent(pos);
            if (!at_digit()) throw ParseError(pos, "a nonnegative integer exponent");
            const mpz_class e = natural();
            if (e > kMaxExponent) throw ParseError(pos, "an exponent within range");
            Expr n;
            n.kind = Expr::Kind::Pow;
            n.exponent = e.get_ui();
            n.kids.push_back(std::move(b));
            return n;
        }
        return b;
    }

    Expr base() {
        skip_ws();
        if (pos >= src.size()) throw ParseError(pos, "a number, 'x', 'y', 't', or '('");
        const char c = src[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const mpz_class num = natural();
            Rat q(num);
            if (eat('/')) {
                skip_ws();
                const std::size_t den_at = pos;
                if (!at_digit()) throw ParseError(pos, "a denominator");
                const mpz_class den = natural();
                if (den == 0) throw ParseError(den_at, "a nonzero denominator");
                q = Rat(num, den);
                q.canonicalize();
            }
            Expr n;
            n.kind = Expr::Kind::Number;
            n.number = q;
            return n;
        }
        if (c == 'x' || c == 'y' || c == 't') {
            ++pos;
            Expr n;
            n.kind = Expr::Kind::Var;
            n.var = c;
            return n;
        }
        if (c == '(') {
            ++pos;
            Expr e = expr();
            if (!eat(')')) throw ParseError(pos, "')'");
            return e;
        }
        throw ParseError(pos, "a number, 'x', 'y', 't', or '('");
    }
};

// Generic evaluator over either series ring; MakeVar maps a variable name to a
// series or throws EvalError.
template <class S, class MakeVar>
S eval_impl(const Expr& e, int order, const MakeVar& make_var) {
    switch (e.kind) {
        case Expr::Kind::Number:
            return S::constant(e.number, order);
        case Expr::Kind::Var:
            return make_var(e.var);
        case Expr::Kind::Neg:
            return -eval_impl<S>(e.kids[0], order, make_var);
        case Expr::Kind::Add:
            return eval_impl<S>(e.kids[0], order, make_var) +
                   eval_impl<S>(e.kids[1], order, make_var);
        case Expr::Kind::Sub:
            return eval_impl<S>(e.kids[0], order, make_var) -
                   eval_impl<S>(e.kids[1], order, make_var);
        case Expr::Kind::Mul:
            return eval_impl<S>(e.kids[0], order, make_var) *
                   eval_impl<S>(e.kids[1], order, make_var);
        case Expr::Kind::Pow: {
            S b = eval_impl<S>(e.kids[0], order, make_var);
            // Square-and-multiply; truncation keeps every product small.
            S r = S::constant(1, order);
            unsigned long n = e.exponent;
            while (n > 0) {
                if (n & 1) r = r * b;
                n >>= 1;
                if (n > 0) b = b * b;
            }
            return r;
        }
    }
    throw Error("unreachable expression kind");
}

}  // namespace

Expr parse_expr(const std::string& src) {
    Parser p{src};
    Expr e = p.expr();
    p.skip_ws();
    if (p.pos != src.size()) throw ParseError(p.pos, "end of input or an operator");
    return e;
}

Series2 eval2(const Expr& e, int order) {
    return eval_impl<Series2>(e, order, [order](char v) -> Series2 {
        if (v == 'x') return Series2::var_x(order);
        if (v == 'y') return Series2::var_y(order);
        throw EvalError("variable 't' is not available in a bivariate context");
    });
}

Series1 eval1(const Expr& e, int order) {
    return eval_impl<Series1>(e, order, [order](char v) -> Series1 {
        if (v == 't') return Series1::var_t(order);
        throw EvalError(std::string("variable '") + v +
                        "' is not available in a univariate context");
    });
}

namespace {

void append_term(std::string& out, bool& first, const Rat& c,
                 const std::vector<std::pair<char, int>>& vars) {
    const bool neg = sgn(c) < 0;
    const Rat a = abs(c);
    bool has_var = false;
    for (const auto& [v, e] : vars)
        if (e > 0) has_var = true;
    std::string body;
    if (a != 1 || !has_var) body = to_string(a);
    for (const auto& [v, e] : vars) {
        if (e == 0) continue;
        if (!body.empty()) body += '*';
        body += v;
        if (e > 1) body += '^' + std::to_string(e);
    }
    if (first) {
        if (neg) out += '-';
        first = false;
    } else {
        out += neg ? " - " : " + ";
    }
    out += body;
}

}  // namespace

std::string format_series(const Series2& s) {
    if (s.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : s.terms())
        append_term(out, first, c, {{'x', m.r}, {'y', m.s}});
    return out;
}

std::string format_series(const Series1& s) {
    if (s.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [d, c] : s.terms()) append_term(out, first, c, {{'t', d}});
    return out;
}

}  // namespace webs
