#pragma once

#include <array>
#include <cctype>
#include <cmath>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cusp/curve.hpp"

// Curve expression grammar:
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' UINT)?
//   base   := RATIONAL | 't' | '(' expr ')' | ('sin'|'cos'|'exp') '(' expr ')' | '-' base
//   RATIONAL := INT ('/' UINT)?
//
// There is no division operator; '/' only joins the two halves of a rational
// literal, with no whitespace inside the token. '^' binds to the whole base,
// so "-t^2" parses as (-t)^2.

namespace cusp {

enum class ExprKind { number, variable, add, sub, mul, neg, pow, fn_sin, fn_cos, fn_exp };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    ExprKind kind;
    Rational value;        // number
    unsigned exponent = 0; // pow
    ExprPtr a;
    ExprPtr b;

    static ExprPtr number(Rational v) {
        auto e = std::make_shared<Expr>();
        e->kind = ExprKind::number;
        e->value = std::move(v);
        return e;
    }
    static ExprPtr variable() {
        auto e = std::make_shared<Expr>();
        e->kind = ExprKind::variable;
        return e;
    }
    static ExprPtr node(ExprKind k, ExprPtr a, ExprPtr b = nullptr) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->a = std::move(a);
        e->b = std::move(b);
        return e;
    }
    static ExprPtr power(ExprPtr base, unsigned exponent) {
        auto e = std::make_shared<Expr>();
        e->kind = ExprKind::pow;
        e->exponent = exponent;
        e->a = std::move(base);
        return e;
    }
};

namespace detail {

class ExprParser {
public:
    explicit ExprParser(std::string_view src) : s_(src) {}

    ExprPtr run() {
        ExprPtr e = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) fail("end of input");
        return e;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& expected) {
        throw parse_error("parse error at position " + std::to_string(pos_) + ": expected " + expected,
                          pos_, expected);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    ExprPtr parse_expr() {
        ExprPtr e = parse_term();
        for (;;) {
            if (eat('+'))
                e = Expr::node(ExprKind::add, e, parse_term());
            else if (eat('-'))
                e = Expr::node(ExprKind::sub, e, parse_term());
            else
                return e;
        }
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_factor();
        while (eat('*')) e = Expr::node(ExprKind::mul, e, parse_factor());
        return e;
    }

    ExprPtr parse_factor() {
        ExprPtr base = parse_base();
        if (eat('^')) return Expr::power(base, parse_uint());
        return base;
    }

    ExprPtr parse_base() {
        const char c = peek();
        if (c == '-') {
            ++pos_;
            return Expr::node(ExprKind::neg, parse_base());
        }
        if (c == '(') {
            ++pos_;
            ExprPtr e = parse_expr();
            if (!eat(')')) fail("')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Expr::number(parse_rational());
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
                name += s_[pos_++];
            if (name == "t") return Expr::variable();
            ExprKind k;
            if (name == "sin")
                k = ExprKind::fn_sin;
            else if (name == "cos")
                k = ExprKind::fn_cos;
            else if (name == "exp")
                k = ExprKind::fn_exp;
            else {
                pos_ -= name.size();
                fail("'t', 'sin', 'cos' or 'exp'");
            }
            if (!eat('(')) fail("'(' after function name");
            ExprPtr arg = parse_expr();
            if (!eat(')')) fail("')'");
            return Expr::node(k, arg);
        }
        fail("a rational, 't', '(', a function or '-'");
    }

    std::string parse_digits() {
        skip_ws();
        std::string d;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            d += s_[pos_++];
        if (d.empty()) fail("digits");
        return d;
    }

    // Digits immediately followed by an optional '/digits'; no internal spaces.
    Rational parse_rational() {
        std::string num = parse_digits();
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("denominator digits");
            std::string den;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                den += s_[pos_++];
            Rational r = Rational::from_string(num + "/" + den);
            if (r.raw().get_den() == 0) fail("nonzero denominator");
            return r;
        }
        return Rational::from_string(num);
    }

    unsigned parse_uint() {
        std::string d = parse_digits();
        if (d.size() > 6) fail("an exponent with at most 6 digits");
        return static_cast<unsigned>(std::stoul(d));
    }
};

} // namespace detail

inline ExprPtr parse_expression(const std::string& src) {
    return detail::ExprParser(src).run();
}

inline bool is_polynomial(const Expr& e) {
    switch (e.kind) {
        case ExprKind::number:
        case ExprKind::variable: return true;
        case ExprKind::fn_sin:
        case ExprKind::fn_cos:
        case ExprKind::fn_exp: return false;
        case ExprKind::neg: return is_polynomial(*e.a);
        case ExprKind::pow: return is_polynomial(*e.a);
        default: return is_polynomial(*e.a) && is_polynomial(*e.b);
    }
}

inline double eval_num(const Expr& e, double t) {
    switch (e.kind) {
        case ExprKind::number: return e.value.to_double();
        case ExprKind::variable: return t;
        case ExprKind::add: return eval_num(*e.a, t) + eval_num(*e.b, t);
        case ExprKind::sub: return eval_num(*e.a, t) - eval_num(*e.b, t);
        case ExprKind::mul: return eval_num(*e.a, t) * eval_num(*e.b, t);
        case ExprKind::neg: return -eval_num(*e.a, t);
        case ExprKind::pow: return std::pow(eval_num(*e.a, t), static_cast<double>(e.exponent));
        case ExprKind::fn_sin: return std::sin(eval_num(*e.a, t));
        case ExprKind::fn_cos: return std::cos(eval_num(*e.a, t));
        case ExprKind::fn_exp: return std::exp(eval_num(*e.a, t));
    }
    throw domain_error("unsupported expression node");
}

// Evaluates the expression in jet arithmetic with the given jet standing in
// for t. With variable(order) this is the Maclaurin expansion; with
// t0 + variable(order) it is the expansion about t0 (float backend only,
// since sin/cos/exp of a nonzero constant leave the rationals).
template <class S>
Jet<S> expr_to_jet(const Expr& e, const Jet<S>& var, double tol = -1.0) {
    switch (e.kind) {
        case ExprKind::number: return Jet<S>::constant(scalar_traits<S>::from_rational(e.value), var.order());
        case ExprKind::variable: return var;
        case ExprKind::add: return expr_to_jet(*e.a, var, tol) + expr_to_jet(*e.b, var, tol);
        case ExprKind::sub: return expr_to_jet(*e.a, var, tol) - expr_to_jet(*e.b, var, tol);
        case ExprKind::mul: return expr_to_jet(*e.a, var, tol) * expr_to_jet(*e.b, var, tol);
        case ExprKind::neg: return -expr_to_jet(*e.a, var, tol);
        case ExprKind::pow: return ipow(expr_to_jet(*e.a, var, tol), e.exponent);
        case ExprKind::fn_sin: return sin(expr_to_jet(*e.a, var, tol), tol);
        case ExprKind::fn_cos: return cos(expr_to_jet(*e.a, var, tol), tol);
        case ExprKind::fn_exp: return exp(expr_to_jet(*e.a, var, tol), tol);
    }
    throw domain_error("unsupported expression node");
}

// A curve is a pair of expressions in t.
struct CurveExpr {
    ExprPtr x;
    ExprPtr y;

    static CurveExpr parse(const std::string& xs, const std::string& ys) {
        return {parse_expression(xs), parse_expression(ys)};
    }
};

inline bool is_polynomial(const CurveExpr& c) {
    return is_polynomial(*c.x) && is_polynomial(*c.y);
}

template <class S>
CurveJet<S> to_jet(const CurveExpr& c, int order, double tol = -1.0) {
    if (order < 1) throw domain_error("to_jet needs order >= 1");
    Jet<S> var = Jet<S>::variable(order);
    return {expr_to_jet<S>(*c.x, var, tol), expr_to_jet<S>(*c.y, var, tol)};
}

// Expansion about t0 (used by the plot resampler).
inline CurveJet<double> to_jet_at(const CurveExpr& c, double t0, int order, double tol = -1.0) {
    Jet<double> var = Jet<double>::variable(order);
    var.set_coeff(0, t0);
    return {expr_to_jet<double>(*c.x, var, tol), expr_to_jet<double>(*c.y, var, tol)};
}

// Floating-point samples at equally spaced parameters.
inline std::vector<std::array<double, 2>> eval_points(const CurveExpr& c, double t_min, double t_max,
                                                      int samples) {
    if (samples < 2) throw domain_error("eval_points needs at least 2 samples");
    std::vector<std::array<double, 2>> pts;
    pts.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        double t = t_min + (t_max - t_min) * static_cast<double>(i) / static_cast<double>(samples - 1);
        pts.push_back({eval_num(*c.x, t), eval_num(*c.y, t)});
    }
    return pts;
}

} // namespace cusp
