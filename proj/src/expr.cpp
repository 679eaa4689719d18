#include "webconn/expr.hpp"

#include <cctype>

namespace webconn {

namespace {

struct Parser {
    const std::string& text;
    size_t pos = 0;
    bool allow_p;

    [[noreturn]] void error(const std::string& msg) const {
        fail(ErrorKind::Parse, msg + " at position " + std::to_string(pos + 1));
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }

    ParsedExpr parse() {
        ParsedExpr e = expression();
        skip_ws();
        if (pos != text.size()) error("unexpected trailing input");
        return e;
    }

    ParsedExpr expression() {
        bool neg = false;
        skip_ws();
        if (accept('-')) neg = true;
        else accept('+');
        ParsedExpr acc = term();
        if (neg) acc.num = -acc.num;
        for (;;) {
            if (accept('+')) acc = add(acc, term(), false);
            else if (accept('-')) acc = add(acc, term(), true);
            else return acc;
        }
    }

    ParsedExpr term() {
        ParsedExpr acc = factor();
        for (;;) {
            if (accept('*')) {
                ParsedExpr f = factor();
                acc.num *= f.num;
                acc.den *= f.den;
            } else if (accept('/')) {
                ParsedExpr f = factor();
                if (f.num.is_zero()) error("division by zero");
                acc.num *= f.den;
                acc.den *= f.num;
            } else {
                return acc;
            }
        }
    }

    ParsedExpr factor() {
        ParsedExpr base = atom();
        if (accept('^')) {
            const unsigned e = exponent();
            base.num = base.num.pow(e);
            base.den = base.den.pow(e);
        }
        return base;
    }

    unsigned exponent() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            error("expected a non-negative integer exponent");
        unsigned long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + static_cast<unsigned long>(text[pos] - '0');
            if (v > 64) error("exponent too large");
            ++pos;
        }
        return static_cast<unsigned>(v);
    }

    ParsedExpr atom() {
        skip_ws();
        if (pos >= text.size()) error("unexpected end of expression");
        const char c = text[pos];
        if (c == '(') {
            ++pos;
            ParsedExpr e = expression();
            if (!accept(')')) error("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                digits += text[pos++];
            return {MPoly(Rational::from_string(digits)), MPoly(1)};
        }
        if (c == 'x' || c == 'y' || c == 'p') {
            ++pos;
            if (c == 'p' && !allow_p) error("variable p is not allowed here");
            const Var v = c == 'x' ? Var::x : (c == 'y' ? Var::y : Var::p);
            return {MPoly::variable(v), MPoly(1)};
        }
        error(std::string("unexpected character '") + c + "'");
    }

    static ParsedExpr add(const ParsedExpr& a, const ParsedExpr& b, bool subtract) {
        ParsedExpr r;
        MPoly cross = a.den * b.num;
        if (subtract) cross = -cross;
        r.num = a.num * b.den + cross;
        r.den = a.den * b.den;
        return r;
    }
};

} // namespace

ParsedExpr parse_expression(const std::string& text, bool allow_p) {
    Parser parser{text, 0, allow_p};
    ParsedExpr e = parser.parse();
    if (e.den.is_zero()) fail(ErrorKind::Parse, "zero denominator");
    const MPoly g = MPoly::gcd(e.num, e.den);
    if (!e.num.is_zero() && !g.is_constant() ) {
        e.num = MPoly::divide_exact(e.num, g);
        e.den = MPoly::divide_exact(e.den, g);
    }
    return e;
}

RatFunc to_ratfunc(const ParsedExpr& e) {
    if (e.num.depends_on(Var::p) || e.den.depends_on(Var::p))
        fail(ErrorKind::InvalidVariable, "expression must not involve p");
    return RatFunc(e.num, e.den);
}

WebEquation web_from_f(int degree, const ParsedExpr& f, BasePoint base) {
    if (f.den.depends_on(Var::p))
        fail(ErrorKind::DegenerateInput, "denominator of F must not involve p");
    if (f.num.degree(Var::p) > degree)
        fail(ErrorKind::Degree, "p-degree of F exceeds the declared degree");
    const RatFunc scale = RatFunc(MPoly(1), f.den);
    const std::vector<MPoly> parts = f.num.coefficients_wrt(Var::p);
    std::vector<RatFunc> coeffs(static_cast<size_t>(degree) + 1);
    for (size_t k = 0; k < parts.size(); ++k)
        coeffs[static_cast<size_t>(degree) - k] = RatFunc(parts[k]) * scale;
    return WebEquation::from_coefficients(degree, std::move(coeffs), base);
}

} // namespace webconn
