#pragma once

#include <string>

#include "webconn/webdef.hpp"

namespace webconn {

// Parsed arithmetic expression as an exact fraction of polynomials in
// p, x, y.
struct ParsedExpr {
    MPoly num;
    MPoly den{1};
};

// Grammar: integers, x, y, p, + - * / ^, parentheses; '^' takes a
// non-negative integer exponent. Errors carry the offending position.
ParsedExpr parse_expression(const std::string& text, bool allow_p);

// Fails with an invalid-variable error when p occurs.
RatFunc to_ratfunc(const ParsedExpr& e);

// Splits F by powers of p into a degree-d presentation.
WebEquation web_from_f(int degree, const ParsedExpr& f, BasePoint base);

} // namespace webconn
