#include "webconn/ratfunc.hpp"

namespace webconn {

void RatFunc::check_vars() const {
    if (num_.depends_on(Var::p) || den_.depends_on(Var::p))
        fail(ErrorKind::InvalidVariable, "rational function may not depend on p");
}

void RatFunc::normalize() {
    if (den_.is_zero()) fail(ErrorKind::DegenerateInput, "zero denominator");
    if (num_.is_zero()) {
        den_ = MPoly(1);
        return;
    }
    if (!num_.is_constant() && !den_.is_constant()) {
        MPoly g = MPoly::gcd(num_, den_);
        if (!(g == MPoly(1))) {
            num_ = MPoly::divide_exact(num_, g);
            den_ = MPoly::divide_exact(den_, g);
        }
    }
    const Rational lc = den_.leading_coefficient();
    if (!lc.is_one()) {
        const Rational inv = lc.inv();
        num_ *= inv;
        den_ *= inv;
    }
}

RatFunc RatFunc::from_reduced(MPoly num, MPoly den) {
    RatFunc r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    if (r.num_.is_zero()) {
        r.den_ = MPoly(1);
        return r;
    }
    const Rational lc = r.den_.leading_coefficient();
    if (!lc.is_one()) {
        const Rational inv = lc.inv();
        r.num_ *= inv;
        r.den_ *= inv;
    }
    return r;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

// Sum of two reduced fractions stays reduced after cancelling against the
// shared denominator factor only, so one small gcd suffices (Knuth 4.5.1).
RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    MPoly g = MPoly::gcd(a.den_, b.den_);
    if (g.is_constant())
        return RatFunc::from_reduced(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    const MPoly ad1 = MPoly::divide_exact(a.den_, g);
    const MPoly bd1 = MPoly::divide_exact(b.den_, g);
    MPoly t = a.num_ * bd1 + b.num_ * ad1;
    if (t.is_zero()) return RatFunc();
    MPoly g2 = MPoly::gcd(t, g);
    if (!g2.is_constant()) {
        t = MPoly::divide_exact(t, g2);
        g = MPoly::divide_exact(g, g2);
    }
    return RatFunc::from_reduced(std::move(t), ad1 * bd1 * g);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    MPoly an = a.num_;
    MPoly bd = b.den_;
    MPoly g1 = MPoly::gcd(an, bd);
    if (!g1.is_constant()) {
        an = MPoly::divide_exact(an, g1);
        bd = MPoly::divide_exact(bd, g1);
    }
    MPoly bn = b.num_;
    MPoly ad = a.den_;
    MPoly g2 = MPoly::gcd(bn, ad);
    if (!g2.is_constant()) {
        bn = MPoly::divide_exact(bn, g2);
        ad = MPoly::divide_exact(ad, g2);
    }
    return RatFunc::from_reduced(an * bn, ad * bd);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) fail(ErrorKind::DegenerateInput, "division by zero rational function");
    if (a.is_zero()) return RatFunc();
    MPoly an = a.num_;
    MPoly bn = b.num_;
    MPoly g1 = MPoly::gcd(an, bn);
    if (!g1.is_constant()) {
        an = MPoly::divide_exact(an, g1);
        bn = MPoly::divide_exact(bn, g1);
    }
    MPoly ad = a.den_;
    MPoly bd = b.den_;
    MPoly g2 = MPoly::gcd(ad, bd);
    if (!g2.is_constant()) {
        ad = MPoly::divide_exact(ad, g2);
        bd = MPoly::divide_exact(bd, g2);
    }
    return RatFunc::from_reduced(an * bd, ad * bn);
}

RatFunc RatFunc::inv() const {
    if (is_zero()) fail(ErrorKind::DegenerateInput, "inverse of zero rational function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::derivative(Var v) const {
    if (v == Var::p) fail(ErrorKind::InvalidVariable, "derivative of a rational function in p");
    if (is_polynomial()) return RatFunc(num_.derivative(v));
    const MPoly dd = den_.derivative(v);
    // repeated factors of den divide den' as well; cancelling them up front
    // keeps the quotient-rule intermediates near their reduced size
    const MPoly g = dd.is_zero() ? den_ : MPoly::gcd(den_, dd);
    if (g.is_constant())
        return RatFunc(num_.derivative(v) * den_ - num_ * dd, den_ * den_);
    const MPoly d1 = MPoly::divide_exact(den_, g);
    return RatFunc(num_.derivative(v) * d1 - num_ * MPoly::divide_exact(dd, g), den_ * d1);
}

RatFunc RatFunc::pow(unsigned e) const {
    RatFunc r(1);
    RatFunc b = *this;
    while (e) {
        if (e & 1) r *= b;
        if (e >>= 1) b *= b;
    }
    return r;
}

bool RatFunc::finite_at(const Rational& px, const Rational& py) const {
    return !den_.eval_xy(px, py).is_zero();
}

bool RatFunc::invertible_at(const Rational& px, const Rational& py) const {
    return finite_at(px, py) && !num_.eval_xy(px, py).is_zero();
}

Rational RatFunc::eval(const Rational& px, const Rational& py) const {
    Rational d = den_.eval_xy(px, py);
    if (d.is_zero()) fail(ErrorKind::DegenerateInput, "pole at evaluation point");
    return num_.eval_xy(px, py) / d;
}

std::string RatFunc::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace webconn
