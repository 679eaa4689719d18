#pragma once

#include <string>

#include "webconn/mpoly.hpp"

namespace webconn {

// Normalized rational function in x, y: num/den coprime, den with leading
// graded-lex coefficient 1. The canonical form is unique, so equality is
// structural.
class RatFunc {
  public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long n) : num_(n), den_(1) {}
    explicit RatFunc(const Rational& c) : num_(c), den_(1) {}
    explicit RatFunc(const MPoly& num) : num_(num), den_(1) { check_vars(); }
    RatFunc(const MPoly& num, const MPoly& den) : num_(num), den_(den) {
        check_vars();
        normalize();
    }

    static RatFunc variable(Var v) {
        if (v == Var::p) fail(ErrorKind::InvalidVariable, "p is not an x,y coordinate");
        return RatFunc(MPoly::variable(v));
    }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == MPoly(1) && den_ == MPoly(1); }
    bool is_polynomial() const { return den_ == MPoly(1); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc inv() const;
    RatFunc derivative(Var v) const;
    RatFunc pow(unsigned e) const;

    // true when the value at (px, py) is finite and nonzero
    bool invertible_at(const Rational& px, const Rational& py) const;
    bool finite_at(const Rational& px, const Rational& py) const;
    Rational eval(const Rational& px, const Rational& py) const;

    std::string str() const;

  private:
    void check_vars() const;
    void normalize();
    // For num/den already in lowest terms; only rescales den monic.
    static RatFunc from_reduced(MPoly num, MPoly den);

    MPoly num_;
    MPoly den_;
};

} // namespace webconn
