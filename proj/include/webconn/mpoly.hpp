#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "webconn/rational.hpp"

namespace webconn {

enum class Var : int { p = 0, x = 1, y = 2 };

inline const char* var_name(Var v) {
    switch (v) {
        case Var::p: return "p";
        case Var::x: return "x";
        default: return "y";
    }
}

struct Monomial {
    std::array<unsigned, 3> e{0, 0, 0}; // exponents of p, x, y

    unsigned total() const { return e[0] + e[1] + e[2]; }
    unsigned deg(Var v) const { return e[static_cast<int>(v)]; }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

// Graded-lex with p > x > y, largest monomial first.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.total() != b.total()) return a.total() > b.total();
        if (a.e[0] != b.e[0]) return a.e[0] > b.e[0];
        if (a.e[1] != b.e[1]) return a.e[1] > b.e[1];
        return a.e[2] > b.e[2];
    }
};

// Exact multivariate polynomial in p, x, y over the rationals.
// No zero coefficients are stored; iteration order is decreasing graded-lex.
class MPoly {
  public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    MPoly() = default;
    explicit MPoly(const Rational& c) {
        if (!c.is_zero()) terms_[Monomial{}] = c;
    }
    explicit MPoly(long n) : MPoly(Rational(n)) {}

    static MPoly variable(Var v, unsigned exp = 1) {
        MPoly r;
        if (exp == 0) return MPoly(1);
        Monomial m;
        m.e[static_cast<int>(v)] = exp;
        r.terms_[m] = Rational(1);
        return r;
    }
    static MPoly term(const Monomial& m, const Rational& c) {
        MPoly r;
        if (!c.is_zero()) r.terms_[m] = c;
        return r;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total() == 0);
    }
    Rational constant_value() const; // requires is_constant()

    int degree(Var v) const;
    int total_degree() const; // -1 for zero
    bool depends_on(Var v) const { return degree(v) > 0; }

    // Leading (graded-lex) term.
    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly& operator*=(const Rational& c);
    friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly derivative(Var v) const;
    MPoly pow(unsigned e) const;

    // View as a univariate polynomial in v; index = power of v.
    std::vector<MPoly> coefficients_wrt(Var v) const;
    static MPoly assemble_wrt(Var v, const std::vector<MPoly>& coeffs);

    // Exact division; throws Internal if the division is not exact.
    static MPoly divide_exact(const MPoly& num, const MPoly& den);

    // GCD, normalized to integer-primitive with positive leading coefficient.
    static MPoly gcd(const MPoly& a, const MPoly& b);

    // Rational content c such that (*this)/c has coprime integer coefficients
    // with positive leading coefficient. Zero poly has content 0.
    Rational content() const;

    Rational eval(const Rational& px, const Rational& py, const Rational& pp) const;
    // Evaluation of an x,y-polynomial.
    Rational eval_xy(const Rational& px, const Rational& py) const;

    std::string str() const;

  private:
    TermMap terms_;
};

} // namespace webconn
