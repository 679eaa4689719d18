#pragma once

#include <vector>

#include "webconn/ratfunc.hpp"

namespace webconn {

// Polynomial in p with rational-function coefficients; c[k] multiplies p^k.
class PPoly {
  public:
    PPoly() = default;
    explicit PPoly(std::vector<RatFunc> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit PPoly(const RatFunc& constant) : c_{constant} { trim(); }

    static PPoly p() { return PPoly(std::vector<RatFunc>{RatFunc(), RatFunc(1)}); }
    static PPoly monomial(unsigned k, const RatFunc& coeff) {
        std::vector<RatFunc> c(k + 1);
        c[k] = coeff;
        return PPoly(std::move(c));
    }

    // Split an MPoly by powers of p; x,y parts become polynomial RatFuncs.
    static PPoly from_mpoly(const MPoly& f) {
        std::vector<RatFunc> c;
        for (const MPoly& part : f.coefficients_wrt(Var::p)) c.emplace_back(part);
        return PPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero

    // Coefficient of p^k (zero outside range).
    const RatFunc& coeff(size_t k) const {
        static const RatFunc kZero;
        return k < c_.size() ? c_[k] : kZero;
    }

    PPoly operator-() const {
        PPoly r = *this;
        for (auto& e : r.c_) e = -e;
        return r;
    }
    friend PPoly operator+(const PPoly& a, const PPoly& b) {
        std::vector<RatFunc> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
        return PPoly(std::move(c));
    }
    friend PPoly operator-(const PPoly& a, const PPoly& b) { return a + (-b); }
    friend PPoly operator*(const PPoly& a, const PPoly& b) {
        if (a.is_zero() || b.is_zero()) return PPoly();
        std::vector<RatFunc> c(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return PPoly(std::move(c));
    }
    friend PPoly operator*(const RatFunc& s, const PPoly& a) {
        PPoly r = a;
        for (auto& e : r.c_) e = s * e;
        r.trim();
        return r;
    }
    friend bool operator==(const PPoly& a, const PPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PPoly& a, const PPoly& b) { return !(a == b); }

    PPoly derivative_p() const {
        if (c_.size() <= 1) return PPoly();
        std::vector<RatFunc> c(c_.size() - 1);
        for (size_t k = 1; k < c_.size(); ++k) c[k - 1] = RatFunc(Rational(static_cast<long>(k))) * c_[k];
        return PPoly(std::move(c));
    }
    PPoly derivative(Var v) const {
        PPoly r = *this;
        for (auto& e : r.c_) e = e.derivative(v);
        r.trim();
        return r;
    }

    RatFunc eval(const RatFunc& at) const {
        RatFunc r;
        for (size_t k = c_.size(); k-- > 0;) r = r * at + c_[k];
        return r;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t k = c_.size(); k-- > 0;) {
            if (c_[k].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + c_[k].str() + ")";
            if (k >= 1) s += "*p";
            if (k >= 2) s += "^" + std::to_string(k);
        }
        return s;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<RatFunc> c_;
};

} // namespace webconn
