#pragma once

#include <vector>

#include "webconn/ratfunc.hpp"

namespace webconn {

// 1-form cx dx + cy dy with rational-function coefficients.
struct Form1 {
    RatFunc cx;
    RatFunc cy;

    Form1() = default;
    Form1(RatFunc x_coeff, RatFunc y_coeff) : cx(std::move(x_coeff)), cy(std::move(y_coeff)) {}

    bool is_zero() const { return cx.is_zero() && cy.is_zero(); }

    Form1 operator-() const { return {-cx, -cy}; }
    friend Form1 operator+(const Form1& a, const Form1& b) { return {a.cx + b.cx, a.cy + b.cy}; }
    friend Form1 operator-(const Form1& a, const Form1& b) { return {a.cx - b.cx, a.cy - b.cy}; }
    friend Form1 operator*(const RatFunc& s, const Form1& w) { return {s * w.cx, s * w.cy}; }
    friend bool operator==(const Form1& a, const Form1& b) { return a.cx == b.cx && a.cy == b.cy; }
    friend bool operator!=(const Form1& a, const Form1& b) { return !(a == b); }
};

// 2-form c dx^dy.
struct Form2 {
    RatFunc c;

    Form2() = default;
    explicit Form2(RatFunc coeff) : c(std::move(coeff)) {}

    bool is_zero() const { return c.is_zero(); }

    Form2 operator-() const { return Form2{-c}; }
    friend Form2 operator+(const Form2& a, const Form2& b) { return Form2{a.c + b.c}; }
    friend Form2 operator-(const Form2& a, const Form2& b) { return Form2{a.c - b.c}; }
    friend Form2 operator*(const RatFunc& s, const Form2& w) { return Form2{s * w.c}; }
    friend bool operator==(const Form2& a, const Form2& b) { return a.c == b.c; }
    friend bool operator!=(const Form2& a, const Form2& b) { return !(a == b); }
};

inline Form2 exterior_derivative(const Form1& w) {
    return Form2{w.cy.derivative(Var::x) - w.cx.derivative(Var::y)};
}

inline Form1 exterior_derivative(const RatFunc& f) {
    return Form1{f.derivative(Var::x), f.derivative(Var::y)};
}

inline Form2 wedge(const Form1& a, const Form1& b) {
    return Form2{a.cx * b.cy - a.cy * b.cx};
}

template <typename Entry>
struct FormMatrix {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<std::vector<Entry>> entries;

    FormMatrix() = default;
    FormMatrix(size_t r, size_t c) : rows(r), cols(c), entries(r, std::vector<Entry>(c)) {}

    Entry& at(size_t i, size_t j) { return entries[i][j]; }
    const Entry& at(size_t i, size_t j) const { return entries[i][j]; }

    bool is_zero() const {
        for (const auto& row : entries)
            for (const auto& e : row)
                if (!e.is_zero()) return false;
        return true;
    }

    friend bool operator==(const FormMatrix& a, const FormMatrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
    }
};

using Form1Matrix = FormMatrix<Form1>;
using Form2Matrix = FormMatrix<Form2>;

// K = d(gamma) + gamma ^ gamma for a square matrix of 1-forms.
inline Form2Matrix matrix_curvature(const Form1Matrix& gamma) {
    if (gamma.rows != gamma.cols) fail(ErrorKind::Dimension, "curvature of a non-square matrix");
    const size_t n = gamma.rows;
    Form2Matrix k(n, n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            Form2 acc = exterior_derivative(gamma.at(i, j));
            for (size_t l = 0; l < n; ++l) acc = acc + wedge(gamma.at(i, l), gamma.at(l, j));
            k.at(i, j) = acc;
        }
    }
    return k;
}

inline Form1 trace(const Form1Matrix& m) {
    if (m.rows != m.cols) fail(ErrorKind::Dimension, "trace of a non-square matrix");
    Form1 t;
    for (size_t i = 0; i < m.rows; ++i) t = t + m.at(i, i);
    return t;
}

inline Form2 trace(const Form2Matrix& m) {
    if (m.rows != m.cols) fail(ErrorKind::Dimension, "trace of a non-square matrix");
    Form2 t;
    for (size_t i = 0; i < m.rows; ++i) t = t + m.at(i, i);
    return t;
}

} // namespace webconn
