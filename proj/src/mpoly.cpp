#include "webconn/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace webconn {

Rational MPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    return terms_.begin()->second;
}

int MPoly::degree(Var v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.deg(v)));
    return d;
}

int MPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.begin()->first.total());
}

const Monomial& MPoly::leading_monomial() const {
    if (terms_.empty()) fail(ErrorKind::Internal, "leading term of zero polynomial");
    return terms_.begin()->first;
}

const Rational& MPoly::leading_coefficient() const {
    if (terms_.empty()) fail(ErrorKind::Internal, "leading term of zero polynomial");
    return terms_.begin()->second;
}

MPoly MPoly::operator-() const {
    MPoly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = -c;
        } else {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m;
            for (int i = 0; i < 3; ++i) m.e[i] = ma.e[i] + mb.e[i];
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                Rational c = ca * cb;
                if (!c.is_zero()) r.terms_[m] = c;
            } else {
                it->second += ca * cb;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

MPoly& MPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

MPoly MPoly::derivative(Var v) const {
    const int iv = static_cast<int>(v);
    MPoly r;
    for (const auto& [m, c] : terms_) {
        if (m.e[iv] == 0) continue;
        Monomial dm = m;
        dm.e[iv] -= 1;
        r.terms_[dm] = c * Rational(static_cast<long>(m.e[iv]));
    }
    return r;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly r(1);
    MPoly b = *this;
    while (e) {
        if (e & 1) r *= b;
        if (e >>= 1) b *= b;
    }
    return r;
}

std::vector<MPoly> MPoly::coefficients_wrt(Var v) const {
    const int iv = static_cast<int>(v);
    std::vector<MPoly> out(static_cast<size_t>(degree(v)) + 1);
    for (const auto& [m, c] : terms_) {
        Monomial rm = m;
        unsigned k = rm.e[iv];
        rm.e[iv] = 0;
        out[k] += MPoly::term(rm, c);
    }
    while (out.size() > 1 && out.back().is_zero()) out.pop_back();
    return out;
}

MPoly MPoly::assemble_wrt(Var v, const std::vector<MPoly>& coeffs) {
    MPoly r;
    for (size_t k = 0; k < coeffs.size(); ++k)
        r += coeffs[k] * MPoly::variable(v, static_cast<unsigned>(k));
    return r;
}

namespace {

// Single-divisor division; false when the division is not exact.
bool try_divide(const MPoly& num, const MPoly& den, MPoly& q) {
    q = MPoly();
    MPoly r = num;
    const Monomial& dm = den.leading_monomial();
    const Rational& dc = den.leading_coefficient();
    while (!r.is_zero()) {
        const Monomial& rm = r.leading_monomial();
        Monomial qm;
        for (int i = 0; i < 3; ++i) {
            if (rm.e[i] < dm.e[i]) return false;
            qm.e[i] = rm.e[i] - dm.e[i];
        }
        MPoly t = MPoly::term(qm, r.leading_coefficient() / dc);
        q += t;
        r -= t * den;
    }
    return true;
}

} // namespace

MPoly MPoly::divide_exact(const MPoly& num, const MPoly& den) {
    if (den.is_zero()) fail(ErrorKind::DegenerateInput, "division by zero polynomial");
    MPoly q;
    if (!try_divide(num, den, q)) fail(ErrorKind::Internal, "inexact polynomial division");
    return q;
}

Rational MPoly::content() const {
    if (terms_.empty()) return Rational(0);
    mpz_class g = 0;
    mpz_class l = 1;
    for (const auto& [m, c] : terms_) {
        mpz_class n = c.num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        mpz_class d = c.den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    Rational cont(mpq_class(g, l));
    if (leading_coefficient().sign() < 0) cont = -cont;
    return cont;
}

namespace {

// Pseudo-remainder of a by b in variable v (coefficients may involve the
// remaining variables): lc(b)^(da-db+1) * a mod b.
MPoly pseudo_rem(const MPoly& a, const MPoly& b, Var v) {
    std::vector<MPoly> ra = a.coefficients_wrt(v);
    std::vector<MPoly> rb = b.coefficients_wrt(v);
    int da = static_cast<int>(ra.size()) - 1;
    const int db = static_cast<int>(rb.size()) - 1;
    const MPoly& lb = rb.back();
    int steps = da - db + 1;
    while (da >= db && !(ra.size() == 1 && ra[0].is_zero())) {
        MPoly lead = ra[da];
        for (int k = 0; k <= da; ++k) ra[k] = ra[k] * lb;
        if (!lead.is_zero()) {
            for (int k = 0; k <= db; ++k) ra[da - db + k] -= lead * rb[k];
        }
        --steps;
        ra.resize(da); // degree drops by at least one
        while (ra.size() > 1 && ra.back().is_zero()) ra.pop_back();
        da = static_cast<int>(ra.size()) - 1;
        if (ra.size() == 1 && ra[0].is_zero()) break;
    }
    MPoly r = MPoly::assemble_wrt(v, ra);
    // keep the pseudo-remainder normalization exact even when the degree
    // dropped by more than one per step
    for (; steps > 0; --steps) r *= lb;
    return r;
}

MPoly integer_primitive(const MPoly& f) {
    if (f.is_zero()) return f;
    return MPoly::divide_exact(f, MPoly(f.content()));
}

// Highest variable (p > x > y) appearing in f or g, if any.
bool pick_main_var(const MPoly& f, const MPoly& g, Var& out) {
    for (Var v : {Var::p, Var::x, Var::y}) {
        if (f.depends_on(v) || g.depends_on(v)) {
            out = v;
            return true;
        }
    }
    return false;
}

MPoly gcd_primitive(const MPoly& a, const MPoly& b);

// Content of f with respect to v: gcd of its v-coefficients.
MPoly content_wrt(const MPoly& f, Var v) {
    MPoly c;
    for (const MPoly& coeff : f.coefficients_wrt(v)) {
        if (coeff.is_zero()) continue;
        c = c.is_zero() ? integer_primitive(coeff) : gcd_primitive(c, coeff);
        if (c.is_constant()) return MPoly(1);
    }
    return c;
}

// GCD of integer-primitive inputs via the subresultant PRS.
MPoly gcd_primitive(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Var v;
    if (!pick_main_var(a, b, v)) return MPoly(1);

    MPoly ca = content_wrt(a, v);
    MPoly cb = content_wrt(b, v);
    MPoly ppa = MPoly::divide_exact(a, ca);
    MPoly ppb = MPoly::divide_exact(b, cb);
    MPoly cont = gcd_primitive(ca, cb);

    MPoly A = ppa;
    MPoly B = ppb;
    if (A.degree(v) < B.degree(v)) std::swap(A, B);
    MPoly g(1);
    MPoly h(1);
    for (;;) {
        const int delta = A.degree(v) - B.degree(v);
        MPoly r = pseudo_rem(A, B, v);
        if (r.is_zero()) break;
        if (r.degree(v) == 0) {
            B = MPoly(1);
            break;
        }
        A = B;
        MPoly denom = g * h.pow(static_cast<unsigned>(delta));
        B = MPoly::divide_exact(r, denom);
        g = A.coefficients_wrt(v).back();
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = MPoly::divide_exact(g.pow(static_cast<unsigned>(delta)),
                                    h.pow(static_cast<unsigned>(delta - 1)));
        }
    }
    MPoly pp = MPoly::divide_exact(B, content_wrt(B, v));
    pp = integer_primitive(pp);
    return cont * pp;
}

mpz_class max_abs_coeff(const MPoly& f) {
    mpz_class m = 0;
    for (const auto& [mono, c] : f.terms()) {
        mpz_class a = abs(c.num());
        if (a > m) m = a;
    }
    return m;
}

// Substitutes v = xi; coefficients stay integral.
MPoly eval_var(const MPoly& f, Var v, const mpz_class& xi) {
    const int iv = static_cast<int>(v);
    MPoly r;
    std::vector<mpz_class> powers{mpz_class(1)};
    for (const auto& [m, c] : f.terms()) {
        while (powers.size() <= m.e[iv]) powers.push_back(powers.back() * xi);
        Monomial rm = m;
        rm.e[iv] = 0;
        r += MPoly::term(rm, c * Rational(powers[m.e[iv]]));
    }
    return r;
}

// Balanced remainder mod xi applied to each (integer) coefficient.
MPoly balanced_mod(const MPoly& f, const mpz_class& xi) {
    MPoly r;
    for (const auto& [m, c] : f.terms()) {
        mpz_class v = c.num();
        mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), xi.get_mpz_t());
        if (2 * v >= xi) v -= xi;
        r += MPoly::term(m, Rational(v));
    }
    return r;
}

MPoly div_coeffs_exact(const MPoly& f, const mpz_class& xi) {
    MPoly r;
    for (const auto& [m, c] : f.terms()) {
        mpz_class v = c.num();
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), xi.get_mpz_t());
        r += MPoly::term(m, Rational(v));
    }
    return r;
}

// Division that is exact over the integers (integer quotient coefficients).
bool try_divide_z(const MPoly& num, const MPoly& den, MPoly& q) {
    if (!try_divide(num, den, q)) return false;
    for (const auto& [m, c] : q.terms())
        if (c.den() != 1) return false;
    return true;
}

// Evaluation-based gcd on integer-coefficient inputs: map a variable to a
// large integer, recurse, and read the gcd back off the xi-adic digits.
// Returns the gcd over Z including integer content — the content of an inner
// image carries the outer variables' factors, so it must be preserved until
// the top level. Probabilistic choice of xi, so failures are possible;
// callers fall back to the subresultant PRS.
bool heuristic_gcd(const MPoly& f, const MPoly& g, MPoly& out, int depth) {
    // Integer content is split off exactly here; only the primitive part goes
    // through digit reconstruction, whose coefficients the base bounds.
    const mpz_class cf = abs(f.content().num());
    const mpz_class cg = abs(g.content().num());
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
    Var v;
    if (!pick_main_var(f, g, v)) {
        out = MPoly(Rational(c));
        return true;
    }
    if (depth > 5) return false;
    const MPoly fp = integer_primitive(f);
    const MPoly gp = integer_primitive(g);
    mpz_class xi = 2 * std::max(max_abs_coeff(fp), max_abs_coeff(gp)) + 29;
    const int dmax = std::min(fp.degree(v), gp.degree(v));
    for (int attempt = 0; attempt < 6; ++attempt, xi = xi * 73794 / 27011) {
        MPoly fe = eval_var(fp, v, xi);
        MPoly ge = eval_var(gp, v, xi);
        if (fe.is_zero() || ge.is_zero()) continue;
        MPoly hv;
        if (!heuristic_gcd(fe, ge, hv, depth + 1)) continue;
        MPoly h;
        int i = 0;
        bool ok = true;
        while (!hv.is_zero()) {
            if (i > dmax) {
                ok = false;
                break;
            }
            MPoly digit = balanced_mod(hv, xi);
            h += digit * MPoly::variable(v, static_cast<unsigned>(i));
            hv = div_coeffs_exact(hv - digit, xi);
            ++i;
        }
        if (!ok || h.is_zero()) continue;
        h = integer_primitive(h);
        MPoly q;
        if (try_divide_z(fp, h, q) && try_divide_z(gp, h, q)) {
            out = h * MPoly(Rational(c));
            return true;
        }
    }
    return false;
}

} // namespace

MPoly MPoly::gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero() && b.is_zero()) return MPoly();
    MPoly pa = integer_primitive(a);
    MPoly pb = integer_primitive(b);
    if (a.is_zero()) return pb;
    if (b.is_zero()) return pa;
    if (pa.is_constant() || pb.is_constant()) return MPoly(1);
    if (pa == pb) return pa;
    MPoly h;
    if (heuristic_gcd(pa, pb, h, 0)) return integer_primitive(h);
    return integer_primitive(gcd_primitive(pa, pb));
}

Rational MPoly::eval(const Rational& px, const Rational& py, const Rational& pp) const {
    Rational r(0);
    for (const auto& [m, c] : terms_)
        r += c * pp.pow(m.e[0]) * px.pow(m.e[1]) * py.pow(m.e[2]);
    return r;
}

Rational MPoly::eval_xy(const Rational& px, const Rational& py) const {
    if (depends_on(Var::p)) fail(ErrorKind::InvalidVariable, "eval_xy of p-dependent polynomial");
    return eval(px, py, Rational(0));
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        bool printed = false;
        if (!a.is_one() || m.total() == 0) {
            os << a.str();
            printed = true;
        }
        for (Var v : {Var::p, Var::x, Var::y}) {
            unsigned e = m.deg(v);
            if (e == 0) continue;
            if (printed) os << "*";
            os << var_name(v);
            if (e > 1) os << "^" << e;
            printed = true;
        }
    }
    return os.str();
}

} // namespace webconn
