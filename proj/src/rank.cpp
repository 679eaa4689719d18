#include "webconn/rank.hpp"

#include <map>
#include <random>

namespace webconn {

namespace {

// Multi-indices (a, b) with a+b <= max_order in graded-lex order.
std::vector<std::pair<int, int>> multi_indices(int max_order) {
    std::vector<std::pair<int, int>> out;
    for (int t = 0; t <= max_order; ++t)
        for (int a = t; a >= 0; --a) out.push_back({a, t - a});
    return out;
}

RatVector derive_row(const RatVector& row, const Form1Matrix& gamma, Var var) {
    const size_t n = row.size();
    RatVector out(n);
    for (size_t j = 0; j < n; ++j) {
        RatFunc acc = row[j].derivative(var);
        for (size_t l = 0; l < n; ++l) {
            const Form1& g = gamma.at(l, j);
            acc -= row[l] * (var == Var::x ? g.cx : g.cy);
        }
        out[j] = acc;
    }
    return out;
}

size_t rank_at_point(const RatMatrix& m, const Rational& px, const Rational& py) {
    RatMatrix values(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (const RatFunc& e : m[i]) values[i].push_back(RatFunc(e.eval(px, py)));
    return matrix_rank(std::move(values));
}

} // namespace

RatMatrix rank_matrix(const ConnectionData& conn) {
    if (conn.k_row.empty()) fail(ErrorKind::Dependency, "connection data without curvature row");
    const int d = conn.system.d;
    const auto indices = multi_indices(d - 3);
    std::map<std::pair<int, int>, RatVector> rows;
    rows[{0, 0}] = conn.k_row;
    RatMatrix out;
    for (const auto& [a, b] : indices) {
        if (a != 0 || b != 0) {
            if (b == 0)
                rows[{a, b}] = derive_row(rows.at({a - 1, 0}), conn.gamma, Var::x);
            else
                rows[{a, b}] = derive_row(rows.at({a, b - 1}), conn.gamma, Var::y);
        }
        out.push_back(rows.at({a, b}));
    }
    return out;
}

RankReport web_rank(const WebEquation& web, const ConnectionData& conn) {
    RankReport report;
    report.kml = rank_matrix(conn);
    const size_t pi = web.pi_d();
    report.generic_rank = matrix_rank(report.kml);
    report.web_rank = pi - report.generic_rank;
    if (pi <= 3) {
        // small enough for an independent determinant cross-check
        report.det_is_zero = determinant(report.kml).is_zero();
        if (report.det_is_zero != (report.web_rank >= 1))
            fail(ErrorKind::Internal, "determinant test disagrees with the computed corank");
    } else {
        // exact elimination already decides det = 0 (corank >= 1)
        report.det_is_zero = report.web_rank >= 1;
    }

    // sampling cross-check at random rational points off the poles and the
    // discriminant; deterministic seed
    std::mt19937 rng(20260823);
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 7);
    size_t best = 0;
    for (int draws = 0; draws < 5;) {
        const Rational px(num(rng), den(rng));
        const Rational py(num(rng), den(rng));
        if (!web.discriminant().invertible_at(px, py)) continue;
        bool finite = true;
        for (const auto& row : report.kml)
            for (const RatFunc& e : row) finite = finite && e.finite_at(px, py);
        if (!finite) continue;
        ++draws;
        best = std::max(best, rank_at_point(report.kml, px, py));
    }
    report.sampled_rank = best;
    if (report.sampled_rank > report.generic_rank)
        fail(ErrorKind::Internal, "sampled rank exceeds the symbolic rank");
    return report;
}

RankReport web_rank(const WebEquation& web) { return web_rank(web, connection(web)); }

bool exceptional_5web_predicate(const std::vector<RatFunc>& k_row, const RatFunc& v1) {
    for (const RatFunc& k : k_row)
        if (!k.is_zero()) return false;
    return !v1.is_zero();
}

bool is_exceptional_5web(const WebEquation& web) {
    if (web.d() != 5) fail(ErrorKind::UnsupportedDegree, "exceptionality test is specific to degree 5");
    const ConnectionData conn = connection(web);
    const AssociatedPair pair0 = associated_polynomials(web, 0);
    return exceptional_5web_predicate(conn.k_row, pair0.v(5, 1));
}

} // namespace webconn
