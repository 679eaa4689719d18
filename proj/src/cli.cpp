#include "webconn/cli.hpp"

#include <sstream>

#include "json.hpp"
#include "webconn/expr.hpp"

namespace webconn {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

Rational parse_rational_token(const std::string& tok, int line_no) {
    try {
        return Rational::from_string(tok);
    } catch (const WebError&) {
        fail(ErrorKind::Parse, "bad rational '" + tok + "' on line " + std::to_string(line_no));
    }
}

} // namespace

WebSpecFile parse_spec(const std::string& text) {
    WebSpecFile spec;
    bool saw_degree = false;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const size_t hash = raw.find('#');
        std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            fail(ErrorKind::Parse, "expected 'key = value' on line " + std::to_string(line_no));
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "degree") {
            try {
                size_t used = 0;
                spec.degree = std::stoi(value, &used);
                if (used != value.size()) throw std::invalid_argument(value);
            } catch (const std::exception&) {
                fail(ErrorKind::Parse, "bad degree on line " + std::to_string(line_no));
            }
            saw_degree = true;
        } else if (key == "F") {
            if (spec.slope_texts)
                fail(ErrorKind::Ambiguity, "both F and slopes given (line " +
                                               std::to_string(line_no) + ")");
            if (spec.f_text) fail(ErrorKind::Parse, "duplicate F on line " + std::to_string(line_no));
            spec.f_text = value;
        } else if (key == "slopes") {
            if (spec.f_text)
                fail(ErrorKind::Ambiguity, "both F and slopes given (line " +
                                               std::to_string(line_no) + ")");
            if (spec.slope_texts)
                fail(ErrorKind::Parse, "duplicate slopes on line " + std::to_string(line_no));
            if (value.size() < 2 || value.front() != '[' || value.back() != ']')
                fail(ErrorKind::Parse, "slopes must be bracketed on line " + std::to_string(line_no));
            std::vector<std::string> items;
            std::string body = value.substr(1, value.size() - 2);
            size_t start = 0;
            int depth = 0;
            for (size_t i = 0; i <= body.size(); ++i) {
                if (i == body.size() || (body[i] == ',' && depth == 0)) {
                    const std::string item = trim(body.substr(start, i - start));
                    if (item.empty())
                        fail(ErrorKind::Parse, "empty slope entry on line " + std::to_string(line_no));
                    items.push_back(item);
                    start = i + 1;
                } else if (body[i] == '(') {
                    ++depth;
                } else if (body[i] == ')') {
                    --depth;
                }
            }
            spec.slope_texts = std::move(items);
        } else if (key == "base_point") {
            std::istringstream bp(value);
            std::string sx, sy, extra;
            if (!(bp >> sx >> sy) || (bp >> extra))
                fail(ErrorKind::Parse, "base_point needs two rationals on line " +
                                           std::to_string(line_no));
            spec.base = {parse_rational_token(sx, line_no), parse_rational_token(sy, line_no)};
        } else {
            fail(ErrorKind::Parse, "unknown key '" + key + "' on line " + std::to_string(line_no));
        }
    }
    if (!saw_degree) fail(ErrorKind::Parse, "missing degree");
    if (!spec.f_text && !spec.slope_texts) fail(ErrorKind::Parse, "missing F or slopes");
    return spec;
}

Command parse_command(const std::string& name) {
    if (name == "classify") return Command::Classify;
    if (name == "invariants") return Command::Invariants;
    if (name == "connection") return Command::Connection;
    if (name == "curvature") return Command::Curvature;
    if (name == "rank") return Command::Rank;
    if (name == "trace-check") return Command::TraceCheck;
    if (name == "analyze") return Command::Analyze;
    fail(ErrorKind::Parse, "unknown command: " + name);
}

std::string form1_str(const Form1& f) {
    if (f.is_zero()) return "0";
    std::string s;
    if (!f.cx.is_zero()) s = "(" + f.cx.str() + ") dx";
    if (!f.cy.is_zero()) {
        if (!s.empty()) s += " + ";
        s += "(" + f.cy.str() + ") dy";
    }
    return s;
}

std::string form2_str(const Form2& f) {
    if (f.is_zero()) return "0";
    return "(" + f.c.str() + ") dx^dy";
}

namespace {

struct BuiltWeb {
    WebEquation web;
    std::optional<SlopeWeb> slope_web;
};

BuiltWeb build_web(const WebSpecFile& spec, const Options& opt) {
    if (spec.degree < 3) fail(ErrorKind::Degree, "degree must be at least 3");
    if (spec.degree > 6 && !opt.experimental)
        fail(ErrorKind::UnsupportedDegree,
             "degree above 6 needs --experimental");
    if (spec.f_text) {
        const ParsedExpr f = parse_expression(*spec.f_text, true);
        return {web_from_f(spec.degree, f, spec.base), std::nullopt};
    }
    const std::vector<std::string>& texts = *spec.slope_texts;
    if (static_cast<int>(texts.size()) != spec.degree)
        fail(ErrorKind::Dimension, "slope count differs from the declared degree");
    std::vector<RatFunc> slopes;
    for (const std::string& t : texts) slopes.push_back(to_ratfunc(parse_expression(t, false)));
    SlopeWeb sw = from_slopes(std::move(slopes), spec.base);
    WebEquation web = sw.web;
    return {std::move(web), std::move(sw)};
}

std::vector<std::vector<std::string>> form1_matrix_strings(const Form1Matrix& m) {
    std::vector<std::vector<std::string>> out(m.rows);
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j) out[i].push_back(form1_str(m.at(i, j)));
    return out;
}

std::vector<std::vector<std::string>> form2_matrix_strings(const Form2Matrix& m) {
    std::vector<std::vector<std::string>> out(m.rows);
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j) out[i].push_back(form2_str(m.at(i, j)));
    return out;
}

std::vector<std::vector<std::string>> rat_matrix_strings(const RatMatrix& m) {
    std::vector<std::vector<std::string>> out(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (const RatFunc& e : m[i]) out[i].push_back(e.str());
    return out;
}

} // namespace

Report run(Command cmd, const WebSpecFile& spec, const Options& opt) {
    const BuiltWeb built = build_web(spec, opt);
    const WebEquation& web = built.web;

    Report r;
    switch (cmd) {
        case Command::Classify: r.command = "classify"; break;
        case Command::Invariants: r.command = "invariants"; break;
        case Command::Connection: r.command = "connection"; break;
        case Command::Curvature: r.command = "curvature"; break;
        case Command::Rank: r.command = "rank"; break;
        case Command::TraceCheck: r.command = "trace-check"; break;
        case Command::Analyze: r.command = "analyze"; break;
    }
    r.degree = spec.degree;
    if (built.slope_web) {
        r.input_kind = "slopes";
        for (const RatFunc& s : built.slope_web->slopes) r.input_echo.push_back(s.str());
    } else {
        r.input_kind = "F";
        r.input_echo.push_back(web.F().str());
    }
    r.base_x = web.base_point().x.str();
    r.base_y = web.base_point().y.str();
    if (web.base_point_singular())
        r.warnings.push_back("base point lies on the discriminant");

    const bool all = cmd == Command::Analyze;
    r.discriminant = web.discriminant().str();

    if (all || cmd == Command::Classify || cmd == Command::Invariants) {
        const AssociatedPair pair0 = associated_polynomials(web, 0);
        const LinearizationData lin = linearization_polynomial(web, pair0);
        const Classification cls = classify(web);
        r.v_poly = pair0.V.str();
        r.p_poly = lin.P.str();
        r.is_linear = cls.is_linear;
        r.is_algebraic = cls.is_algebraic;
        r.linearizable_candidate = cls.linearizable_candidate;
        if (all || cmd == Command::Invariants)
            r.alpha = form1_str(fundamental_form(web, pair0).alpha);
    }

    if (all || cmd == Command::Connection || cmd == Command::Curvature || cmd == Command::Rank) {
        const ConnectionData conn = connection(web);
        r.gamma = form1_matrix_strings(conn.gamma);
        if (all || cmd == Command::Curvature || cmd == Command::Rank) {
            r.curvature = form2_matrix_strings(conn.K);
            std::vector<std::string> krow;
            for (const RatFunc& k : conn.k_row) krow.push_back(k.str());
            r.k_row = std::move(krow);
            if (web.d() == 4) {
                const std::vector<RatFunc> normal = normal_basis_curvature_4web(
                    web, conn, linearization_polynomial(web));
                std::vector<std::string> ns;
                for (const RatFunc& k : normal) ns.push_back(k.str());
                r.normal_row = std::move(ns);
            }
        }
        if (all || cmd == Command::Rank) {
            const RankReport rank = web_rank(web, conn);
            r.kml = rat_matrix_strings(rank.kml);
            r.generic_rank = rank.generic_rank;
            r.web_rank = rank.web_rank;
        }
    }

    if (cmd == Command::TraceCheck || (all && built.slope_web)) {
        if (!built.slope_web)
            fail(ErrorKind::SlopeRequired, "trace check needs a slope presentation");
        const ExtractionReport tr = trace_formula_check(*built.slope_web);
        r.trace_residual = form2_str(tr.residual);
        r.hexagonal = is_hexagonal(*built.slope_web);
    }
    return r;
}

namespace {

void text_matrix(std::ostream& out, const std::string& name,
                 const std::vector<std::vector<std::string>>& m) {
    out << name << ":\n";
    for (const auto& row : m) {
        out << " ";
        for (size_t j = 0; j < row.size(); ++j) out << " [" << row[j] << "]";
        out << "\n";
    }
}

} // namespace

std::string serialize_report(const Report& r, bool json) {
    if (json) {
        nlohmann::ordered_json j;
        j["command"] = r.command;
        j["degree"] = r.degree;
        j["input"] = {{"kind", r.input_kind}, {"values", r.input_echo}};
        j["base_point"] = {r.base_x, r.base_y};
        j["warnings"] = r.warnings;
        if (r.discriminant) j["discriminant"] = *r.discriminant;
        if (r.v_poly) j["V"] = *r.v_poly;
        if (r.p_poly) j["P"] = *r.p_poly;
        if (r.alpha) j["alpha"] = *r.alpha;
        if (r.is_linear) {
            j["classification"] = {{"linear", *r.is_linear},
                                   {"algebraic", *r.is_algebraic},
                                   {"linearizable_candidate", *r.linearizable_candidate}};
        }
        if (r.gamma) j["gamma"] = *r.gamma;
        if (r.curvature) j["K"] = *r.curvature;
        if (r.k_row) j["k_row"] = *r.k_row;
        if (r.normal_row) j["normal_row"] = *r.normal_row;
        if (r.kml) j["kml"] = *r.kml;
        if (r.generic_rank) j["generic_rank"] = *r.generic_rank;
        if (r.web_rank) j["web_rank"] = *r.web_rank;
        if (r.trace_residual) j["trace_residual"] = *r.trace_residual;
        if (r.hexagonal) j["hexagonal"] = *r.hexagonal;
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "command: " << r.command << "\n";
    out << "degree: " << r.degree << "\n";
    out << "input (" << r.input_kind << "):";
    for (const std::string& s : r.input_echo) out << " " << s << ";";
    out << "\n";
    out << "base_point: " << r.base_x << " " << r.base_y << "\n";
    for (const std::string& w : r.warnings) out << "warning: " << w << "\n";
    if (r.discriminant) out << "discriminant: " << *r.discriminant << "\n";
    if (r.v_poly) out << "V: " << *r.v_poly << "\n";
    if (r.p_poly) out << "P: " << *r.p_poly << "\n";
    if (r.alpha) out << "alpha: " << *r.alpha << "\n";
    if (r.is_linear) {
        out << "linear: " << (*r.is_linear ? "yes" : "no") << "\n";
        out << "algebraic: " << (*r.is_algebraic ? "yes" : "no") << "\n";
        out << "linearizable_candidate: " << (*r.linearizable_candidate ? "yes" : "no") << "\n";
    }
    if (r.gamma) text_matrix(out, "gamma", *r.gamma);
    if (r.curvature) text_matrix(out, "K", *r.curvature);
    if (r.k_row) {
        out << "k_row:";
        for (const std::string& k : *r.k_row) out << " [" << k << "]";
        out << "\n";
    }
    if (r.normal_row) {
        out << "normal_row:";
        for (const std::string& k : *r.normal_row) out << " [" << k << "]";
        out << "\n";
    }
    if (r.kml) text_matrix(out, "kml", *r.kml);
    if (r.generic_rank) out << "generic_rank: " << *r.generic_rank << "\n";
    if (r.web_rank) out << "web_rank: " << *r.web_rank << "\n";
    if (r.trace_residual) out << "trace_residual: " << *r.trace_residual << "\n";
    if (r.hexagonal) out << "hexagonal: " << (*r.hexagonal ? "yes" : "no") << "\n";
    return out.str();
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse: return 1;
        case ErrorKind::UnsupportedDegree: return 3;
        case ErrorKind::Internal:
        case ErrorKind::ProlongationFailure:
        case ErrorKind::AdaptedBasisViolation: return 4;
        default: return 2;
    }
}

} // namespace webconn
