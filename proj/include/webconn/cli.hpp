#pragma once

#include <optional>
#include <string>
#include <vector>

#include "webconn/extract.hpp"
#include "webconn/rank.hpp"

namespace webconn {

struct WebSpecFile {
    int degree = 0;
    std::optional<std::string> f_text;
    std::optional<std::vector<std::string>> slope_texts;
    BasePoint base{Rational(0), Rational(0)};
};

// `key = value` lines; comments start with #. Keys: degree, F, slopes
// (bracketed, comma-separated), base_point (two rationals).
WebSpecFile parse_spec(const std::string& text);

enum class Command { Classify, Invariants, Connection, Curvature, Rank, TraceCheck, Analyze };

Command parse_command(const std::string& name);

struct Options {
    bool experimental = false;
};

struct Report {
    std::string command;
    int degree = 0;
    std::string input_kind; // "F" or "slopes"
    std::vector<std::string> input_echo;
    std::string base_x, base_y;
    std::vector<std::string> warnings;

    std::optional<std::string> discriminant;
    std::optional<std::string> v_poly;
    std::optional<std::string> p_poly;
    std::optional<std::string> alpha;
    std::optional<bool> is_linear, is_algebraic, linearizable_candidate;
    std::optional<std::vector<std::vector<std::string>>> gamma;
    std::optional<std::vector<std::vector<std::string>>> curvature;
    std::optional<std::vector<std::string>> k_row;
    std::optional<std::vector<std::string>> normal_row; // d=4 only
    std::optional<std::vector<std::vector<std::string>>> kml;
    std::optional<size_t> generic_rank;
    std::optional<size_t> web_rank;
    std::optional<std::string> trace_residual; // slope inputs only
    std::optional<bool> hexagonal;             // slope inputs only
};

Report run(Command cmd, const WebSpecFile& spec, const Options& opt);

std::string serialize_report(const Report& r, bool json);

// 0 success, 1 parse, 2 validation, 3 unsupported degree, 4 internal
int exit_code_for(ErrorKind kind);

std::string form1_str(const Form1& f);
std::string form2_str(const Form2& f);

} // namespace webconn
