#pragma once

#include "webconn/conn.hpp"

namespace webconn {

struct RankReport {
    RatMatrix kml;             // pi_d x pi_d
    size_t generic_rank = 0;   // rank over the rational-function field
    size_t web_rank = 0;       // pi_d - generic_rank
    bool det_is_zero = false;
    size_t sampled_rank = 0;   // max rank over random rational points (cross-check)
};

// Rows indexed by multi-indices dx^a dy^b, a+b <= d-3, in graded-lex order
// (id; x; y; x^2; xy; y^2; ...), derived by
// row_{a+1,b} = dx(row_{a,b}) - row_{a,b} gamma_x (and the y analogue),
// starting from the curvature row k_1..k_{pi_d}.
RatMatrix rank_matrix(const ConnectionData& conn);

RankReport web_rank(const WebEquation& web, const ConnectionData& conn);
RankReport web_rank(const WebEquation& web);

// All six first-row curvature entries vanish while v_1 does not.
bool is_exceptional_5web(const WebEquation& web);
bool exceptional_5web_predicate(const std::vector<RatFunc>& k_row, const RatFunc& v1);

} // namespace webconn
