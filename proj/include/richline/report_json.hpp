#pragma once

#include <richline/construction.hpp>
#include <richline/incidence.hpp>
#include <richline/numberfield.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace richline {

// JSON reports are the machine interface. Exact integers and rationals are
// serialized as decimal strings ("12321", "25/32"): counts scale like N^2
// and overflow both int64 and double long before they overflow desk
// patience.

namespace detail {

inline nlohmann::ordered_json coords_json(const std::vector<Int>& v) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Int& c : v) {
        arr.push_back(to_decimal(c));
    }
    return arr;
}

}  // namespace detail

inline nlohmann::ordered_json validation_report_json(
    const StructureTable& table, const ValidationReport& report) {
    nlohmann::ordered_json j;
    j["n"] = table.dim();
    j["c_lambda"] = to_decimal(c_lambda(table));
    j["checks"] = {{"symmetry", report.symmetry_ok},
                   {"associativity", report.associativity_ok},
                   {"unity", report.unity_ok},
                   {"embedding", report.embedding_ok}};
    j["failures"] = report.failures;
    j["pass"] = report.pass();
    return j;
}

inline nlohmann::ordered_json params_report_json(
    const ConstructionParams& p) {
    const unsigned n = p.dim();
    nlohmann::ordered_json j;
    j["n"] = n;
    j["c_lambda"] = to_decimal(p.c_lambda_value);
    j["N"] = to_decimal(p.N);
    j["r"] = to_decimal(p.r);
    j["h_x"] = to_decimal(p.h_x);
    j["h_y"] = to_decimal(p.h_y);
    j["h_m"] = to_decimal(p.h_m);
    j["h_b"] = to_decimal(p.h_b);
    j["x_cardinality"] = to_decimal(p.x_box().cardinality());
    j["y_cardinality"] = to_decimal(p.y_box().cardinality());
    j["slope_cardinality"] = to_decimal(p.slope_box().cardinality());
    j["intercept_cardinality"] = to_decimal(p.intercept_box().cardinality());
    j["point_count"] = to_decimal(p.grid().point_count());
    j["guaranteed_lines"] = to_decimal(p.guaranteed_lines);
    j["paper_lines"] = to_decimal(p.paper_lines);
    if (p.paper_lines > 0) {
        j["line_ratio"] = to_decimal(make_rat(p.guaranteed_lines, p.paper_lines));
    } else {
        j["line_ratio"] = nullptr;
    }
    j["achieved_richness"] = to_decimal(p.achieved_richness);
    j["richness_met"] = p.achieved_richness >= p.r;
    j["margin"] = to_decimal(p.margin);
    j["degenerate_slopes"] = p.degenerate_slopes;
    return j;
}

inline nlohmann::ordered_json richness_report_json(const RichnessReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["c_lambda"] = to_decimal(r.c_lambda_value);
    j["N"] = to_decimal(r.N);
    j["r"] = to_decimal(r.r);
    j["lines_total"] = to_decimal(r.lines_total);
    j["lines_checked"] = to_decimal(r.lines_checked);
    j["expected_per_line"] = to_decimal(r.expected_per_line);
    j["min_points"] = to_decimal(r.min_points);
    j["max_points"] = to_decimal(r.max_points);
    j["mean_points"] = to_decimal(r.mean_points);
    j["lines_meeting_target"] = to_decimal(r.lines_meeting_target);
    j["achieved_constant"] = to_decimal(r.achieved_constant);
    j["paper_constant"] = to_decimal(r.paper_constant);
    j["sampled"] = r.sampled;
    if (r.sampled) {
        j["seed"] = r.seed;
    }
    return j;
}

inline nlohmann::ordered_json oracle_report_json(const OracleReport& r) {
    nlohmann::ordered_json j;
    j["point_count"] = to_decimal(r.point_count);
    j["oracle_rich_lines"] = to_decimal(r.oracle_rich_lines);
    j["constructed_lines"] = to_decimal(r.constructed_lines);
    j["containment"] = r.containment;
    return j;
}

inline nlohmann::ordered_json richness_error_json(const RichnessError& e) {
    nlohmann::ordered_json j;
    j["error"] = "richness_violation";
    j["message"] = e.what();
    j["line_index"] = to_decimal(e.line_index);
    j["slope"] = detail::coords_json(e.slope);
    j["intercept"] = detail::coords_json(e.intercept);
    j["points_found"] = to_decimal(e.points_found);
    return j;
}

}  // namespace richline
