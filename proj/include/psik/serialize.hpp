#pragma once

// JSON / CSV surface.  Uses ordered JSON throughout so identical inputs
// produce byte-identical output.

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "psik/bound_result.hpp"
#include "psik/bounds.hpp"
#include "psik/field.hpp"
#include "psik/psi_oracle.hpp"
#include "psik/tables.hpp"

namespace psik {

using Json = nlohmann::ordered_json;

inline std::string format_double(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    return buf;
}

inline Json to_json(const FieldProfile& p) {
    Json j;
    j["n"] = p.degree;
    if (p.log_disc < 700.0) // exp stays inside double range
        j["disc"] = p.abs_disc();
    else
        j["logdisc"] = p.log_disc;
    j["r1"] = p.real_places;
    j["r2"] = p.imag_places;
    return j;
}

inline FieldProfile profile_from_json(const Json& j) {
    int n = j.at("n").get<int>();
    int r1 = j.at("r1").get<int>();
    int r2 = j.at("r2").get<int>();
    if (j.contains("logdisc"))
        return make_profile_log_disc(n, j.at("logdisc").get<double>(), r1, r2);
    return make_profile(n, j.at("disc").get<double>(), r1, r2);
}

inline Json to_json(const BoundResult& r) {
    Json j;
    j["value"] = r.value;
    j["terms"] = {{"disc", r.disc_term},
                  {"degree", r.degree_term},
                  {"const", r.const_term},
                  {"epsilon", r.epsilon_term}};
    Json params;
    params["x"] = r.x;
    if (!std::isnan(r.T)) params["T"] = r.T;
    if (!std::isnan(r.kappa)) params["kappa"] = r.kappa;
    j["params"] = params;
    return j;
}

inline Json to_json(const VerifyReport& r) {
    Json j;
    j["field"] = r.field;
    j["formula"] = formula_name(r.formula);
    j["x_max"] = r.x_max;
    j["max_ratio"] = r.max_ratio;
    j["argmax_x"] = r.argmax_x;
    j["pass"] = r.pass;
    return j;
}

// RFC-4180-flavored CSV: header row, '.' decimal separator, quoting only
// when a field needs it.
inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

inline std::string csv_line(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_escape(fields[i]);
    }
    out += '\n';
    return out;
}

inline std::string table_rows_csv(const std::vector<TableRow>& rows) {
    std::string out = csv_line({"table", "inputs", "computed", "expected", "delta", "match"});
    for (const auto& r : rows)
        out += csv_line({r.table, r.inputs, r.computed, r.expected,
                         format_double(r.delta, 6), r.match ? "yes" : "no"});
    return out;
}

inline Json table_rows_json(const std::vector<TableRow>& rows) {
    Json arr = Json::array();
    for (const auto& r : rows) {
        Json j;
        j["table"] = r.table;
        j["inputs"] = r.inputs;
        j["computed"] = r.computed;
        j["expected"] = r.expected;
        j["delta"] = r.delta;
        j["match"] = r.match;
        arr.push_back(j);
    }
    Json top;
    top["rows"] = arr;
    return top;
}

inline std::string cmax_results_csv(const std::vector<CmaxResult>& rows) {
    std::string out = csv_line({"n", "disc", "c_max", "x_at_max", "n_points"});
    for (const auto& r : rows)
        out += csv_line({std::to_string(r.degree), format_double(r.disc_used, 10),
                         format_double(r.c_max, 6), std::to_string(r.x_at_max),
                         std::to_string(r.n_points)});
    return out;
}

} // namespace psik
