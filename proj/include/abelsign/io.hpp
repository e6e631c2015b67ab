// JSON schemas for every CLI surface. Exact scalars are always emitted in
// their textual form ("p/q" or "p/q+r/s*sqrt(d)"), never as floats.
#pragma once

#include "abelsign/dynamics.hpp"
#include "abelsign/oracle.hpp"
#include "abelsign/table1.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace abelsign {

using Json = nlohmann::ordered_json;

inline Json params_to_json(const Params& p) {
    Json j;
    for (int i = 0; i < 6; ++i)
        j["a" + std::to_string(i + 1)] = p.a[static_cast<std::size_t>(i)].str();
    j["d"] = p.radicand();
    return j;
}

inline Params params_from_json(const Json& j) {
    std::array<QNum, 6> a;
    for (int i = 0; i < 6; ++i) {
        const std::string key = "a" + std::to_string(i + 1);
        if (!j.contains(key)) throw std::invalid_argument("Params JSON: missing " + key);
        if (!j.at(key).is_string())
            throw std::invalid_argument("Params JSON: " + key + " must be an exact string");
        a[static_cast<std::size_t>(i)] = QNum::parse(j.at(key).get<std::string>());
    }
    Params p(a[0], a[1], a[2], a[3], a[4], a[5]);
    if (j.contains("d")) {
        const std::int64_t d = j.at("d").get<std::int64_t>();
        const std::int64_t actual = p.radicand();
        if (actual != 1 && d != actual)
            throw std::invalid_argument("Params JSON: d field does not match coordinates");
        if (!is_squarefree_radicand(d))
            throw std::invalid_argument("Params JSON: d must be a square-free positive integer");
    }
    return p;
}

inline Params params_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json j;
    in >> j;
    return params_from_json(j);
}

inline Json poly_to_json(const UPoly& f) {
    Json arr = Json::array();
    for (const auto& c : f.coeffs()) arr.push_back(c.str());
    return arr;
}

inline Json bundle_to_json(const InvariantBundle& b) {
    Json j;
    j["degrees"] = {b.deg_p1, b.deg_p3};
    j["R1"] = b.R1.str();
    j["R2"] = b.R2.str();
    const auto put = [&j](const char* name, const std::optional<QNum>& v) {
        if (v)
            j[name] = v->str();
        else
            j[name] = nullptr;
    };
    put("D1", b.D1);
    put("D3", b.D3);
    put("D1p", b.D1p);
    put("D3p", b.D3p);
    put("R113", b.R113);
    put("R133", b.R133);
    put("Rbar113", b.Rbar113);
    put("Rbar133", b.Rbar133);
    j["r1"] = b.r1 ? poly_to_json(*b.r1) : Json(nullptr);
    j["r3"] = b.r3 ? poly_to_json(*b.r3) : Json(nullptr);
    j["res_p1p3"] = b.res_p1p3_generic.str();
    j["res_equals_R1_R2"] = b.res_factorization_ok;
    j["undefined"] = Json::object();
    for (const auto& [k, v] : b.undefined_reasons) j["undefined"][k] = v;
    j["degenerate"] = b.degenerate_notes;
    return j;
}

inline Json verdict_to_json(const Params& p, const CaseVerdict& v) {
    Json j;
    j["point"] = params_to_json(p);
    Json cases = Json::array();
    for (auto c : v.matched) cases.push_back(to_string(c));
    j["matched_cases"] = cases;
    j["conclusion"] = to_string(v.conclusion);
    j["witnesses"] = bundle_to_json(v.witnesses);
    return j;
}

inline Json oracle_to_json(const OracleVerdict& v) {
    Json j;
    j["definite"] = v.definite;
    j["reason"] = to_string(v.reason);
    j["odd_part_p1"] = poly_to_json(v.odd1);
    j["odd_part_p3"] = poly_to_json(v.odd3);
    j["odd_gcd"] = poly_to_json(v.common);
    j["real_roots"] = {{"odd_p1", v.roots1}, {"odd_p3", v.roots3}, {"common", v.roots_common}};
    return j;
}

inline Json scan_to_json(const ScanReport& s) {
    Json j;
    j["result"] = to_string(s.kind);
    j["grid"] = s.grid;
    j["min"] = s.min_value;
    j["max"] = s.max_value;
    j["scale"] = s.scale;
    return j;
}

inline Json table1_row_to_json(const Table1Row& r) {
    Json j;
    j["case"] = to_string(r.case_label);
    j["point"] = params_to_json(r.point);
    j["expected_cp"] = r.expected_cp ? Json(*r.expected_cp) : Json("*");
    j["membership"] = r.membership;
    j["member"] = r.member;
    Json ineq = Json::array();
    for (const auto& [name, ok] : r.inequalities) ineq.push_back({{"condition", name}, {"holds", ok}});
    j["inequalities"] = ineq;
    j["inequalities_ok"] = r.inequalities_ok;
    j["computed_rank"] = r.computed_rank ? Json(*r.computed_rank) : Json(nullptr);
    j["rank_matches_cp"] = r.rank_matches;
    j["oracle_definite"] = r.oracle_definite;
    j["discrepancy"] = r.discrepancy;
    j["documented_discrepancy"] = r.documented;
    if (r.case_label == CaseLabel::c3b) j["point_satisfies_case_3a"] = r.row3b_point_matches_3a;
    return j;
}

inline Json report_to_json(const ReturnMapReport& r) {
    Json j;
    Json fps = Json::array();
    for (const auto& fp : r.fixed_points)
        fps.push_back({{"rho0", fp.rho0},
                       {"residual", fp.residual},
                       {"polar_valid", fp.polar_valid},
                       {"min_polar_margin", fp.min_polar_margin}});
    j["fixed_points"] = fps;
    j["center_detected"] = r.center_detected;
    Json esc = Json::array();
    for (const auto& e : r.escapes)
        esc.push_back({{"rho0", e.rho0}, {"escape_theta", e.escape_theta}});
    j["escapes"] = esc;
    j["grid"] = {{"rho_max", r.rho_max}, {"n", r.grid}};
    j["integrator"] = {{"method", r.integrator}, {"tolerance", r.tolerance}};
    return j;
}

}  // namespace abelsign
