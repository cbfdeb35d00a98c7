#include "planepart/json_io.hpp"

#include <stdexcept>

namespace planepart {

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}

}  // namespace

Json to_json(const Partition& p) { return Json{{"parts", p.parts()}}; }

Partition partition_from_json(const Json& j) {
    require(j.is_object() && j.contains("parts") && j["parts"].is_array(),
            "partition JSON must be {\"parts\": [int,...]}");
    return Partition(j["parts"].get<std::vector<int>>());
}

Json to_json(const PlanePartition& pp) { return Json{{"rows", pp.rows()}}; }

PlanePartition plane_partition_from_json(const Json& j) {
    require(j.is_object() && j.contains("rows") && j["rows"].is_array(),
            "plane partition JSON must be {\"rows\": [[int,...],...]}");
    return PlanePartition(j["rows"].get<std::vector<std::vector<int>>>());
}

Json to_json(const ComponentAnalysis& analysis) {
    Json components = Json::array();
    for (const auto& comp : analysis.components) {
        Json cells = Json::array();
        for (const auto& [r, c] : comp.cells) cells.push_back({r, c});
        Json borders = Json::array();
        for (const auto& border : comp.border_components) {
            Json bcells = Json::array();
            for (const auto& [r, c] : border.cells) bcells.push_back({r, c});
            borders.push_back({{"level", border.level}, {"cells", bcells}});
        }
        components.push_back(
            {{"value", comp.value}, {"cells", cells}, {"border_components", borders}});
    }
    return Json{{"k", analysis.k}, {"components", components}};
}

Json to_json(const MarkedValue& v) { return Json{{"v", v.magnitude}, {"m", v.marked}}; }

MarkedValue marked_value_from_json(const Json& j) {
    require(j.is_object() && j.contains("v") && j["v"].is_number_integer(),
            "marked value JSON must be {\"v\": int, \"m\": bool}");
    return {j["v"].get<int>(), j.value("m", false)};
}

Json to_json(const MarkedShiftedTableau& t) {
    Json rows = Json::array();
    for (const auto& row : t.rows()) {
        Json jr = Json::array();
        for (const MarkedValue& v : row) jr.push_back(to_json(v));
        rows.push_back(jr);
    }
    return Json{{"shape", t.shape().parts()}, {"rows", rows}};
}

Json to_json(const ShiftedTableau& t) {
    Json rows = Json::array();
    for (const auto& row : t.rows()) {
        Json jr = Json::array();
        for (int v : row) jr.push_back(to_json(unmarked(v)));
        rows.push_back(jr);
    }
    return Json{{"shape", t.shape().parts()}, {"rows", rows}};
}

MarkedShiftedTableau marked_tableau_from_json(const Json& j) {
    require(j.is_object() && j.contains("rows") && j["rows"].is_array(),
            "tableau JSON must be {\"shape\": [...], \"rows\": [[{\"v\",\"m\"},...],...]}");
    std::vector<std::vector<MarkedValue>> rows;
    for (const Json& jr : j["rows"]) {
        require(jr.is_array(), "tableau rows must be arrays");
        rows.emplace_back();
        for (const Json& jv : jr) rows.back().push_back(marked_value_from_json(jv));
    }
    MarkedShiftedTableau t{std::move(rows)};
    if (j.contains("shape")) {
        require(Partition(j["shape"].get<std::vector<int>>()) == t.shape(),
                "tableau shape does not match its rows");
    }
    return t;
}

ShiftedTableau tableau_from_json(const Json& j) {
    const MarkedShiftedTableau t = marked_tableau_from_json(j);
    for (const auto& row : t.rows())
        for (const MarkedValue& v : row)
            require(!v.marked, "expected an unmarked tableau");
    return t.unmark();
}

Json to_json(const MarkedMatrix& m) {
    Json rows = Json::array();
    for (const auto& row : m.entries()) {
        Json jr = Json::array();
        for (const MarkedValue& v : row) {
            if (v.is_zero())
                jr.push_back(0);
            else
                jr.push_back(to_json(v));
        }
        rows.push_back(jr);
    }
    return Json{{"rows", rows}};
}

MarkedMatrix matrix_from_json(const Json& j) {
    require(j.is_object() && j.contains("rows") && j["rows"].is_array(),
            "matrix JSON must be {\"rows\": [[0|{\"v\",\"m\"},...],...]}");
    std::vector<std::vector<MarkedValue>> rows;
    for (const Json& jr : j["rows"]) {
        require(jr.is_array(), "matrix rows must be arrays");
        rows.emplace_back();
        for (const Json& jv : jr) {
            if (jv.is_number_integer() && jv.get<int>() == 0)
                rows.back().push_back({0, false});
            else
                rows.back().push_back(marked_value_from_json(jv));
        }
    }
    return MarkedMatrix(std::move(rows));
}

Json to_json(const Polynomial& p, const std::string& var) {
    Json coeffs = Json::array();
    for (const BigInt& c : p.coeffs()) coeffs.push_back(c.str());
    return Json{{"var", var}, {"coeffs", coeffs}};
}

Json to_json(const QtSeries& s) {
    Json terms = Json::array();
    for (const auto& [deg, c] : s.terms())
        terms.push_back({{"q", deg.first}, {"t", deg.second}, {"c", c.str()}});
    return Json{{"trunc", s.trunc()}, {"terms", terms}};
}

Json to_json(const TruncatedSeries<Polynomial>& s, const std::string& var) {
    Json coeffs = Json::array();
    for (int d = 0; d <= s.trunc(); ++d) coeffs.push_back(to_json(s.coeff(d), var));
    return Json{{"var", "s"}, {"trunc", s.trunc()}, {"coeffs", coeffs}};
}

Json to_json(const TruncatedSeries<QtSeries>& s) {
    Json coeffs = Json::array();
    for (int d = 0; d <= s.trunc(); ++d) coeffs.push_back(to_json(s.coeff(d)));
    return Json{{"var", "s"}, {"trunc", s.trunc()}, {"coeffs", coeffs}};
}

Json to_json(const VerificationReport& report) {
    Json degrees = Json::array();
    for (const auto& d : report.degrees) {
        Json jd{{"degree", d.degree}, {"match", d.match}};
        if (!d.match) {
            jd["lhs"] = d.lhs;
            jd["rhs"] = d.rhs;
        }
        degrees.push_back(jd);
    }
    Json out{{"identity", report.identity}, {"rows", report.rows},   {"cols", report.cols},
             {"smax", report.smax},         {"ok", report.ok()},     {"degrees", degrees},
             {"duration_ms", report.duration_ms}};
    if (report.qtmax)
        out["qtmax"] = *report.qtmax;
    else
        out["qtmax"] = nullptr;
    return out;
}

}  // namespace planepart
