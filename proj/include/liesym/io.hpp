#pragma once

#include <cstdio>
#include <ostream>
#include <string>

#include <json.hpp>

#include "liesym/classification.hpp"
#include "liesym/geodesics.hpp"

// JSON and CSV interfaces: algebra input records, classification verdict
// records (JSON lines), and geodesic sample export.

namespace liesym {

using json = nlohmann::json;

// Parse an algebra record. Two forms are accepted:
//   { "constants": [[i,j,k,value], ...], "metric": [[...],[...],[...]] }
// with 1-based indices i,j,k, and the named-catalog shortcut
//   { "group": "R3"|"E0tilde2"|"SU2"|"GI"|"G0"|"GD", "D": real, "metric": ... }.
// The metric defaults to the identity when omitted.
inline MetricLieAlgebra algebra_from_json(const json& j) {
    MetricLieAlgebra mla;
    if (j.contains("group")) {
        const std::string name = j.at("group").get<std::string>();
        const double dpar = j.value("D", 0.0);
        if (name == "R3" || name == "Abelian")
            mla.st = catalog::r3();
        else if (name == "E0tilde2")
            mla.st = catalog::e0tilde2();
        else if (name == "SU2")
            mla.st = catalog::su2();
        else if (name == "GI")
            mla.st = catalog::g_i();
        else if (name == "G0")
            mla.st = catalog::g0();
        else if (name == "GD")
            mla.st = catalog::g_d(dpar);
        else
            throw ParamOutOfRange("unknown group name: " + name);
    } else if (j.contains("constants")) {
        for (const auto& row : j.at("constants")) {
            if (!row.is_array() || row.size() != 4)
                throw ParamOutOfRange("constants rows must be [i, j, k, value]");
            const int i = row[0].get<int>(), jj = row[1].get<int>(), k = row[2].get<int>();
            const double value = row[3].get<double>();
            if (i < 1 || i > 3 || jj < 1 || jj > 3 || k < 1 || k > 3 || i == jj)
                throw ParamOutOfRange("constants indices must be 1..3 with i != j");
            if (i < jj)
                mla.st.set(i - 1, jj - 1, k - 1, value);
            else
                mla.st.set(jj - 1, i - 1, k - 1, -value);
        }
    } else {
        throw ParamOutOfRange("algebra record needs either \"group\" or \"constants\"");
    }

    if (j.contains("metric")) {
        const auto& m = j.at("metric");
        if (!m.is_array() || m.size() != 3) throw ParamOutOfRange("metric must be a 3x3 array");
        Mat3 g;
        for (int r = 0; r < 3; ++r) {
            if (!m[r].is_array() || m[r].size() != 3)
                throw ParamOutOfRange("metric must be a 3x3 array");
            for (int c = 0; c < 3; ++c) g(r, c) = m[r][c].get<double>();
        }
        mla.g = MetricMatrix(g);
    }
    return mla;
}

inline json mat3_to_json(const Mat3& m) {
    json rows = json::array();
    for (int i = 0; i < 3; ++i) {
        json row = json::array();
        for (int j = 0; j < 3; ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

// One classification record, serialized as a single JSON object (a JSON line).
inline json verdict_to_json(const ClassificationVerdict& v, const std::string& group,
                            const json& params) {
    json out;
    out["group"] = group;
    out["params"] = params;
    out["locally_symmetric"] = v.locally_symmetric;
    out["residual"] = v.nabla_r_residual;
    out["kind"] = v.kind == FrameKind::Unimodular ? "unimodular" : "nonunimodular";
    json constants = json::array();
    const int n = v.kind == FrameKind::Unimodular ? 3 : 4;
    for (int i = 0; i < n; ++i) constants.push_back(v.milnor_constants[i]);
    out["milnor_constants"] = constants;
    out["family"] = to_string(v.family.family);
    if (v.family.family == AlgebraFamily::GD) out["family_D"] = v.family.d;
    json residuals = json::array();
    for (double r : v.residuals.values) residuals.push_back(r);
    out["system_residuals"] = residuals;
    if (v.witness_p) {
        out["witness_P"] = mat3_to_json(*v.witness_p);
        out["witness_defect"] = v.witness_defect;
    }
    return out;
}

// Geodesic sample export: CSV columns t,x,y,s,alpha1,alpha2,alpha3 at fixed
// precision 1e-12.
inline void write_geodesic_csv(std::ostream& os, const GeodesicPath& path) {
    os << "t,x,y,s,alpha1,alpha2,alpha3\n";
    char buf[224];
    for (const auto& sample : path.samples) {
        std::snprintf(buf, sizeof(buf), "%.12e,%.12e,%.12e,%.12e,%.12e,%.12e,%.12e\n", sample.t,
                      sample.point.x, sample.point.y, sample.point.s, sample.alpha.v1,
                      sample.alpha.v2, sample.alpha.v3);
        os << buf;
    }
}

// Same columns plus the per-sample max deviation from the closed form.
// Returns the max deviation over the path.
inline double write_geodesic_csv(std::ostream& os, double nu, const AlgebraVector& v,
                                 const GeodesicPath& path) {
    os << "t,x,y,s,alpha1,alpha2,alpha3,deviation\n";
    char buf[256];
    double worst = 0.0;
    for (const auto& sample : path.samples) {
        const CoverPoint cf = closed_geodesic(nu, v, sample.t);
        const double dev = std::max({std::abs(sample.point.x - cf.x),
                                     std::abs(sample.point.y - cf.y),
                                     std::abs(sample.point.s - cf.s)});
        worst = std::max(worst, dev);
        std::snprintf(buf, sizeof(buf),
                      "%.12e,%.12e,%.12e,%.12e,%.12e,%.12e,%.12e,%.12e\n", sample.t,
                      sample.point.x, sample.point.y, sample.point.s, sample.alpha.v1,
                      sample.alpha.v2, sample.alpha.v3, dev);
        os << buf;
    }
    return worst;
}

} // namespace liesym
