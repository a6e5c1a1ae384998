#include "isospec/serialize.hpp"

#include <nlohmann/json.hpp>

#include <fstream>

namespace isospec {

using json = nlohmann::ordered_json;

namespace {

json matrix_rows(const Mat& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            row.push_back(m(i, k));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::string to_json(const SkewPencil& j) {
    json out;
    out["m"] = j.dim();
    out["r"] = j.size();
    json comps = json::array();
    for (int i = 0; i < j.size(); ++i) {
        json flat = json::array();
        const Mat& e = j[i].entries();
        for (Eigen::Index row = 0; row < e.rows(); ++row) {
            for (Eigen::Index col = 0; col < e.cols(); ++col) {
                flat.push_back(e(row, col));
            }
        }
        comps.push_back(std::move(flat));
    }
    out["components"] = std::move(comps);
    return out.dump(2);
}

SkewPencil pencil_from_json(const std::string& text) {
    json in;
    try {
        in = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("invalid pencil JSON: ") + e.what());
    }
    if (!in.is_object() || !in.contains("m") || !in.contains("r") || !in.contains("components")) {
        throw DomainError("pencil JSON must carry fields m, r, components");
    }
    const int m = in["m"].get<int>();
    const int r = in["r"].get<int>();
    if (m < 1 || r < 1) {
        throw DomainError("pencil JSON has nonpositive m or r");
    }
    const auto& comps = in["components"];
    if (!comps.is_array() || static_cast<int>(comps.size()) != r) {
        throw DomainError("pencil JSON components count does not match r");
    }
    std::vector<SkewMatrix> components;
    components.reserve(static_cast<std::size_t>(r));
    for (const auto& flat : comps) {
        if (!flat.is_array() || static_cast<int>(flat.size()) != m * m) {
            throw DomainError("pencil JSON component must hold m*m row-major entries");
        }
        Mat e(m, m);
        int idx = 0;
        for (int row = 0; row < m; ++row) {
            for (int col = 0; col < m; ++col) {
                e(row, col) = flat[static_cast<std::size_t>(idx++)].get<double>();
            }
        }
        components.emplace_back(e); // skewness validated here
    }
    return SkewPencil(std::move(components));
}

SkewPencil pencil_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw DomainError("cannot open pencil file '" + path + "'");
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return pencil_from_json(text);
}

std::string to_json(const InvariantTable& table) {
    json out;
    out["m"] = table.m;
    json entries = json::array();
    for (const auto& e : table.entries) {
        json item;
        item["a"] = e.a;
        item["b"] = e.b;
        item["value"] = e.value;
        entries.push_back(std::move(item));
    }
    out["entries"] = std::move(entries);
    return out.dump(2);
}

std::string to_json(const CurvatureReport& report) {
    json out;
    out["scal_g"] = report.scal_g;
    out["ric_v_eigs"] = report.ric_v_eigs;
    json crit = json::array();
    for (const auto& cv : report.critical_values) {
        json item;
        item["value"] = cv.value;
        item["multiplicity"] = cv.multiplicity;
        crit.push_back(std::move(item));
    }
    out["critical_values"] = std::move(crit);
    out["ric_v_norm_sq"] = report.ric_v_norm_sq;
    out["ric_v"] = matrix_rows(report.ric_v);
    out["ric_z"] = matrix_rows(report.ric_z);
    return out.dump(2);
}

std::string to_json(const HeatComparison& cmp, const std::optional<QuadratureResult>& quadrature) {
    json out;
    out["m"] = cmp.m;
    out["delta_ric_norm_sq"] = cmp.delta_ric_norm_sq;
    out["delta_c_s"] = cmp.delta_c_s;
    out["delta_c_ric"] = cmp.delta_c_ric;
    out["delta_c_r"] = cmp.delta_c_r;
    out["delta_a2_1_combination"] = cmp.delta_a2_1_combination;
    out["distinguisher_factor"] = cmp.distinguisher_factor;
    out["verdict"] = to_string(cmp.verdict);
    if (quadrature) {
        json q;
        q["value"] = quadrature->value;
        q["std_error"] = quadrature->std_error;
        q["samples"] = quadrature->samples;
        q["seed"] = quadrature->seed;
        out["quadrature"] = std::move(q);
    }
    return out.dump(2);
}

} // namespace isospec
