#include "gesolve/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace gesolve {

Json to_json(const Vector& v) {
    Json arr = Json::array();
    for (int i = 0; i < v.size(); ++i) arr.push_back(v[i]);
    return arr;
}

Json to_json(const Face& f) {
    Json arr = Json::array();
    for (int i : f.active) arr.push_back(i + 1);  // 1-based like the file grammar
    return arr;
}

Json to_json(const BanachSolution& s) {
    return Json{{"trivial", s.trivial},
                {"h", to_json(s.h)},
                {"face_active", to_json(s.face)},
                {"normal_certificate", to_json(s.normal_certificate)},
                {"residual", s.residual},
                {"bound_ratio", s.bound_ratio}};
}

Json to_json(const ImplicitSolution& s) {
    return Json{{"trivial", s.trivial},
                {"x", to_json(s.x)},
                {"h", to_json(s.h)},
                {"y_corr", to_json(s.y_corr)},
                {"phi", to_json(s.phi)},
                {"inclusion_residual", s.inclusion_residual},
                {"iterations", s.iterations},
                {"theta_estimate", s.theta_estimate},
                {"relaxation", s.relaxation},
                {"m_ratio", s.m_ratio}};
}

Json to_json(const ScalingReport& r) {
    Json samples = Json::array();
    for (const ScalingSample& s : r.samples) {
        Json row{{"x", to_json(s.x)},     {"norm_x", s.norm_x}, {"norm_f", s.norm_f},
                 {"norm_phi", s.norm_phi}, {"ratio", s.ratio},   {"ok", s.ok}};
        if (!s.ok) row["error"] = s.error;
        samples.push_back(std::move(row));
    }
    return Json{{"samples", samples},
                {"successes", r.successes},
                {"fitted_exponent", r.fitted_exponent},
                {"m_max", r.m_max},
                {"table", scaling_table(r)}};
}

Json to_json(const RegularityReport& r) {
    return Json{{"c_estimate", r.c_estimate},
                {"median_ratio", r.median_ratio},
                {"sample_count", r.sample_count},
                {"valid_pairs", r.valid_pairs},
                {"not_invertible_count", r.not_invertible_count},
                {"degenerate_face_count", r.degenerate_face_count},
                {"worst_pair", Json{{"z1", to_json(r.worst_pair.first)},
                                    {"z2", to_json(r.worst_pair.second)}}},
                {"seed", r.seed},
                {"radius", r.radius}};
}

Json to_json(const DegeneracyProfile& p) {
    Json norms = Json::array();
    for (double v : p.norms) norms.push_back(v);
    return Json{{"p", p.p},
                {"derivative_norms", norms},
                {"completely_degenerate", p.completely_degenerate}};
}

Json to_json(const InverseSolveResult& r) {
    Json points = Json::array();
    for (std::size_t i = 0; i < r.points.size(); ++i) points.push_back(to_json(r.points[i]));
    Json tags = Json::array();
    for (const Face& f : r.face_tags) tags.push_back(to_json(f));
    Json degen = Json::array();
    for (const Face& f : r.degenerate_faces) degen.push_back(to_json(f));
    return Json{{"invertible", r.invertible()},
                {"points", points},
                {"face_tags", tags},
                {"degenerate_faces", degen}};
}

Json to_json(const TangentCertificate& c) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < c.t_grid.size(); ++i)
        rows.push_back(Json{{"t", c.t_grid[i]},
                            {"w_norm", c.w_norms.size() > i ? Json(c.w_norms[i]) : Json()},
                            {"residual",
                             c.per_t_residuals.size() > i ? Json(c.per_t_residuals[i]) : Json()}});
    Json out{{"h_bar", to_json(c.h_bar)},
             {"kernel_ok", c.kernel_ok},
             {"accepted", c.accepted},
             {"w_negligible", c.w_negligible},
             {"loglog_slope", c.loglog_slope},
             {"curve", rows},
             {"premise_c", c.premise_c},
             {"premise_empty_pairs", c.premise_empty_pairs}};
    if (!c.reject_reason.empty()) out["reject_reason"] = c.reject_reason;
    return out;
}

namespace {

void dump_rec(const Json& j, std::ostringstream& out, int indent, int depth) {
    const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
    const std::string pad1(static_cast<std::size_t>(indent) * (depth + 1), ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out << "{}";
                return;
            }
            out << "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out << ",\n";
                first = false;
                out << pad1 << Json(it.key()).dump() << ": ";
                dump_rec(it.value(), out, indent, depth + 1);
            }
            out << "\n" << pad << "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out << "[]";
                return;
            }
            out << "[\n";
            bool first = true;
            for (const auto& el : j) {
                if (!first) out << ",\n";
                first = false;
                out << pad1;
                dump_rec(el, out, indent, depth + 1);
            }
            out << "\n" << pad << "]";
            return;
        }
        case Json::value_t::number_float: {
            double v = j.get<double>();
            if (!std::isfinite(v)) {
                out << "null";
                return;
            }
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            out << buf;
            return;
        }
        default:
            out << j.dump();
            return;
    }
}

}  // namespace

std::string dump_json(const Json& j, int indent) {
    std::ostringstream out;
    dump_rec(j, out, indent, 0);
    return out.str();
}

}  // namespace gesolve
