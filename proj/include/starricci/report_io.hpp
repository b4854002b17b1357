#pragma once

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "starricci/models.hpp"
#include "starricci/parallelism.hpp"
#include "starricci/scan.hpp"

/// Stable serialization of reports and scans. Rendering is hand-rolled so
/// that identical inputs produce byte-identical JSON with every number
/// printed to 12 significant digits; parsing goes through nlohmann::json.
namespace starricci {

inline constexpr int kJsonSchemaVersion = 1;

/// 12 significant digits, "-0" normalized to "0".
inline std::string fmt_num(double x) {
    if (x == 0.0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace detail {

inline void append_condition(std::string& out, const char* name, bool holds, double residual,
                             const std::optional<double>& L = std::nullopt) {
    out += '"';
    out += name;
    out += "\":{\"holds\":";
    out += holds ? "true" : "false";
    out += ",\"residual\":";
    out += fmt_num(residual);
    if (L) {
        out += ",\"L\":";
        out += fmt_num(*L);
    }
    out += '}';
}

inline void append_report_fields(std::string& out, const ConditionReport& r) {
    append_condition(out, "vanishing", r.vanishing.holds, r.vanishing.residual);
    out += ',';
    append_condition(out, "semi_parallel", r.semi_parallel.holds, r.semi_parallel.residual);
    out += ',';
    append_condition(out, "pseudo_parallel", r.pseudo_parallel.holds, r.pseudo_parallel.residual,
                     r.pseudo_parallel.L);
    out += ',';
    append_condition(out, "xi_parallel", r.xi_parallel.holds, r.xi_parallel.residual);
    if (r.branch) {
        out += ",\"branch\":\"";
        out += branch_id(*r.branch);
        out += '"';
    }
}

inline void append_model_fields(std::string& out, const HopfModel& m) {
    out += "\"model\":{\"space\":\"" + space_id(m.space) + "\",\"kind\":\"" + kind_id(m.kind) +
           '"';
    if (m.radius) out += ",\"radius\":" + fmt_num(*m.radius);
    out += ",\"alpha\":" + fmt_num(m.alpha) + ",\"lambda\":" + fmt_num(m.lambda) +
           ",\"nu\":" + fmt_num(m.nu);
    if (m.xi_d_lambda != 0.0 || m.xi_d_nu != 0.0)
        out += ",\"xi_d_lambda\":" + fmt_num(m.xi_d_lambda) +
               ",\"xi_d_nu\":" + fmt_num(m.xi_d_nu);
    out += '}';
}

}  // namespace detail

/// Render a ConditionReport (optionally with the model it evaluates) as a
/// single-line JSON object with fixed field order.
inline std::string render_report(const ConditionReport& r,
                                 const std::optional<HopfModel>& model = std::nullopt) {
    std::string out = "{\"schema\":";
    out += std::to_string(kJsonSchemaVersion);
    if (model) {
        out += ',';
        detail::append_model_fields(out, *model);
    }
    out += ',';
    detail::append_report_fields(out, r);
    out += '}';
    return out;
}

inline std::string render_scan(const ScanResult& s) {
    std::string out = "{\"schema\":";
    out += std::to_string(kJsonSchemaVersion);
    out += ",\"space\":\"" + s.space + "\",\"kind\":\"" + s.kind + "\"";
    out += ",\"start\":" + fmt_num(s.r_start) + ",\"stop\":" + fmt_num(s.r_stop);
    out += ",\"count\":" + std::to_string(s.count) + ",\"epsilon\":" + fmt_num(s.epsilon);
    out += ",\"rows\":[";
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
        if (i) out += ',';
        out += "{\"radius\":" + fmt_num(s.rows[i].radius) + ',';
        detail::append_report_fields(out, s.rows[i].report);
        out += '}';
    }
    out += "],\"roots\":[";
    for (std::size_t i = 0; i < s.roots.size(); ++i) {
        if (i) out += ',';
        out += "{\"condition\":\"" + s.roots[i].condition + "\",\"radius\":" +
               fmt_num(s.roots[i].radius) + ",\"residual\":" + fmt_num(s.roots[i].residual) + '}';
    }
    out += "]}";
    return out;
}

/// Reconstruct a ConditionReport from its JSON rendering. Unknown sibling
/// keys (schema, model) are ignored. Throws std::invalid_argument on
/// malformed documents.
inline ConditionReport parse_report(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("bad report JSON: ") + e.what());
    }
    auto condition = [&](const char* name) {
        const auto& c = j.at(name);
        return ConditionStatus{c.at("holds").get<bool>(), c.at("residual").get<double>()};
    };
    ConditionReport r;
    r.vanishing = condition("vanishing");
    r.semi_parallel = condition("semi_parallel");
    r.xi_parallel = condition("xi_parallel");
    const auto& p = j.at("pseudo_parallel");
    r.pseudo_parallel.holds = p.at("holds").get<bool>();
    r.pseudo_parallel.residual = p.at("residual").get<double>();
    if (p.contains("L")) {
        r.pseudo_parallel.L = p.at("L").get<double>();
        r.pseudo_parallel.nonzero = std::fabs(*r.pseudo_parallel.L) > kConditionTol;
    } else {
        r.pseudo_parallel.degenerate = r.pseudo_parallel.holds;
    }
    if (j.contains("branch")) {
        const std::string b = j.at("branch").get<std::string>();
        for (HopfBranch cand : {HopfBranch::TypeA, HopfBranch::AxiZero, HopfBranch::XiConstant,
                                HopfBranch::Generic})
            if (b == branch_id(cand)) r.branch = cand;
    }
    return r;
}

/// Equality at serialization precision: identical flags and identical
/// 12-significant-digit renderings of every number.
inline bool reports_equivalent(const ConditionReport& a, const ConditionReport& b) {
    auto same = [](double x, double y) { return fmt_num(x) == fmt_num(y); };
    auto same_opt = [&](const std::optional<double>& x, const std::optional<double>& y) {
        if (x.has_value() != y.has_value()) return false;
        return !x || same(*x, *y);
    };
    return a.vanishing.holds == b.vanishing.holds &&
           same(a.vanishing.residual, b.vanishing.residual) &&
           a.semi_parallel.holds == b.semi_parallel.holds &&
           same(a.semi_parallel.residual, b.semi_parallel.residual) &&
           a.pseudo_parallel.holds == b.pseudo_parallel.holds &&
           same(a.pseudo_parallel.residual, b.pseudo_parallel.residual) &&
           same_opt(a.pseudo_parallel.L, b.pseudo_parallel.L) &&
           a.xi_parallel.holds == b.xi_parallel.holds &&
           same(a.xi_parallel.residual, b.xi_parallel.residual) && a.branch == b.branch;
}

namespace detail {

inline void append_padded(std::string& out, const std::string& cell, std::size_t width) {
    out += cell;
    for (std::size_t i = cell.size(); i < width; ++i) out += ' ';
}

}  // namespace detail

inline std::string render_report_table(const ConditionReport& r,
                                       const std::optional<HopfModel>& model = std::nullopt) {
    std::string out;
    if (model) {
        out += "model: " + space_id(model->space) + "/" + kind_id(model->kind);
        if (model->radius) out += "  radius=" + fmt_num(*model->radius);
        out += "  alpha=" + fmt_num(model->alpha) + "  lambda=" + fmt_num(model->lambda) +
               "  nu=" + fmt_num(model->nu) + '\n';
    }
    out += "condition        holds  residual          L\n";
    auto row = [&](const char* name, bool holds, double residual,
                   const std::optional<double>& L) {
        detail::append_padded(out, name, 17);
        detail::append_padded(out, holds ? "yes" : "no", 7);
        detail::append_padded(out, fmt_num(residual), 18);
        out += L ? fmt_num(*L) : std::string("-");
        out += '\n';
    };
    row("vanishing", r.vanishing.holds, r.vanishing.residual, std::nullopt);
    row("semi_parallel", r.semi_parallel.holds, r.semi_parallel.residual, std::nullopt);
    row("pseudo_parallel", r.pseudo_parallel.holds, r.pseudo_parallel.residual,
        r.pseudo_parallel.L);
    row("xi_parallel", r.xi_parallel.holds, r.xi_parallel.residual, std::nullopt);
    if (r.branch) out += std::string("branch: ") + branch_id(*r.branch) + '\n';
    return out;
}

inline std::string render_scan_table(const ScanResult& s) {
    std::string out = "scan: " + s.space + "/" + s.kind + "  [" + fmt_num(s.r_start) + ", " +
                      fmt_num(s.r_stop) + "]  n=" + std::to_string(s.count) +
                      "  epsilon=" + fmt_num(s.epsilon) + '\n';
    out += "radius            vanishing         semi_parallel     pseudo_parallel   xi_parallel\n";
    for (const ScanRow& row : s.rows) {
        detail::append_padded(out, fmt_num(row.radius), 18);
        detail::append_padded(out, fmt_num(row.report.vanishing.residual), 18);
        detail::append_padded(out, fmt_num(row.report.semi_parallel.residual), 18);
        detail::append_padded(out, fmt_num(row.report.pseudo_parallel.residual), 18);
        out += fmt_num(row.report.xi_parallel.residual);
        out += '\n';
    }
    if (s.roots.empty()) {
        out += "roots: none\n";
    } else {
        out += "roots:\n";
        for (const ScanRoot& root : s.roots)
            out += "  " + root.condition + " at radius " + fmt_num(root.radius) +
                   " (residual " + fmt_num(root.residual) + ")\n";
    }
    return out;
}

}  // namespace starricci
