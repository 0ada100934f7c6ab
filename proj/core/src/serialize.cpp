#include "geoaffine/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace geoaffine {

double sig12(double x) {
    if (!std::isfinite(x)) return x;
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::strtod(buf, nullptr);
}

std::string format_sig12(double x) {
    char buf[40];
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (std::isnan(x)) return "nan";
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

namespace {

Json coords_json(const std::vector<double>& c) {
    Json arr = Json::array();
    for (double v : c) arr.push_back(sig12(v));
    return arr;
}

std::string coords_joined(const std::vector<double>& c) {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ';';
        out += format_sig12(c[i]);
    }
    return out;
}

} // namespace

Json json_of(const SpaceSpec& space) {
    Json j;
    j["kind"] = to_string(space.kind);
    j["dim"] = space.dim;
    j["kappa"] = sig12(space.kappa);
    return j;
}

Json json_of(const Point& p) {
    Json j;
    j["space"] = json_of(p.space);
    j["coords"] = coords_json(p.coords);
    return j;
}

Json json_of(const TangentVec& v) {
    Json j;
    j["space"] = json_of(v.base.space);
    j["base"] = coords_json(v.base.coords);
    j["comps"] = coords_json(v.comps);
    return j;
}

Json json_of(const CheckReport& report) {
    Json j;
    j["schema"] = schema_tag;
    j["property"] = report.property;
    j["n"] = report.samples;
    j["max_residual"] = sig12(report.max_residual);
    j["tolerance"] = sig12(report.tolerance);
    Json worst = Json::array();
    for (const Point& p : report.worst_sample) worst.push_back(json_of(p));
    j["worst_sample"] = worst;
    j["verdict"] = to_string(report.verdict);
    if (!report.note.empty()) j["note"] = report.note;
    return j;
}

Json json_of(const CounterexampleReport& report) {
    Json j;
    j["schema"] = schema_tag;
    j["suite"] = "counterexample";
    Json arr = Json::array();
    for (const AssertionResult& a : report.assertions) {
        Json ja;
        ja["id"] = a.id;
        ja["description"] = a.description;
        Json checks = Json::array();
        for (const AssertionCheck& c : a.checks) {
            Json jc;
            jc["label"] = c.label;
            jc["computed"] = sig12(c.computed);
            jc["expected"] = sig12(c.expected);
            jc["tolerance"] = sig12(c.tolerance);
            jc["pass"] = c.pass;
            checks.push_back(std::move(jc));
        }
        ja["checks"] = std::move(checks);
        ja["pass"] = a.pass;
        arr.push_back(std::move(ja));
    }
    j["assertions"] = std::move(arr);
    j["all_pass"] = report.all_pass;
    return j;
}

namespace {

Json witness_json(const ScanWitness& w) {
    Json j;
    j["p"] = json_of(w.p);
    j["q"] = json_of(w.q);
    j["t"] = sig12(w.t);
    j["f0"] = sig12(w.f0_at_witness);
    return j;
}

Json report_body(const ConvexityReport& report) {
    Json j;
    j["c"] = sig12(report.c);
    j["n_pairs"] = report.n_pairs;
    j["n_steps"] = report.n_steps;
    j["seed"] = report.seed;
    j["injected_pairs"] = report.injected_pairs;
    j["verdict"] = to_string(report.verdict);
    if (report.witness)
        j["witness"] = witness_json(*report.witness);
    else
        j["witness"] = nullptr;
    return j;
}

} // namespace

Json json_of(const ConvexityReport& report, const AffineProbe& probe) {
    Json j;
    j["schema"] = schema_tag;
    j["suite"] = "convexity_scan";
    j["space"] = json_of(probe.space());
    j["x0"] = coords_json(probe.x0.coords);
    j["u0"] = coords_json(probe.u0.comps);
    j.update(report_body(report));
    return j;
}

Json json_of(const std::vector<ThresholdRow>& rows, const AffineProbe& probe) {
    Json j;
    j["schema"] = schema_tag;
    j["suite"] = "threshold_sweep";
    j["space"] = json_of(probe.space());
    j["x0"] = coords_json(probe.x0.coords);
    j["u0"] = coords_json(probe.u0.comps);
    Json arr = Json::array();
    for (const ThresholdRow& row : rows) arr.push_back(report_body(row.report));
    j["rows"] = std::move(arr);
    return j;
}

Json json_of(const TriangleSuiteStats& stats, const SpaceSpec& space,
             std::uint64_t seed) {
    Json j;
    j["schema"] = schema_tag;
    j["suite"] = "triangles";
    j["space"] = json_of(space);
    j["n"] = stats.n;
    j["seed"] = seed;
    j["min_a_t"] = sig12(stats.min_a_t);
    j["min_b_t"] = sig12(stats.min_b_t);
    j["min_sum_ab"] = sig12(stats.min_sum_ab);
    j["max_sum_ab"] = sig12(stats.max_sum_ab);
    j["max_span_residual"] = sig12(stats.max_span_residual);
    j["min_loc_margin"] = sig12(stats.min_loc_margin);
    j["max_abs_loc_defect"] = sig12(stats.max_abs_loc_defect);
    j["min_comparison_slack"] = sig12(stats.min_comparison_slack);
    j["max_abs_comparison_diff"] = sig12(stats.max_abs_comparison_diff);
    return j;
}

namespace {

const char* scan_csv_header =
    "c,verdict,witness_p,witness_q,t,f0_at_witness,n_pairs,seed\n";

std::string scan_csv_row(const ConvexityReport& r) {
    std::ostringstream out;
    out << format_sig12(r.c) << ',' << to_string(r.verdict) << ',';
    if (r.witness) {
        out << coords_joined(r.witness->p.coords) << ','
            << coords_joined(r.witness->q.coords) << ','
            << format_sig12(r.witness->t) << ','
            << format_sig12(r.witness->f0_at_witness);
    } else {
        out << ",,,";
    }
    out << ',' << r.n_pairs << ',' << r.seed << '\n';
    return out.str();
}

} // namespace

std::string csv_of(const ConvexityReport& report) {
    return scan_csv_header + scan_csv_row(report);
}

std::string csv_of(const std::vector<ThresholdRow>& rows) {
    std::string out = scan_csv_header;
    for (const ThresholdRow& row : rows) out += scan_csv_row(row.report);
    return out;
}

std::string csv_of(const CounterexampleReport& report) {
    std::ostringstream out;
    out << "assertion,check,computed,expected,tolerance,pass\n";
    for (const AssertionResult& a : report.assertions)
        for (const AssertionCheck& c : a.checks)
            out << a.id << ",\"" << c.label << "\"," << format_sig12(c.computed)
                << ',' << format_sig12(c.expected) << ','
                << format_sig12(c.tolerance) << ',' << (c.pass ? "true" : "false")
                << '\n';
    return out.str();
}

std::string csv_of(const TriangleSuiteStats& stats, const SpaceSpec& space,
                   std::uint64_t seed) {
    std::ostringstream out;
    out << "space,n,seed,min_a_t,min_b_t,min_sum_ab,max_sum_ab,max_span_residual,"
           "min_loc_margin,max_abs_loc_defect,min_comparison_slack,max_abs_comparison_diff\n";
    out << to_string(space.kind) << ',' << stats.n << ',' << seed << ','
        << format_sig12(stats.min_a_t) << ',' << format_sig12(stats.min_b_t) << ','
        << format_sig12(stats.min_sum_ab) << ',' << format_sig12(stats.max_sum_ab) << ','
        << format_sig12(stats.max_span_residual) << ','
        << format_sig12(stats.min_loc_margin) << ','
        << format_sig12(stats.max_abs_loc_defect) << ','
        << format_sig12(stats.min_comparison_slack) << ','
        << format_sig12(stats.max_abs_comparison_diff) << '\n';
    return out.str();
}

} // namespace geoaffine
