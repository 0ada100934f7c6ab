// Command line front end: verification suites, convexity scans, threshold
// sweeps, triangle studies, level-set plot data and one-off transports.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "geoaffine/convexity.hpp"
#include "geoaffine/errors.hpp"
#include "geoaffine/serialize.hpp"

using namespace geoaffine;

namespace {

constexpr std::uint64_t default_seed = 20240001ull;

struct SpaceArgs {
    std::string space = "halfplane";
    double kappa = std::numeric_limits<double>::quiet_NaN();
    int dim = 2;
};

struct ProbeArgs {
    std::vector<double> x0;
    std::vector<double> u0;
};

struct OutputArgs {
    std::string format = "json";
    std::string out;
};

void add_space_options(CLI::App* cmd, SpaceArgs& args) {
    cmd->add_option("--space", args.space, "Model space")
        ->check(CLI::IsMember({"euclidean", "sphere", "hyperbolic", "halfplane"}));
    cmd->add_option("--kappa", args.kappa, "Sectional curvature");
    cmd->add_option("--dim", args.dim, "Dimension")->check(CLI::PositiveNumber);
}

void add_probe_options(CLI::App* cmd, ProbeArgs& args) {
    cmd->add_option("--x0", args.x0, "Base point chart coordinates (comma separated)")
        ->delimiter(',');
    cmd->add_option("--u0", args.u0, "Tangent components of u0 at x0 (comma separated)")
        ->delimiter(',');
}

void add_output_options(CLI::App* cmd, OutputArgs& args,
                        const std::vector<std::string>& formats) {
    cmd->add_option("--format", args.format, "Output format")
        ->check(CLI::IsMember(formats));
    cmd->add_option("--out", args.out, "Output file (stdout when omitted)");
}

SpaceSpec build_space(const SpaceArgs& args) {
    if (args.space == "euclidean") return SpaceSpec::euclidean(args.dim);
    if (args.space == "sphere")
        return SpaceSpec::sphere(std::isnan(args.kappa) ? 1.0 : args.kappa, args.dim);
    if (args.space == "hyperbolic")
        return SpaceSpec::hyperbolic(std::isnan(args.kappa) ? -1.0 : args.kappa, args.dim);
    return SpaceSpec::half_plane();
}

AffineProbe build_probe(const SpaceSpec& space, const ProbeArgs& args) {
    Point x0 = args.x0.empty() ? anchor_point(space) : make_point(space, args.x0);
    TangentVec u0;
    if (!args.u0.empty()) {
        u0 = make_tangent(x0, args.u0);
    } else if (space.kind == SpaceKind::half_plane && args.x0.empty()) {
        u0 = make_tangent(x0, {0.0, 1.0}); // the counterexample probe
    } else {
        u0 = orthonormal_basis(x0)[0];
    }
    return make_probe(std::move(x0), std::move(u0));
}

void emit(const OutputArgs& args, const std::string& payload,
          const std::string& stdout_summary) {
    if (args.out.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream file(args.out, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open output file: " + args.out);
        file << payload;
        std::cout << stdout_summary << " -> " << args.out << "\n";
    }
}

// ---- plot-levelset -----------------------------------------------------

struct Window {
    double x_lo = -1.5, x_hi = 1.5, y_lo = 0.025, y_hi = 2.0;
};

// chart mapping for plotting: identity for the two-coordinate models,
// stereographic projection from the antipode of x0 for the sphere
struct PlotChart {
    const AffineProbe& probe;
    std::vector<TangentVec> frame; // ambient frame for the sphere chart

    explicit PlotChart(const AffineProbe& p) : probe(p) {
        if (probe.space().kind == SpaceKind::sphere)
            frame = orthonormal_basis(probe.x0);
    }

    std::optional<Point> to_manifold(double w1, double w2) const {
        const SpaceSpec& space = probe.space();
        switch (space.kind) {
            case SpaceKind::euclidean:
                return make_point(space, {w1, w2});
            case SpaceKind::half_plane:
                if (w2 <= 0.0) return std::nullopt;
                return make_point(space, {w1, w2});
            case SpaceKind::sphere: {
                double R = space.model_radius();
                double n2 = w1 * w1 + w2 * w2;
                double denom = R * R + n2;
                std::vector<double> c(probe.x0.coords.size(), 0.0);
                for (std::size_t i = 0; i < c.size(); ++i)
                    c[i] = (2.0 * R * R * (w1 * frame[0].comps[i] + w2 * frame[1].comps[i]) +
                            R * (R * R - n2) * probe.x0.coords[i] / R) / denom;
                return Point{space, std::move(c)};
            }
            default:
                return std::nullopt;
        }
    }

    std::array<double, 2> to_chart(const Point& p) const {
        const SpaceSpec& space = probe.space();
        if (space.kind == SpaceKind::sphere) {
            double R = space.model_radius();
            double along = 0.0;
            for (std::size_t i = 0; i < p.coords.size(); ++i)
                along += p.coords[i] * probe.x0.coords[i] / R;
            double denom = R + along;
            double w1 = 0.0, w2 = 0.0;
            for (std::size_t i = 0; i < p.coords.size(); ++i) {
                w1 += p.coords[i] * frame[0].comps[i];
                w2 += p.coords[i] * frame[1].comps[i];
            }
            return {R * w1 / denom, R * w2 / denom};
        }
        return {p.coords[0], p.coords[1]};
    }
};

struct GridData {
    int n = 0;
    Window window;
    std::vector<double> values; // row-major, (n+1) x (n+1), NaN where undefined
};

GridData sample_grid(const AffineProbe& probe, const PlotChart& chart,
                     const Window& window, int n) {
    GridData grid;
    grid.n = n;
    grid.window = window;
    grid.values.assign(static_cast<std::size_t>((n + 1) * (n + 1)),
                       std::numeric_limits<double>::quiet_NaN());
    for (int j = 0; j <= n; ++j) {
        double w2 = window.y_lo + (window.y_hi - window.y_lo) * j / n;
        for (int i = 0; i <= n; ++i) {
            double w1 = window.x_lo + (window.x_hi - window.x_lo) * i / n;
            if (auto p = chart.to_manifold(w1, w2))
                grid.values[static_cast<std::size_t>(j * (n + 1) + i)] =
                    f0_value(probe, *p);
        }
    }
    return grid;
}

std::string grid_csv(const GridData& grid) {
    std::string out = "t1,t2,f0\n";
    int n = grid.n;
    for (int j = 0; j <= n; ++j) {
        double w2 = grid.window.y_lo + (grid.window.y_hi - grid.window.y_lo) * j / n;
        for (int i = 0; i <= n; ++i) {
            double w1 = grid.window.x_lo + (grid.window.x_hi - grid.window.x_lo) * i / n;
            double v = grid.values[static_cast<std::size_t>(j * (n + 1) + i)];
            out += format_sig12(w1);
            out += ',';
            out += format_sig12(w2);
            out += ',';
            out += std::isnan(v) ? "nan" : format_sig12(v);
            out += '\n';
        }
    }
    return out;
}

using Segment = std::array<double, 4>; // x1, y1, x2, y2 in chart coordinates

// marching squares for the level curve f0 = c
std::vector<Segment> contour_segments(const GridData& grid, double c) {
    std::vector<Segment> segments;
    int n = grid.n;
    auto value = [&](int i, int j) {
        return grid.values[static_cast<std::size_t>(j * (n + 1) + i)];
    };
    auto wx = [&](int i) {
        return grid.window.x_lo + (grid.window.x_hi - grid.window.x_lo) * i / n;
    };
    auto wy = [&](int j) {
        return grid.window.y_lo + (grid.window.y_hi - grid.window.y_lo) * j / n;
    };
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            double v00 = value(i, j), v10 = value(i + 1, j);
            double v11 = value(i + 1, j + 1), v01 = value(i, j + 1);
            if (!std::isfinite(v00) || !std::isfinite(v10) || !std::isfinite(v11) ||
                !std::isfinite(v01))
                continue;
            int idx = (v00 > c ? 1 : 0) | (v10 > c ? 2 : 0) | (v11 > c ? 4 : 0) |
                      (v01 > c ? 8 : 0);
            if (idx == 0 || idx == 15) continue;
            double x0 = wx(i), x1 = wx(i + 1), y0 = wy(j), y1 = wy(j + 1);
            auto lerp = [c](double a, double b, double va, double vb) {
                return a + (b - a) * (c - va) / (vb - va);
            };
            // edge crossings: bottom, right, top, left
            std::array<std::array<double, 2>, 4> pt{};
            std::array<bool, 4> hit{};
            if ((v00 > c) != (v10 > c)) { pt[0] = {lerp(x0, x1, v00, v10), y0}; hit[0] = true; }
            if ((v10 > c) != (v11 > c)) { pt[1] = {x1, lerp(y0, y1, v10, v11)}; hit[1] = true; }
            if ((v01 > c) != (v11 > c)) { pt[2] = {lerp(x0, x1, v01, v11), y1}; hit[2] = true; }
            if ((v00 > c) != (v01 > c)) { pt[3] = {x0, lerp(y0, y1, v00, v01)}; hit[3] = true; }
            std::vector<int> edges;
            for (int e = 0; e < 4; ++e)
                if (hit[e]) edges.push_back(e);
            if (edges.size() == 2) {
                segments.push_back({pt[edges[0]][0], pt[edges[0]][1],
                                    pt[edges[1]][0], pt[edges[1]][1]});
            } else if (edges.size() == 4) {
                // ambiguous saddle: pair bottom-right and top-left
                segments.push_back({pt[0][0], pt[0][1], pt[1][0], pt[1][1]});
                segments.push_back({pt[2][0], pt[2][1], pt[3][0], pt[3][1]});
            }
        }
    }
    return segments;
}

std::vector<std::array<double, 2>> polyline_chart(const PlotChart& chart,
                                                  const Point& a, const Point& b,
                                                  int samples = 100) {
    std::vector<std::array<double, 2>> pts;
    GeodesicSegment seg = geodesic(a, b);
    for (int k = 0; k <= samples; ++k)
        pts.push_back(chart.to_chart(seg.eval(static_cast<double>(k) / samples)));
    return pts;
}

std::string plot_svg(const GridData& grid, double c,
                     const std::vector<Segment>& contour,
                     const std::vector<std::array<double, 2>>& chord,
                     const std::vector<std::array<double, 2>>& axis) {
    const double W = 800, Hpx = 600, margin = 40;
    const Window& win = grid.window;
    auto sx = [&](double x) {
        return margin + (x - win.x_lo) / (win.x_hi - win.x_lo) * (W - 2 * margin);
    };
    auto sy = [&](double y) {
        return Hpx - margin - (y - win.y_lo) / (win.y_hi - win.y_lo) * (Hpx - 2 * margin);
    };
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\""
        << Hpx << "\" viewBox=\"0 0 " << W << " " << Hpx << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << W - 2 * margin
        << "\" height=\"" << Hpx - 2 * margin
        << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";
    svg << "<path stroke=\"#1f77b4\" stroke-width=\"1.5\" fill=\"none\" d=\"";
    for (const Segment& s : contour)
        svg << "M" << sx(s[0]) << " " << sy(s[1]) << "L" << sx(s[2]) << " " << sy(s[3]);
    svg << "\"/>\n";
    auto path_of = [&](const std::vector<std::array<double, 2>>& pts) {
        std::ostringstream d;
        bool first = true;
        for (const auto& p : pts) {
            if (p[0] < win.x_lo || p[0] > win.x_hi || p[1] < win.y_lo || p[1] > win.y_hi) {
                first = true;
                continue;
            }
            d << (first ? "M" : "L") << sx(p[0]) << " " << sy(p[1]);
            first = false;
        }
        return d.str();
    };
    if (!axis.empty())
        svg << "<path stroke=\"#2ca02c\" stroke-width=\"1.5\" fill=\"none\" d=\""
            << path_of(axis) << "\"/>\n";
    if (!chord.empty())
        svg << "<path stroke=\"#d62728\" stroke-width=\"1.5\" fill=\"none\" d=\""
            << path_of(chord) << "\"/>\n";
    svg << "<text x=\"" << margin << "\" y=\"" << margin - 12
        << "\" font-family=\"monospace\" font-size=\"14\">level c = " << format_sig12(c)
        << " (blue: contour, green: probe axis, red: witness chord)</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

// ---- command implementations --------------------------------------------

int run_verify(double tol, const OutputArgs& out_args) {
    CounterexampleReport report = counterexample_suite(tol);
    for (const AssertionResult& a : report.assertions) {
        std::cout << "assertion (" << a.id << "): " << (a.pass ? "PASS" : "FAIL")
                  << " - " << a.description << "\n";
        for (const AssertionCheck& c : a.checks)
            std::cout << "    " << (c.pass ? " ok " : "FAIL") << " " << c.label
                      << ": computed " << format_sig12(c.computed) << ", expected "
                      << format_sig12(c.expected) << " (tol " << format_sig12(c.tolerance)
                      << ")\n";
    }
    std::string payload = out_args.format == "csv"
                              ? csv_of(report)
                              : json_of(report).dump(2) + "\n";
    if (!out_args.out.empty()) emit(out_args, payload, "counterexample report");
    std::cout << (report.all_pass ? "all assertions reproduced" : "ASSERTION MISMATCH")
              << "\n";
    return report.all_pass ? 0 : 1;
}

int run_scan(const AffineProbe& probe, double c, ScanOptions opts,
             bool inject_construction, bool inject_paper,
             const OutputArgs& out_args) {
    if (inject_paper && is_standard_halfplane_probe(probe)) {
        auto pair = figure31_pair();
        if (sublevel_membership(probe, c, pair.first) &&
            sublevel_membership(probe, c, pair.second))
            opts.injected.insert(opts.injected.begin(), std::move(pair));
    }
    if (inject_construction)
        for (auto& pr : construction_pairs(probe, c)) opts.injected.push_back(std::move(pr));
    ConvexityReport report = convexity_scan(probe, c, opts);
    std::string payload = out_args.format == "csv"
                              ? csv_of(report)
                              : json_of(report, probe).dump(2) + "\n";
    emit(out_args, payload, "scan report");
    if (!out_args.out.empty())
        std::cout << "c = " << format_sig12(c) << ": " << to_string(report.verdict) << "\n";
    return 0;
}

int run_sweep(const AffineProbe& probe, const std::vector<double>& grid,
              SweepOptions opts, const OutputArgs& out_args) {
    std::vector<ThresholdRow> rows = threshold_experiment(probe, grid, opts);
    std::string payload = out_args.format == "csv"
                              ? csv_of(rows)
                              : json_of(rows, probe).dump(2) + "\n";
    emit(out_args, payload, "sweep report");
    if (!out_args.out.empty())
        for (const ThresholdRow& row : rows)
            std::cout << "c = " << format_sig12(row.c) << ": "
                      << to_string(row.report.verdict) << "\n";
    return 0;
}

int run_triangles(const SpaceSpec& space, std::size_t n, std::uint64_t seed,
                  const OutputArgs& out_args) {
    TriangleSuiteStats stats = triangle_suite(space, n, seed);
    std::string payload = out_args.format == "csv" ? csv_of(stats, space, seed)
                                                   : json_of(stats, space, seed).dump(2) + "\n";
    emit(out_args, payload, "triangle suite report");
    return 0;
}

int run_plot(const AffineProbe& probe, double c, const Window& window, int grid_n,
             const OutputArgs& out_args) {
    if (probe.space().dim > 2)
        throw UnsupportedDimensionError("plot-levelset requires a two-dimensional space");
    PlotChart chart(probe);
    GridData grid = sample_grid(probe, chart, window, grid_n);
    if (out_args.format == "csv") {
        emit(out_args, grid_csv(grid), "level-set grid");
        return 0;
    }
    std::vector<Segment> contour = contour_segments(grid, c);
    // witness chord: the counterexample chord when applicable, otherwise the
    // constructed witness pair
    std::vector<std::array<double, 2>> chord;
    if (is_standard_halfplane_probe(probe)) {
        auto pair = figure31_pair();
        if (sublevel_membership(probe, c, pair.first))
            chord = polyline_chart(chart, pair.first, pair.second);
    }
    if (chord.empty()) {
        auto pairs = construction_pairs(probe, c);
        if (!pairs.empty()) chord = polyline_chart(chart, pairs[0].first, pairs[0].second);
    }
    // the probe axis geodesic through x0
    std::vector<std::array<double, 2>> axis;
    {
        TangentVec u_hat = scaled(probe.u0, 1.0 / norm(probe.u0));
        double reach = probe.space().kappa > 0.0
                           ? 0.49 * probe.space().diameter_bound()
                           : 3.0;
        for (int k = -100; k <= 100; ++k)
            axis.push_back(chart.to_chart(exp_map(probe.x0, scaled(u_hat, reach * k / 100.0))));
    }
    emit(out_args, plot_svg(grid, c, contour, chord, axis), "level-set figure");
    return 0;
}

int run_transport(const AffineProbe& probe, const std::vector<double>& target,
                  int steps, const OutputArgs& out_args) {
    Point x = make_point(probe.space(), target);
    TangentVec moved = transport_field(probe, x);
    Json j;
    j["schema"] = schema_tag;
    j["suite"] = "transport";
    j["space"] = json_of(probe.space());
    j["x0"] = json_of(probe.x0);
    j["u0"] = json_of(probe.u0);
    j["x"] = json_of(x);
    j["transported"] = json_of(moved);
    j["norm_u0"] = sig12(norm(probe.u0));
    j["norm_transported"] = sig12(norm(moved));
    if (probe.space().kind == SpaceKind::half_plane) {
        TangentVec rk = hp::transport_rk4(probe.x0, x, probe.u0, steps);
        j["transported_rk4"] = json_of(rk);
        j["rk4_steps"] = steps;
        j["route_disagreement"] = sig12(norm(subtracted(moved, rk)));
    }
    emit(out_args, j.dump(2) + "\n", "transport report");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"constant-curvature geometry kernel and affine-function laboratory"};
    app.require_subcommand(1);

    // verify-counterexample
    auto* verify = app.add_subcommand("verify-counterexample",
                                      "Reproduce the half-plane counterexample assertions");
    double verify_tol = 1e-5;
    OutputArgs verify_out;
    verify->add_option("--tol", verify_tol,
                       "Tolerance for the finite-difference routes");
    add_output_options(verify, verify_out, {"json", "csv"});

    // scan
    auto* scan = app.add_subcommand("scan", "Convexity scan of one sub-level set");
    SpaceArgs scan_space;
    ProbeArgs scan_probe;
    OutputArgs scan_out;
    double scan_c = 0.0;
    ScanOptions scan_opts;
    bool scan_inject_constr = false, scan_inject_paper = false;
    add_space_options(scan, scan_space);
    add_probe_options(scan, scan_probe);
    scan->add_option("--c", scan_c, "Sub-level value")->required();
    scan->add_option("--pairs", scan_opts.n_pairs, "Number of member pairs");
    scan->add_option("--steps", scan_opts.n_steps, "Interior points per chord");
    scan->add_option("--seed", scan_opts.seed, "RNG seed");
    scan->add_option("--radius", scan_opts.sample_radius,
                     "Sampling radius in the exp chart (0 = default)");
    scan->add_flag("--inject-construction", scan_inject_constr,
                   "Inject the threshold witness construction");
    scan->add_flag("--inject-paper-points", scan_inject_paper,
                   "Inject the counterexample chord (standard half-plane probe)");
    add_output_options(scan, scan_out, {"json", "csv"});

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Threshold sweep over a grid of levels");
    SpaceArgs sweep_space;
    ProbeArgs sweep_probe;
    OutputArgs sweep_out;
    std::vector<double> sweep_grid;
    SweepOptions sweep_opts;
    add_space_options(sweep, sweep_space);
    add_probe_options(sweep, sweep_probe);
    sweep->add_option("--c-grid", sweep_grid, "Levels to scan (comma separated)")
        ->delimiter(',')
        ->required();
    sweep->add_option("--pairs", sweep_opts.scan.n_pairs, "Number of member pairs");
    sweep->add_option("--steps", sweep_opts.scan.n_steps, "Interior points per chord");
    sweep->add_option("--seed", sweep_opts.scan.seed, "RNG seed");
    sweep->add_flag("--inject-construction", sweep_opts.inject_construction,
                    "Inject the threshold witness construction");
    sweep->add_flag("--inject-paper-points", sweep_opts.inject_paper_points,
                    "Inject the counterexample chord (standard half-plane probe)");
    add_output_options(sweep, sweep_out, {"json", "csv"});

    // triangles
    auto* triangles = app.add_subcommand("triangles", "Seeded comparison-triangle suites");
    SpaceArgs tri_space;
    OutputArgs tri_out;
    std::size_t tri_n = 1000;
    std::uint64_t tri_seed = default_seed;
    add_space_options(triangles, tri_space);
    triangles->add_option("--triangles", tri_n, "Number of triangles");
    triangles->add_option("--seed", tri_seed, "RNG seed");
    add_output_options(triangles, tri_out, {"json", "csv"});

    // plot-levelset
    auto* plot = app.add_subcommand("plot-levelset", "Level-set grid data or SVG figure");
    SpaceArgs plot_space;
    ProbeArgs plot_probe;
    OutputArgs plot_out;
    plot_out.format = "csv";
    double plot_c = -0.4;
    std::vector<double> window_args;
    int grid_n = 120;
    add_space_options(plot, plot_space);
    add_probe_options(plot, plot_probe);
    plot->add_option("--c", plot_c, "Contour level");
    plot->add_option("--window", window_args,
                     "Chart window x_lo,x_hi,y_lo,y_hi")
        ->delimiter(',')
        ->expected(4);
    plot->add_option("--grid", grid_n, "Grid resolution per side")
        ->check(CLI::Range(8, 2000));
    add_output_options(plot, plot_out, {"csv", "svg"});

    // transport
    auto* transport_cmd = app.add_subcommand("transport", "One-off parallel transport query");
    SpaceArgs tr_space;
    ProbeArgs tr_probe;
    OutputArgs tr_out;
    std::vector<double> tr_target;
    int tr_steps = 1024;
    add_space_options(transport_cmd, tr_space);
    add_probe_options(transport_cmd, tr_probe);
    transport_cmd->add_option("--x", tr_target, "Target point chart coordinates")
        ->delimiter(',')
        ->required();
    transport_cmd->add_option("--steps", tr_steps, "RK4 steps (half plane only)");
    add_output_options(transport_cmd, tr_out, {"json"});

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return run_verify(verify_tol, verify_out);
        if (scan->parsed()) {
            AffineProbe probe = build_probe(build_space(scan_space), scan_probe);
            return run_scan(probe, scan_c, scan_opts, scan_inject_constr,
                            scan_inject_paper, scan_out);
        }
        if (sweep->parsed()) {
            AffineProbe probe = build_probe(build_space(sweep_space), sweep_probe);
            return run_sweep(probe, sweep_grid, sweep_opts, sweep_out);
        }
        if (triangles->parsed())
            return run_triangles(build_space(tri_space), tri_n, tri_seed, tri_out);
        if (plot->parsed()) {
            SpaceSpec space = build_space(plot_space);
            AffineProbe probe = build_probe(space, plot_probe);
            Window window;
            if (!window_args.empty())
                window = Window{window_args[0], window_args[1], window_args[2],
                                window_args[3]};
            else if (space.kind != SpaceKind::half_plane)
                window = Window{-1.5, 1.5, -1.5, 1.5};
            return run_plot(probe, plot_c, window, grid_n, plot_out);
        }
        if (transport_cmd->parsed()) {
            AffineProbe probe = build_probe(build_space(tr_space), tr_probe);
            return run_transport(probe, tr_target, tr_steps, tr_out);
        }
    } catch (const EmptySublevelError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const GeoaffineError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
