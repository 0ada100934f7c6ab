#include "geoaffine/convexity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "geoaffine/errors.hpp"

namespace geoaffine {

namespace {

constexpr double witness_margin = 1e-12;

double clamped_acos(double c) { return std::acos(std::clamp(c, -1.0, 1.0)); }

double angle_between(const TangentVec& u, const TangentVec& v) {
    double nu = norm(u), nv = norm(v);
    if (nu < 1e-300 || nv < 1e-300)
        throw DegenerateTriangleError("angle at a collapsed side");
    return clamped_acos(inner(u, v) / (nu * nv));
}

} // namespace

double TriangleData::min_side() const {
    return std::min({side_lengths[0], side_lengths[1], side_lengths[2]});
}

double TriangleData::min_angle() const {
    return std::min({angles[0], angles[1], angles[2]});
}

TriangleData make_triangle(const Point& p1, const Point& p2, const Point& p3) {
    TriangleData tri{{p1, p2, p3}, {}, {}};
    for (int i = 0; i < 3; ++i) {
        const Point& a = tri.vertices[(i + 1) % 3];
        const Point& b = tri.vertices[(i + 2) % 3];
        tri.side_lengths[i] = distance(a, b);
        if (tri.side_lengths[i] < 1e-12)
            throw DegenerateTriangleError("make_triangle: collapsed side");
    }
    double two_d = 2.0 * p1.space.diameter_bound();
    if (!(tri.perimeter() < two_d))
        throw std::invalid_argument("make_triangle: perimeter must stay below 2 D_kappa");
    for (int i = 0; i < 3; ++i) {
        const Point& v = tri.vertices[i];
        tri.angles[i] = angle_between(log_map(v, tri.vertices[(i + 1) % 3]),
                                      log_map(v, tri.vertices[(i + 2) % 3]));
    }
    return tri;
}

ComboCoefficients lemma42_coefficients(const Point& y, const Point& p,
                                       const Point& q, double t) {
    TriangleData tri = make_triangle(y, p, q);
    (void)tri;
    TangentVec vp = log_map(y, p);
    TangentVec vq = log_map(y, q);
    TangentVec vx = log_map(y, geodesic(p, q).eval(t));
    double g11 = inner(vp, vp), g12 = inner(vp, vq), g22 = inner(vq, vq);
    double det = g11 * g22 - g12 * g12;
    if (det < 1e-14 * g11 * g22)
        throw DegenerateTriangleError("lemma42_coefficients: log vectors nearly parallel");
    double r1 = inner(vx, vp), r2 = inner(vx, vq);
    double a = (r1 * g22 - r2 * g12) / det;
    double b = (g11 * r2 - g12 * r1) / det;
    TangentVec combo = added(scaled(vp, a), scaled(vq, b));
    return ComboCoefficients{a, b, norm(subtracted(vx, combo))};
}

ComparisonTriangleResult comparison_triangle(const Point& y, const Point& p,
                                             const Point& q, double t) {
    TriangleData tri = make_triangle(y, p, q);
    double dp = distance(y, p);
    double dq = distance(y, q);
    double theta = tri.angles[0];
    if (std::sin(theta) < 1e-12)
        throw DegenerateTriangleError("comparison_triangle: flat angle at y");

    Point x = geodesic(p, q).eval(t);
    double theta1 = angle_between(log_map(y, p), log_map(y, x));

    ComparisonTriangleResult out;
    out.planar[0] = {0.0, 0.0};
    out.planar[1] = {dp, 0.0};
    out.planar[2] = {dq * std::cos(theta), dq * std::sin(theta)};

    // ray from the origin at angle theta1 against the segment p~ -> q~
    double cx = std::cos(theta1), sx = std::sin(theta1);
    double ex = out.planar[2][0] - out.planar[1][0];
    double ey = out.planar[2][1] - out.planar[1][1];
    double det = -cx * ey + sx * ex;
    if (std::abs(det) < 1e-14 * (std::abs(ex) + std::abs(ey)))
        throw DegenerateTriangleError("comparison_triangle: ray parallel to the chord");
    double rho = (-out.planar[1][0] * ey + out.planar[1][1] * ex) / det;
    out.x_tilde = {rho * cx, rho * sx};
    out.d_manifold = distance(y, x);
    out.d_plane = rho;
    return out;
}

LawOfCosinesReport law_of_cosines_check(const Point& p1, const Point& p2,
                                        const Point& p3) {
    TriangleData tri = make_triangle(p1, p2, p3);
    LawOfCosinesReport rep{};
    for (int i = 0; i < 3; ++i) {
        double li = tri.side_lengths[i];
        double la = tri.side_lengths[(i + 1) % 3];
        double lb = tri.side_lengths[(i + 2) % 3];
        rep.defect[i] = li * li -
            (la * la + lb * lb - 2.0 * la * lb * std::cos(tri.angles[i]));
    }
    return rep;
}

bool sublevel_membership(const AffineProbe& probe, double c, const Point& x) {
    return f0_value(probe, x) <= c;
}

std::string to_string(ScanVerdict v) {
    return v == ScanVerdict::witness_found ? "WitnessFound" : "NoWitnessAtBudget";
}

namespace {

// worst interior parameter of f0 along the chord, refined around the best
// grid value by deterministic ternary search
double refine_worst_t(const AffineProbe& probe, const GeodesicSegment& seg,
                      double t_grid, double window) {
    auto value = [&](double t) { return f0_value(probe, seg.eval(t)); };
    double lo = std::max(t_grid - window, 1e-9);
    double hi = std::min(t_grid + window, 1.0 - 1e-9);
    for (int it = 0; it < 120; ++it) {
        double m1 = lo + (hi - lo) / 3.0;
        double m2 = hi - (hi - lo) / 3.0;
        if (value(m1) < value(m2))
            lo = m1;
        else
            hi = m2;
    }
    double t_ref = 0.5 * (lo + hi);
    return value(t_ref) >= value(t_grid) ? t_ref : t_grid;
}

// scan one chord; returns the refined witness parameter if it violates
std::optional<std::pair<double, double>> scan_chord(const AffineProbe& probe,
                                                    const Point& p, const Point& q,
                                                    double c, std::size_t n_steps) {
    GeodesicSegment seg = geodesic(p, q);
    double best_t = 0.0, best_val = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 1; j <= n_steps; ++j) {
        double t = static_cast<double>(j) / static_cast<double>(n_steps + 1);
        double val = f0_value(probe, seg.eval(t));
        if (val > best_val) {
            best_val = val;
            best_t = t;
        }
    }
    if (!(best_val > c + witness_margin)) return std::nullopt;
    double t_ref = refine_worst_t(probe, seg, best_t,
                                  1.0 / static_cast<double>(n_steps + 1));
    return std::make_pair(t_ref, f0_value(probe, seg.eval(t_ref)));
}

} // namespace

ConvexityReport convexity_scan(const AffineProbe& probe, double c,
                               const ScanOptions& options) {
    if (options.n_pairs < 1 || options.n_steps < 1)
        throw std::invalid_argument("convexity_scan: n_pairs and n_steps must be >= 1");
    ConvexityReport report;
    report.c = c;
    report.n_pairs = options.n_pairs;
    report.n_steps = options.n_steps;
    report.seed = options.seed;

    auto record = [&](const Point& p, const Point& q,
                      const std::pair<double, double>& hit) {
        report.verdict = ScanVerdict::witness_found;
        report.witness = ScanWitness{p, q, hit.first, hit.second};
    };

    for (const auto& [p, q] : options.injected) {
        if (!sublevel_membership(probe, c, p) || !sublevel_membership(probe, c, q))
            continue;
        ++report.injected_pairs;
        if (auto hit = scan_chord(probe, p, q, c, options.n_steps)) {
            record(p, q, *hit);
            return report;
        }
    }

    std::vector<Point> members = sample_sublevel_members(probe, c, options);
    if (members.size() < 2)
        throw EmptySublevelError("convexity_scan: no sub-level members within the attempt budget");

    for (std::size_t j = 0; j + 1 < members.size(); j += 2) {
        const Point& p = members[j];
        const Point& q = members[j + 1];
        if (auto hit = scan_chord(probe, p, q, c, options.n_steps)) {
            record(p, q, *hit);
            return report;
        }
    }
    report.verdict = ScanVerdict::no_witness_at_budget;
    return report;
}

std::vector<Point> sample_sublevel_members(const AffineProbe& probe, double c,
                                           const ScanOptions& options) {
    double radius = options.sample_radius > 0.0
                        ? options.sample_radius
                        : default_sample_radius(probe.space());
    std::size_t budget = options.attempt_budget > 0
                             ? options.attempt_budget
                             : std::max<std::size_t>(10000, 400 * options.n_pairs);
    std::vector<Point> members;
    members.reserve(2 * options.n_pairs);
    for (std::size_t attempt = 0;
         attempt < budget && members.size() < 2 * options.n_pairs; ++attempt) {
        Rng rng = Rng::for_sample(options.seed, attempt);
        Point x = random_point_in_ball(probe.x0, radius, rng);
        if (sublevel_membership(probe, c, x)) members.push_back(std::move(x));
    }
    return members;
}

namespace {

// first metric-unit basis direction orthogonal to the unit vector dir
TangentVec perpendicular_unit(const Point& x, const TangentVec& dir) {
    for (const TangentVec& e : orthonormal_basis(x)) {
        double along = inner(e, dir);
        if (std::abs(along) > 0.9) continue;
        TangentVec w = subtracted(e, scaled(dir, along));
        double n = norm(w);
        if (n > 1e-8) return scaled(w, 1.0 / n);
    }
    throw std::logic_error("perpendicular_unit: no orthogonal direction found");
}

double chord_margin(const AffineProbe& probe, const Point& p, const Point& q,
                    double c, std::size_t n_steps) {
    GeodesicSegment seg = geodesic(p, q);
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 1; j <= n_steps; ++j) {
        double t = static_cast<double>(j) / static_cast<double>(n_steps + 1);
        best = std::max(best, f0_value(probe, seg.eval(t)));
    }
    return best - c;
}

} // namespace

std::vector<std::pair<Point, Point>> construction_pairs(const AffineProbe& probe,
                                                        double c) {
    const SpaceSpec& space = probe.space();
    double u_norm = norm(probe.u0);
    TangentVec u_hat = scaled(probe.u0, 1.0 / u_norm);

    if (space.kappa > 0.0) {
        double half_d = 0.5 * space.diameter_bound();
        if (!(c > 0.0) || !(c < u_norm * half_d)) return {};
        Point z = exp_map(probe.x0, scaled(u_hat, c / u_norm));
        TangentVec axis_dir = transport(probe.x0, z, u_hat);
        TangentVec w = perpendicular_unit(z, axis_dir);
        double eps = 0.1 * space.diameter_bound();
        for (int shrink = 0; shrink < 8; ++shrink, eps *= 0.5) {
            Point pe = exp_map(z, scaled(w, eps));
            Point qe = exp_map(z, scaled(w, -eps));
            double fpe = f0_value(probe, pe);
            double fqe = f0_value(probe, qe);
            if (!(fpe <= c - 1e-12) || !(fqe <= c - 1e-12)) continue;
            TangentVec vp = log_map(probe.x0, pe);
            double t_max = 0.999 * half_d / norm(vp);
            if (fpe > 0.0) t_max = std::min(t_max, (c - 1e-9) / fpe);
            if (!(t_max > 1.0 + 1e-9)) continue;
            double best_margin = 0.0;
            std::optional<std::pair<Point, Point>> best;
            for (int k = 1; k <= 24; ++k) {
                double t0 = 1.0 + (t_max - 1.0) * k / 24.0;
                Point p = exp_map(probe.x0, scaled(vp, t0));
                if (!sublevel_membership(probe, c, p)) continue;
                double margin = chord_margin(probe, p, qe, c, 64);
                if (margin > 1e-9 && margin > best_margin) {
                    best_margin = margin;
                    best = std::make_pair(p, qe);
                }
            }
            if (best) return {*best};
        }
        return {};
    }

    if (space.kappa < 0.0) {
        if (!(c < 0.0)) return {};
        TangentVec w = perpendicular_unit(probe.x0, u_hat);
        TangentVec along = scaled(u_hat, (c - 1e-9) / u_norm);
        double scale = space.model_radius();
        double best_margin = 0.0;
        std::optional<std::pair<Point, Point>> best;
        for (double k : {0.5, 1.0, 1.5, 2.0, 3.0}) {
            Point p = exp_map(probe.x0, added(along, scaled(w, k * scale)));
            Point q = exp_map(probe.x0, added(along, scaled(w, -k * scale)));
            if (!sublevel_membership(probe, c, p) || !sublevel_membership(probe, c, q))
                continue;
            double margin = chord_margin(probe, p, q, c, 64);
            if (margin > 1e-9 && margin > best_margin) {
                best_margin = margin;
                best = std::make_pair(p, q);
            }
        }
        if (best) return {*best};
        return {};
    }
    return {};
}

std::pair<Point, Point> figure31_pair() {
    SpaceSpec H = SpaceSpec::half_plane();
    return {make_point(H, {0.5, 0.5}), make_point(H, {-0.5, 0.5})};
}

std::vector<ThresholdRow> threshold_experiment(const AffineProbe& probe,
                                               const std::vector<double>& c_grid,
                                               const SweepOptions& options) {
    std::vector<ThresholdRow> rows;
    rows.reserve(c_grid.size());
    for (double c : c_grid) {
        ScanOptions scan = options.scan;
        scan.injected.clear();
        if (options.inject_paper_points && is_standard_halfplane_probe(probe)) {
            auto pair = figure31_pair();
            if (sublevel_membership(probe, c, pair.first) &&
                sublevel_membership(probe, c, pair.second))
                scan.injected.push_back(std::move(pair));
        }
        if (options.inject_construction) {
            for (auto& pr : construction_pairs(probe, c))
                scan.injected.push_back(std::move(pr));
        }
        for (const auto& pr : options.scan.injected) scan.injected.push_back(pr);
        rows.push_back(ThresholdRow{c, convexity_scan(probe, c, scan)});
    }
    return rows;
}

CertificateStats lemma42_certificate(const AffineProbe& probe, const Point& p,
                                     const Point& q, std::size_t n_steps) {
    CertificateStats stats;
    stats.min_sum = std::numeric_limits<double>::infinity();
    stats.max_sum = -std::numeric_limits<double>::infinity();
    GeodesicSegment seg = geodesic(p, q);
    double fp = f0_value(probe, p);
    double fq = f0_value(probe, q);
    // the Gram system of {log_y p, log_y q} is shared by every t
    TangentVec vp = log_map(probe.x0, p);
    TangentVec vq = log_map(probe.x0, q);
    double g11 = inner(vp, vp), g12 = inner(vp, vq), g22 = inner(vq, vq);
    double det = g11 * g22 - g12 * g12;
    if (det < 1e-14 * g11 * g22) {
        stats.skipped_degenerate = n_steps;
        stats.min_sum = stats.max_sum = 1.0;
        return stats;
    }
    for (std::size_t j = 1; j <= n_steps; ++j) {
        double t = static_cast<double>(j) / static_cast<double>(n_steps + 1);
        TangentVec vx = log_map(probe.x0, seg.eval(t));
        double r1 = inner(vx, vp), r2 = inner(vx, vq);
        double a = (r1 * g22 - r2 * g12) / det;
        double b = (g11 * r2 - g12 * r1) / det;
        double lhs = f0_value(probe, seg.eval(t));
        double rhs = a * fp + b * fq;
        stats.max_gap = std::max(stats.max_gap, std::abs(lhs - rhs));
        stats.min_sum = std::min(stats.min_sum, a + b);
        stats.max_sum = std::max(stats.max_sum, a + b);
        ++stats.evaluated;
    }
    return stats;
}

SampledTriangle random_triangle(const SpaceSpec& space, Rng& rng) {
    Point anchor = anchor_point(space);
    double scale;
    if (space.kappa > 0.0)
        scale = 0.28 * space.diameter_bound();
    else if (space.kappa < 0.0)
        scale = space.model_radius();
    else
        scale = 1.0;

    for (int attempt = 0; attempt < 500; ++attempt) {
        std::array<Point, 3> v;
        for (int i = 0; i < 3; ++i) {
            TangentVec dir = random_tangent_in_ball(anchor, 1.0, rng);
            double n = norm(dir);
            if (n < 1e-12) { --i; continue; }
            double radius = scale * rng.uniform(0.3, 1.0);
            v[i] = exp_map(anchor, scaled(dir, radius / n));
        }
        try {
            TriangleData tri = make_triangle(v[0], v[1], v[2]);
            if (tri.min_side() < 0.05 * scale) continue;
            if (tri.min_angle() < 0.05) continue;
            if (space.kappa > 0.0 && tri.perimeter() >= 1.9 * space.diameter_bound())
                continue;
            double t = rng.uniform01();
            if (t <= 0.0 || t >= 1.0) continue;
            return SampledTriangle{std::move(tri), t};
        } catch (const GeoaffineError&) {
            continue;
        } catch (const std::invalid_argument&) {
            continue;
        }
    }
    throw std::runtime_error("random_triangle: sampling failed to produce a valid triangle");
}

TriangleSuiteStats triangle_suite(const SpaceSpec& space, std::size_t n,
                                  std::uint64_t seed) {
    TriangleSuiteStats stats;
    stats.n = n;
    double inf = std::numeric_limits<double>::infinity();
    stats.min_a_t = stats.min_b_t = stats.min_sum_ab = inf;
    stats.max_sum_ab = -inf;
    stats.min_loc_margin = inf;
    stats.min_comparison_slack = inf;

    for (std::size_t i = 0; i < n; ++i) {
        Rng rng = Rng::for_sample(seed, i);
        SampledTriangle sample = random_triangle(space, rng);
        const auto& v = sample.tri.vertices;

        ComboCoefficients combo = lemma42_coefficients(v[0], v[1], v[2], sample.t);
        stats.min_a_t = std::min(stats.min_a_t, combo.a_t);
        stats.min_b_t = std::min(stats.min_b_t, combo.b_t);
        stats.min_sum_ab = std::min(stats.min_sum_ab, combo.a_t + combo.b_t);
        stats.max_sum_ab = std::max(stats.max_sum_ab, combo.a_t + combo.b_t);
        stats.max_span_residual = std::max(stats.max_span_residual, combo.span_residual);

        LawOfCosinesReport loc = law_of_cosines_check(v[0], v[1], v[2]);
        for (double d : loc.defect) {
            stats.max_abs_loc_defect = std::max(stats.max_abs_loc_defect, std::abs(d));
            if (space.kappa > 0.0)
                stats.min_loc_margin = std::min(stats.min_loc_margin, -d);
            else if (space.kappa < 0.0)
                stats.min_loc_margin = std::min(stats.min_loc_margin, d);
        }

        ComparisonTriangleResult cmp = comparison_triangle(v[0], v[1], v[2], sample.t);
        double diff = cmp.d_manifold - cmp.d_plane;
        stats.max_abs_comparison_diff = std::max(stats.max_abs_comparison_diff, std::abs(diff));
        if (space.kappa > 0.0)
            stats.min_comparison_slack = std::min(stats.min_comparison_slack, diff);
        else if (space.kappa < 0.0)
            stats.min_comparison_slack = std::min(stats.min_comparison_slack, -diff);
    }
    if (space.kappa == 0.0) {
        stats.min_loc_margin = 0.0;
        stats.min_comparison_slack = 0.0;
    }
    return stats;
}

} // namespace geoaffine
