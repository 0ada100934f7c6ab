#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "geoaffine/convexity.hpp"
#include "geoaffine/errors.hpp"
#include "geoaffine/serialize.hpp"

using namespace geoaffine;

namespace {

const SpaceSpec H = SpaceSpec::half_plane();
const SpaceSpec E2 = SpaceSpec::euclidean(2);
const SpaceSpec S2 = SpaceSpec::sphere(1.0);

Point hpoint(double a, double b) { return make_point(H, {a, b}); }

AffineProbe sphere_probe() {
    Point np = anchor_point(S2);
    return make_probe(np, make_tangent(np, {1.0, 0.0, 0.0}));
}

AffineProbe euclid_probe() {
    Point o = make_point(E2, {0.0, 0.0});
    return make_probe(o, make_tangent(o, {1.0, 0.5}));
}

} // namespace

TEST_CASE("sublevel membership") {
    AffineProbe probe = standard_halfplane_probe();
    CHECK(sublevel_membership(probe, -0.4, hpoint(0.5, 0.5)));
    CHECK_FALSE(sublevel_membership(probe, -0.4, hpoint(0.0, 1.0 / std::sqrt(2.0))));
    CHECK(sublevel_membership(probe, 0.0, probe.x0));

    // the +infinity branch excludes points outside the kappa > 0 ball
    AffineProbe sp = sphere_probe();
    Point far = exp_map(sp.x0, make_tangent(sp.x0, {0.0, 1.8, 0.0}));
    CHECK_FALSE(sublevel_membership(sp, 100.0, far));
}

TEST_CASE("triangle data") {
    TriangleData tri = make_triangle(hpoint(0.0, 1.0), hpoint(2.0, 1.0), hpoint(1.0, 3.0));
    CHECK(tri.perimeter() > 0.0);
    for (double a : tri.angles) {
        CHECK(a > 0.0);
        CHECK(a < M_PI);
    }
    CHECK_THROWS_AS(make_triangle(hpoint(0.0, 1.0), hpoint(0.0, 1.0), hpoint(1.0, 1.0)),
                    DegenerateTriangleError);
    // a large but legitimate spherical triangle still constructs (minimal
    // geodesic sides keep the perimeter at or below 2 D_kappa)
    SpaceSpec big = SpaceSpec::sphere(1.0);
    Point a = make_point(big, {1.0, 0.0, 0.0});
    Point b = make_point(big, {-0.5, std::sqrt(0.75), 0.0});
    Point c = make_point(big, {-0.5, 0.0, std::sqrt(0.75)});
    TriangleData wide = make_triangle(a, b, c);
    CHECK(wide.perimeter() < 2.0 * big.diameter_bound());
}

TEST_CASE("lemma 4.2 coefficients") {
    // flat case: exact barycentric coefficients
    Point y = make_point(E2, {0.1, -0.2});
    Point p = make_point(E2, {1.5, 0.3});
    Point q = make_point(E2, {-0.4, 1.9});
    ComboCoefficients combo = lemma42_coefficients(y, p, q, 0.3);
    CHECK(combo.a_t == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(combo.b_t == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(combo.a_t + combo.b_t == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(combo.span_residual < 1e-12);

    // sphere octant: equal coefficients 1/sqrt(2), sum above one
    Point np = make_point(S2, {0.0, 0.0, 1.0});
    Point ex = make_point(S2, {1.0, 0.0, 0.0});
    Point ey = make_point(S2, {0.0, 1.0, 0.0});
    ComboCoefficients oct = lemma42_coefficients(np, ex, ey, 0.5);
    CHECK(oct.a_t == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(oct.b_t == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(oct.a_t + oct.b_t >= 1.0);
    CHECK(oct.span_residual < 1e-12);

    // the half-plane figure: sum below one, value frozen from the closed
    // forms of the log maps
    ComboCoefficients fig = lemma42_coefficients(hpoint(0.0, 1.0), hpoint(0.5, 0.5),
                                                 hpoint(-0.5, 0.5), 0.5);
    CHECK(fig.a_t == doctest::Approx(fig.b_t).epsilon(1e-12));
    CHECK(fig.a_t + fig.b_t == doctest::Approx(0.805219309579717).epsilon(1e-10));
    CHECK(fig.a_t + fig.b_t <= 1.0);

    // collinear configuration is rejected
    Point mid = geodesic(p, q).eval(0.5);
    CHECK_THROWS_AS(lemma42_coefficients(mid, p, q, 0.5), DegenerateTriangleError);
}

TEST_CASE("span residual vanishes in higher dimension") {
    // the decomposition lives in the 2-plane spanned by the log vectors,
    // which is only informative when the tangent space is bigger
    for (const SpaceSpec& space : {SpaceSpec::sphere(1.0, 3), SpaceSpec::hyperbolic(-1.0, 3),
                                   SpaceSpec::euclidean(4)}) {
        CAPTURE(to_string(space.kind));
        double worst = 0.0;
        for (int rep = 0; rep < 200; ++rep) {
            Rng rng = Rng::for_sample(1234, static_cast<std::uint64_t>(rep));
            SampledTriangle s = random_triangle(space, rng);
            ComboCoefficients combo = lemma42_coefficients(
                s.tri.vertices[0], s.tri.vertices[1], s.tri.vertices[2], s.t);
            worst = std::max(worst, combo.span_residual);
            CHECK(combo.a_t > 0.0);
            CHECK(combo.b_t > 0.0);
        }
        CHECK(worst < 1e-8);
    }
}

TEST_CASE("comparison triangle") {
    // flat: the comparison triangle is congruent
    Rng rng(4321);
    for (int rep = 0; rep < 100; ++rep) {
        SampledTriangle s = random_triangle(E2, rng);
        ComparisonTriangleResult cmp = comparison_triangle(
            s.tri.vertices[0], s.tri.vertices[1], s.tri.vertices[2], s.t);
        CHECK(std::abs(cmp.d_manifold - cmp.d_plane) < 1e-10);
    }
    // curved spaces: inequality in the curvature direction
    for (int rep = 0; rep < 200; ++rep) {
        Rng r2 = Rng::for_sample(987, static_cast<std::uint64_t>(rep));
        SampledTriangle s = random_triangle(S2, r2);
        ComparisonTriangleResult cmp = comparison_triangle(
            s.tri.vertices[0], s.tri.vertices[1], s.tri.vertices[2], s.t);
        CHECK(cmp.d_manifold >= cmp.d_plane - 1e-10);
    }
    for (int rep = 0; rep < 200; ++rep) {
        Rng r3 = Rng::for_sample(654, static_cast<std::uint64_t>(rep));
        SampledTriangle s = random_triangle(H, r3);
        ComparisonTriangleResult cmp = comparison_triangle(
            s.tri.vertices[0], s.tri.vertices[1], s.tri.vertices[2], s.t);
        CHECK(cmp.d_manifold <= cmp.d_plane + 1e-10);
    }
}

TEST_CASE("law of cosines comparison") {
    // spherical octant triangle: all sides pi/2, all angles pi/2
    Point a = make_point(S2, {0.0, 0.0, 1.0});
    Point b = make_point(S2, {1.0, 0.0, 0.0});
    Point c = make_point(S2, {0.0, 1.0, 0.0});
    LawOfCosinesReport rep = law_of_cosines_check(a, b, c);
    for (double d : rep.defect)
        CHECK(d == doctest::Approx(-(M_PI / 2.0) * (M_PI / 2.0)).epsilon(1e-12));

    // flat: equality
    Rng rng(31);
    for (int i = 0; i < 50; ++i) {
        SampledTriangle s = random_triangle(E2, rng);
        LawOfCosinesReport re = law_of_cosines_check(s.tri.vertices[0], s.tri.vertices[1],
                                                     s.tri.vertices[2]);
        for (double d : re.defect) CHECK(std::abs(d) < 1e-10);
    }

    // negatively curved: strictly positive defects
    LawOfCosinesReport rh = law_of_cosines_check(hpoint(0.0, 1.0), hpoint(2.0, 1.0),
                                                 hpoint(1.0, 3.0));
    for (double d : rh.defect) CHECK(d > 0.0);
}

TEST_CASE("convexity scan finds the figure chord") {
    AffineProbe probe = standard_halfplane_probe();
    ScanOptions opts;
    opts.n_pairs = 50;
    opts.n_steps = 64;
    opts.injected.push_back(figure31_pair());
    ConvexityReport report = convexity_scan(probe, -0.4, opts);
    REQUIRE(report.verdict == ScanVerdict::witness_found);
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->p.coords[0] == doctest::Approx(0.5));
    CHECK(report.witness->q.coords[0] == doctest::Approx(-0.5));
    CHECK(report.witness->t == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(report.witness->f0_at_witness == doctest::Approx(-0.34657359027997264).epsilon(1e-9));
    // witness invariant
    CHECK(f0_value(probe, report.witness->p) <= -0.4);
    CHECK(f0_value(probe, report.witness->q) <= -0.4);
    CHECK(report.witness->f0_at_witness > -0.4 + 1e-12);
}

TEST_CASE("flat sub-level sets have no witness") {
    AffineProbe probe = euclid_probe();
    ScanOptions opts;
    opts.n_pairs = 500;
    ConvexityReport report = convexity_scan(probe, 7.0, opts);
    CHECK(report.verdict == ScanVerdict::no_witness_at_budget);
    CHECK_FALSE(report.witness.has_value());
}

TEST_CASE("sphere witnesses via the perpendicular-chord construction") {
    AffineProbe probe = sphere_probe();
    auto pairs = construction_pairs(probe, 0.5);
    REQUIRE_FALSE(pairs.empty());
    ScanOptions opts;
    opts.n_pairs = 100;
    opts.injected = pairs;
    ConvexityReport report = convexity_scan(probe, 0.5, opts);
    CHECK(report.verdict == ScanVerdict::witness_found);

    // no construction outside the open threshold interval
    CHECK(construction_pairs(probe, -0.2).empty());
    CHECK(construction_pairs(probe, M_PI / 2.0 + 0.1).empty());
}

TEST_CASE("mirrored-chord construction on negative curvature") {
    AffineProbe probe = standard_halfplane_probe();
    for (double c : {-0.4, -1.5, -0.05}) {
        CAPTURE(c);
        auto pairs = construction_pairs(probe, c);
        REQUIRE_FALSE(pairs.empty());
        CHECK(f0_value(probe, pairs[0].first) <= c);
        CHECK(f0_value(probe, pairs[0].second) <= c);
    }
    CHECK(construction_pairs(probe, 0.1).empty());
}

TEST_CASE("empty sub-level raises") {
    AffineProbe probe = sphere_probe();
    ScanOptions opts;
    opts.n_pairs = 10;
    opts.attempt_budget = 2000;
    CHECK_THROWS_AS(convexity_scan(probe, -2.0, opts), EmptySublevelError);
}

TEST_CASE("threshold experiment on the half plane") {
    AffineProbe probe = standard_halfplane_probe();
    SweepOptions opts;
    opts.scan.n_pairs = 200;
    opts.scan.n_steps = 64;
    opts.inject_paper_points = true;
    opts.inject_construction = true;
    std::vector<ThresholdRow> rows = threshold_experiment(probe, {-0.4, 0.1}, opts);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].report.verdict == ScanVerdict::witness_found);
    // the reported witness is the paper chord
    CHECK(rows[0].report.witness->p.coords[0] == doctest::Approx(0.5));
    CHECK(rows[0].report.witness->p.coords[1] == doctest::Approx(0.5));
    CHECK(rows[0].report.witness->t == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(rows[1].report.verdict == ScanVerdict::no_witness_at_budget);

    std::string csv = csv_of(rows);
    CHECK(csv.find("c,verdict,witness_p,witness_q,t,f0_at_witness,n_pairs,seed") == 0);
    CHECK(csv.find("WitnessFound") != std::string::npos);
    CHECK(csv.find("NoWitnessAtBudget") != std::string::npos);
}

TEST_CASE("lemma 4.2 certificate bounds chord values") {
    // on the sphere with c <= 0 the decomposition certifies membership
    AffineProbe probe = sphere_probe();
    double c = -0.1;
    ScanOptions opts;
    opts.n_pairs = 50;
    ConvexityReport report = convexity_scan(probe, c, opts);
    CHECK(report.verdict == ScanVerdict::no_witness_at_budget);
    for (int rep = 0; rep < 25; ++rep) {
        Rng rng = Rng::for_sample(opts.seed, static_cast<std::uint64_t>(rep * 13));
        Point p = random_point_in_ball(probe.x0, default_sample_radius(S2), rng);
        Point q = random_point_in_ball(probe.x0, default_sample_radius(S2), rng);
        if (!sublevel_membership(probe, c, p) || !sublevel_membership(probe, c, q)) continue;
        CertificateStats cert = lemma42_certificate(probe, p, q, 32);
        if (cert.evaluated == 0) continue;
        CHECK(cert.max_gap < 1e-8);
        CHECK(cert.min_sum >= 1.0 - 1e-9);
    }
}

TEST_CASE("f0 grows linearly along the probe axis") {
    for (const SpaceSpec& space : {SpaceSpec::sphere(1.0), SpaceSpec::hyperbolic(-1.0),
                                   SpaceSpec::half_plane(), SpaceSpec::euclidean(3)}) {
        CAPTURE(to_string(space.kind));
        Rng rng(88);
        Point x0 = anchor_point(space);
        TangentVec u0 = random_tangent_in_ball(x0, 1.0, rng);
        u0 = scaled(u0, 1.3 / norm(u0));
        AffineProbe probe = make_probe(x0, u0);
        TangentVec u_hat = scaled(u0, 1.0 / norm(u0));
        double cap = space.kappa > 0.0 ? 0.49 * space.diameter_bound() : 2.5;
        for (double t = 0.1; t < cap; t += 0.2) {
            Point on_axis = exp_map(x0, scaled(u_hat, t));
            CHECK(std::abs(f0_value(probe, on_axis) - t * norm(u0)) < 1e-9 * (1.0 + t));
        }
    }
}

TEST_CASE("triangle suite statistics") {
    TriangleSuiteStats sph = triangle_suite(S2, 300, 20240001ull);
    CHECK(sph.min_a_t > 0.0);
    CHECK(sph.min_b_t > 0.0);
    CHECK(sph.min_sum_ab >= 1.0 - 1e-9);
    CHECK(sph.max_span_residual < 1e-8);
    CHECK(sph.min_loc_margin > 1e-10);
    CHECK(sph.min_comparison_slack > -1e-10);

    TriangleSuiteStats hyp = triangle_suite(H, 300, 20240001ull);
    CHECK(hyp.max_sum_ab <= 1.0 + 1e-9);
    CHECK(hyp.min_a_t > 0.0);
    CHECK(hyp.min_loc_margin > 1e-10);
    CHECK(hyp.min_comparison_slack > -1e-10);

    TriangleSuiteStats flat = triangle_suite(E2, 300, 20240001ull);
    CHECK(std::abs(flat.min_sum_ab - 1.0) < 1e-10);
    CHECK(std::abs(flat.max_sum_ab - 1.0) < 1e-10);
    CHECK(flat.max_abs_loc_defect < 1e-10);
}

TEST_CASE("scan report serialization") {
    AffineProbe probe = standard_halfplane_probe();
    ScanOptions opts;
    opts.n_pairs = 20;
    opts.injected.push_back(figure31_pair());
    ConvexityReport report = convexity_scan(probe, -0.4, opts);
    Json j = json_of(report, probe);
    CHECK(j["schema"] == "geoaffine/1");
    CHECK(j["verdict"] == "WitnessFound");
    CHECK(j["witness"]["t"].get<double>() == doctest::Approx(0.5).epsilon(1e-6));
    std::string csv = csv_of(report);
    CHECK(csv.find("0.5;0.5") != std::string::npos);
}
