#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "geoaffine/affine.hpp"
#include "geoaffine/errors.hpp"
#include "geoaffine/manifold.hpp"
#include "geoaffine/serialize.hpp"

using namespace geoaffine;

namespace {

const SpaceSpec H = SpaceSpec::half_plane();
const SpaceSpec E2 = SpaceSpec::euclidean(2);

Point hpoint(double a, double b) { return make_point(H, {a, b}); }

AffineProbe probe_on(const SpaceSpec& space, Rng& rng, double u_lo = 0.5,
                     double u_hi = 1.5) {
    Point x0 = random_point_in_ball(anchor_point(space), 1.0, rng);
    TangentVec u0 = random_tangent_in_ball(x0, 1.0, rng);
    double n = norm(u0);
    if (n < 1e-6) return probe_on(space, rng, u_lo, u_hi);
    return make_probe(x0, scaled(u0, rng.uniform(u_lo, u_hi) / n));
}

constexpr double f_half = -0.430408940964004; // f0(1/2, 1/2)
constexpr double f_mid = -0.34657359027997264; // ln(1/sqrt(2))

} // namespace

TEST_CASE("probe construction") {
    AffineProbe probe = standard_halfplane_probe();
    CHECK(is_standard_halfplane_probe(probe));
    Point x0 = hpoint(0.0, 1.0);
    CHECK_THROWS_AS(make_probe(x0, make_tangent(x0, {0.0, 0.0})), std::invalid_argument);
    CHECK_THROWS_AS(make_probe(x0, make_tangent(hpoint(1.0, 1.0), {0.0, 1.0})),
                    std::invalid_argument);
}

TEST_CASE("f0 values") {
    AffineProbe probe = standard_halfplane_probe();
    CHECK(f0_value(probe, hpoint(0.5, 0.5)) == doctest::Approx(f_half).epsilon(1e-11));
    CHECK(f0_value(probe, hpoint(-0.5, 0.5)) == doctest::Approx(f_half).epsilon(1e-11));
    CHECK(f0_value(probe, hpoint(0.0, 1.0 / std::sqrt(2.0))) ==
          doctest::Approx(f_mid).epsilon(1e-13));
    CHECK(f0_value(probe, probe.x0) == 0.0);

    // outside the kappa > 0 domain ball the value is +infinity
    SpaceSpec s = SpaceSpec::sphere(1.0);
    Point np = anchor_point(s);
    AffineProbe sp = make_probe(np, make_tangent(np, {1.0, 0.0, 0.0}));
    Point far = exp_map(np, make_tangent(np, {0.0, 1.9, 0.0}));
    CHECK(std::isinf(f0_value(sp, far)));
    Point inside = exp_map(np, make_tangent(np, {0.0, 1.2, 0.0}));
    CHECK(std::isfinite(f0_value(sp, inside)));
}

TEST_CASE("f0 closed form on the half plane") {
    CHECK(f0_closed_form_hp(hpoint(2.0, 1.0)) ==
          doctest::Approx(std::sqrt(2.0) * std::log(1.0 + std::sqrt(2.0))).epsilon(1e-13));
    CHECK(f0_closed_form_hp(hpoint(0.0, std::exp(2.0))) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(f0_closed_form_hp(hpoint(-0.5, 0.5)) == doctest::Approx(f_half).epsilon(1e-11));

    AffineProbe probe = standard_halfplane_probe();
    double worst = 0.0;
    for (int rep = 0; rep < 1000; ++rep) {
        Rng rng = Rng::for_sample(606, static_cast<std::uint64_t>(rep));
        Point x = random_point_in_ball(probe.x0, 3.0, rng);
        worst = std::max(worst,
                         std::abs(f0_closed_form_hp(x) - f0_value(probe, x)));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("transport field") {
    AffineProbe probe = standard_halfplane_probe();
    TangentVec at_z = transport_field(probe, hpoint(2.0, 1.0));
    CHECK(at_z.comps[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(at_z.comps[1]) < 1e-12);

    TangentVec at_x0 = transport_field(probe, probe.x0);
    CHECK(at_x0.comps[0] == doctest::Approx(0.0));
    CHECK(at_x0.comps[1] == doctest::Approx(1.0));

    TangentVec at_half = transport_field(probe, hpoint(0.5, 0.5));
    CHECK(at_half.comps[0] == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(at_half.comps[1] == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("gradient of f0 at the base point is u0 on every space") {
    std::vector<SpaceSpec> spaces = {SpaceSpec::euclidean(2), SpaceSpec::euclidean(5),
                                     SpaceSpec::sphere(1.0), SpaceSpec::hyperbolic(-1.0),
                                     SpaceSpec::half_plane()};
    for (const SpaceSpec& space : spaces) {
        CAPTURE(to_string(space.kind));
        Rng rng(17);
        for (int rep = 0; rep < 5; ++rep) {
            AffineProbe probe = probe_on(space, rng);
            TangentVec g = gradient_fd(
                [&probe](const Point& p) { return f0_value(probe, p); }, probe.x0);
            CHECK(norm(subtracted(g, probe.u0)) < 1e-7);
        }
    }
}

TEST_CASE("transport commutation check") {
    Rng rng(5150);
    AffineProbe flat = probe_on(E2, rng);
    CheckReport holds = check_transport_commutation(flat, default_sampler(flat), 500, 1e-6);
    CHECK(holds.verdict == Verdict::holds);
    CHECK(holds.max_residual < 1e-12);

    AffineProbe hstd = standard_halfplane_probe();
    CheckReport hv = check_transport_commutation(hstd, default_sampler(hstd), 500, 1e-6);
    CHECK(hv.verdict == Verdict::violated);
    CHECK(hv.worst_sample.size() == 2);

    SpaceSpec s = SpaceSpec::sphere(1.0);
    Point np = anchor_point(s);
    AffineProbe sp = make_probe(np, make_tangent(np, {1.0, 0.0, 0.0}));
    CheckReport sv = check_transport_commutation(sp, default_sampler(sp), 500, 1e-6);
    CHECK(sv.verdict == Verdict::violated);
}

TEST_CASE("gradient field check") {
    Rng rng(6001);
    AffineProbe flat = probe_on(E2, rng);
    CheckReport holds = check_gradient_field(flat, default_sampler(flat), 200, 1e-8);
    CHECK(holds.verdict == Verdict::holds);

    AffineProbe hstd = standard_halfplane_probe();
    CheckReport hv = check_gradient_field(hstd, default_sampler(hstd), 200, 1e-6);
    CHECK(hv.verdict == Verdict::violated);

    // pointwise mismatch value at z = (2, 1): |grad f0(z) - X0(z)|
    Point z = hpoint(2.0, 1.0);
    TangentVec grad = gradient_fd(
        [&hstd](const Point& p) { return f0_value(hstd, p); }, z);
    TangentVec field = transport_field(hstd, z);
    double mismatch = norm(subtracted(grad, field));
    CHECK(mismatch == doctest::Approx(0.18838737992988474 * std::sqrt(2.0)).epsilon(1e-4));
}

TEST_CASE("affine formula check") {
    // linear functions on flat space satisfy the formula exactly
    Rng rng(7002);
    Point x0 = make_point(E2, {0.25, -0.5});
    ScalarFn lin = [](const Point& p) { return 2.0 * p.coords[0] - p.coords[1] + 0.75; };
    RegionSampler sampler{x0, 2.0, 424242};
    CheckReport holds = check_affine_formula(lin, x0, sampler, 300, 1e-9);
    CHECK(holds.verdict == Verdict::holds);

    // f0 itself is not affine on the half plane: expanding around any base
    // point other than x0 breaks the formula (at x0 it holds by definition)
    AffineProbe hstd = standard_halfplane_probe();
    ScalarFn f0 = [&hstd](const Point& p) { return f0_value(hstd, p); };
    CheckReport triv = check_affine_formula(f0, hstd.x0, default_sampler(hstd), 300, 1e-6);
    CHECK(triv.verdict == Verdict::holds);
    Point other = make_point(H, {1.0, 1.5});
    CheckReport hv = check_affine_formula(f0, other,
                                          RegionSampler{other, 1.5, 20240001ull}, 300, 1e-6);
    CHECK(hv.verdict == Verdict::violated);

    // constant functions hold with a zero-gradient note
    ScalarFn consts = [](const Point&) { return 3.25; };
    CheckReport cst = check_affine_formula(consts, x0, sampler, 50, 1e-9);
    CHECK(cst.verdict == Verdict::holds);
    CHECK(cst.note == "gradient at x0 is zero");
}

TEST_CASE("hessian probe") {
    // affine function on flat space
    Point e = make_point(E2, {0.3, 0.9});
    ScalarFn lin = [](const Point& p) { return 1.5 * p.coords[0] - 2.0 * p.coords[1]; };
    CHECK(std::abs(hessian_probe(lin, e, make_tangent(e, {0.6, 0.8}))) < 1e-8);

    // f0 on the half plane has a genuinely nonzero second derivative at z;
    // two step sizes agree, so the value is not an articraft of h
    AffineProbe hstd = standard_halfplane_probe();
    ScalarFn f0 = [&hstd](const Point& p) { return f0_value(hstd, p); };
    Point z = hpoint(2.0, 1.0);
    double h1 = hessian_probe(f0, z, make_tangent(z, {1.0, 0.0}), 1e-3);
    double h2 = hessian_probe(f0, z, make_tangent(z, {1.0, 0.0}), 5e-4);
    CHECK(std::abs(h1) > 1e-3);
    CHECK(h1 == doctest::Approx(h2).epsilon(1e-4));

    // half the squared distance has unit second derivative at the center
    for (const SpaceSpec& space : {SpaceSpec::euclidean(3), SpaceSpec::sphere(1.0),
                                   SpaceSpec::half_plane()}) {
        CAPTURE(to_string(space.kind));
        Point c = anchor_point(space);
        ScalarFn half_d2 = [&c](const Point& p) {
            double d = distance(c, p);
            return 0.5 * d * d;
        };
        std::vector<TangentVec> basis = orthonormal_basis(c);
        CHECK(hessian_probe(half_d2, c, basis[0]) == doctest::Approx(1.0).epsilon(1e-6));
    }

    CHECK_THROWS_AS(hessian_probe(lin, e, make_tangent(e, {1.0, 0.0}), 1e-13),
                    StepTooSmallError);
}

TEST_CASE("hessian of f0 vanishes on flat space") {
    Rng rng(9099);
    AffineProbe probe = probe_on(E2, rng);
    ScalarFn f0 = [&probe](const Point& p) { return f0_value(probe, p); };
    for (int rep = 0; rep < 100; ++rep) {
        Point x = random_point_in_ball(probe.x0, 2.0, rng);
        TangentVec v = random_tangent_in_ball(x, 1.0, rng);
        CHECK(std::abs(hessian_probe(f0, x, v)) < 1e-7);
    }
}

TEST_CASE("counterexample suite") {
    CounterexampleReport report = counterexample_suite();
    REQUIRE(report.assertions.size() == 4);
    for (const AssertionResult& a : report.assertions) {
        CAPTURE(a.id);
        for (const AssertionCheck& c : a.checks) {
            CAPTURE(c.label);
            CAPTURE(c.computed);
            CHECK(c.pass);
        }
        CHECK(a.pass);
    }
    CHECK(report.all_pass);

    // an unattainable numeric tolerance fails the finite-difference routes
    CounterexampleReport strict = counterexample_suite(1e-15);
    CHECK_FALSE(strict.all_pass);
    bool iii_failed = false;
    for (const AssertionResult& a : strict.assertions)
        if (a.id == "iii" && !a.pass) iii_failed = true;
    CHECK(iii_failed);

    // serialization carries one entry per assertion
    Json j = json_of(report);
    CHECK(j["schema"] == "geoaffine/1");
    CHECK(j["assertions"].size() == 4);
    CHECK(j["all_pass"] == true);
}

TEST_CASE("report serialization is stable") {
    AffineProbe flat = make_probe(make_point(E2, {0.0, 0.0}),
                                  make_tangent(make_point(E2, {0.0, 0.0}), {1.0, 0.0}));
    CheckReport r = check_transport_commutation(flat, default_sampler(flat), 10, 1e-6);
    std::string a = json_of(r).dump(2);
    std::string b = json_of(check_transport_commutation(flat, default_sampler(flat), 10, 1e-6)).dump(2);
    CHECK(a == b);
    CHECK(sig12(1.0 / 3.0) == doctest::Approx(0.333333333333).epsilon(1e-14));
    CHECK(format_sig12(-0.43040894096400404) == "-0.430408940964");
    CHECK(format_sig12(2.0) == "2");
}
