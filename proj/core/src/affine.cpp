#include "geoaffine/affine.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "geoaffine/errors.hpp"

namespace geoaffine {

namespace {

// Below this the closed forms degenerate to the exact axis values; the
// neglected terms are O(t1) and far below every stated tolerance.
constexpr double axis_cut = 1e-150;

template <class T> double re_of(const T& x) { return x; }
double re_of(const std::complex<double>& x) { return x.real(); }

// f0 of the standard probe, templated so the same stable arrangement can be
// evaluated with a complex step. The circle through (t1, t2) and (0, 1)
// satisfies r^2 - b^2 = 1 and r^2 - (b - t1)^2 = t2^2; the quotient forms
// keep r + b and r + b - t1 away from cancellation on near-vertical arcs.
template <class T>
T std_f0_impl(T t1, T t2) {
    using std::log;
    using std::sqrt;
    if (std::abs(re_of(t1)) <= axis_cut) return log(t2);
    T b = (t1 * t1 + t2 * t2 - 1.0) / (2.0 * t1);
    T r = sqrt(b * b + 1.0);
    T rpb = re_of(b) >= 0.0 ? r + b : 1.0 / (r - b);
    T bmt = b - t1;
    T rpbt = re_of(bmt) >= 0.0 ? r + bmt : t2 * t2 / (r - bmt);
    return b / r * log(rpb * t2 / rpbt);
}

template <class T>
void std_x0_impl(T t1, T t2, T& X1, T& X2) {
    if (std::abs(re_of(t1)) <= axis_cut) {
        X1 = T(0.0);
        X2 = t2;
        return;
    }
    T b = (t1 * t1 + t2 * t2 - 1.0) / (2.0 * t1);
    T q = b * b + 1.0;
    X1 = (b * t2 * t2 - t2 * (b - t1)) / q;
    X2 = (b * t2 * (b - t1) + t2 * t2) / q;
}

double std_f0(double t1, double t2) { return std_f0_impl(t1, t2); }

void std_x0(double t1, double t2, double& X1, double& X2) {
    std_x0_impl(t1, t2, X1, X2);
}

// Partials by complex-step differentiation: no subtraction, so the
// derivatives inherit the value computation's conditioning everywhere,
// including arbitrarily close to the vertical axis.
constexpr double cstep = 1e-100;
using Cplx = std::complex<double>;

void std_f0_partials(double t1, double t2, double& d1, double& d2) {
    if (std::abs(t1) <= axis_cut) {
        d1 = 0.0; // f0 is even in t1
        d2 = 1.0 / t2;
        return;
    }
    d1 = std_f0_impl(Cplx(t1, cstep), Cplx(t2, 0.0)).imag() / cstep;
    d2 = std_f0_impl(Cplx(t1, 0.0), Cplx(t2, cstep)).imag() / cstep;
}

void std_x0_partials(double t1, double t2, double& d1X1, double& d2X1,
                     double& d1X2, double& d2X2) {
    if (std::abs(t1) <= axis_cut) {
        // limits of the closed form: X1 ~ 2 t1 t2 / (1 + t2), X2 ~ t2
        d1X1 = 2.0 * t2 / (1.0 + t2);
        d2X1 = 0.0;
        d1X2 = 0.0;
        d2X2 = 1.0;
        return;
    }
    Cplx X1, X2;
    std_x0_impl(Cplx(t1, cstep), Cplx(t2, 0.0), X1, X2);
    d1X1 = X1.imag() / cstep;
    d1X2 = X2.imag() / cstep;
    std_x0_impl(Cplx(t1, 0.0), Cplx(t2, cstep), X1, X2);
    d2X1 = X1.imag() / cstep;
    d2X2 = X2.imag() / cstep;
}

void require_space(const Point& x, SpaceKind kind, const char* where) {
    if (x.space.kind != kind)
        throw std::invalid_argument(std::string(where) + ": wrong model space");
}

} // namespace

AffineProbe make_probe(Point x0, TangentVec u0) {
    if (u0.base.space != x0.space)
        throw std::invalid_argument("make_probe: u0 lives on a different space");
    AffineProbe probe{std::move(x0), std::move(u0)};
    if (!(norm(probe.u0) > 0.0))
        throw std::invalid_argument("make_probe: u0 must be nonzero");
    // re-anchor check
    TangentVec anchored{probe.x0, probe.u0.comps};
    (void)inner(anchored, anchored);
    for (std::size_t i = 0; i < probe.x0.coords.size(); ++i)
        if (probe.u0.base.coords[i] != probe.x0.coords[i])
            throw std::invalid_argument("make_probe: u0 is not anchored at x0");
    return probe;
}

AffineProbe standard_halfplane_probe() {
    Point x0 = make_point(SpaceSpec::half_plane(), {0.0, 1.0});
    TangentVec u0 = make_tangent(x0, {0.0, 1.0});
    return AffineProbe{std::move(x0), std::move(u0)};
}

bool is_standard_halfplane_probe(const AffineProbe& probe) {
    return probe.space().kind == SpaceKind::half_plane &&
           probe.x0.coords[0] == 0.0 && probe.x0.coords[1] == 1.0 &&
           probe.u0.comps[0] == 0.0 && probe.u0.comps[1] == 1.0;
}

double f0_value(const AffineProbe& probe, const Point& x) {
    const SpaceSpec& space = probe.space();
    if (space.kappa > 0.0) {
        double d = distance(probe.x0, x);
        if (!(d < 0.5 * space.diameter_bound()))
            return std::numeric_limits<double>::infinity();
    }
    return inner(probe.u0, log_map(probe.x0, x));
}

double f0_closed_form_hp(const Point& x) {
    require_space(x, SpaceKind::half_plane, "f0_closed_form_hp");
    return std_f0(x.coords[0], x.coords[1]);
}

TangentVec transport_field(const AffineProbe& probe, const Point& x) {
    return transport(probe.x0, x, probe.u0);
}

hp::VectorField2 standard_field_hp() {
    hp::VectorField2 f;
    f.x1 = [](double t1, double t2) {
        double X1, X2;
        std_x0(t1, t2, X1, X2);
        return X1;
    };
    f.x2 = [](double t1, double t2) {
        double X1, X2;
        std_x0(t1, t2, X1, X2);
        return X2;
    };
    f.d1_x1 = [](double t1, double t2) {
        double a, b, c, d;
        std_x0_partials(t1, t2, a, b, c, d);
        return a;
    };
    f.d2_x1 = [](double t1, double t2) {
        double a, b, c, d;
        std_x0_partials(t1, t2, a, b, c, d);
        return b;
    };
    f.d1_x2 = [](double t1, double t2) {
        double a, b, c, d;
        std_x0_partials(t1, t2, a, b, c, d);
        return c;
    };
    f.d2_x2 = [](double t1, double t2) {
        double a, b, c, d;
        std_x0_partials(t1, t2, a, b, c, d);
        return d;
    };
    return f;
}

hp::ScalarField2 standard_f0_field_hp() {
    hp::ScalarField2 f;
    f.value = [](double t1, double t2) { return std_f0(t1, t2); };
    f.d1 = [](double t1, double t2) {
        double d1, d2;
        std_f0_partials(t1, t2, d1, d2);
        return d1;
    };
    f.d2 = [](double t1, double t2) {
        double d1, d2;
        std_f0_partials(t1, t2, d1, d2);
        return d2;
    };
    return f;
}

TangentVec gradient_fd(const ScalarFn& f, const Point& x, double h) {
    if (h < 1e-12) throw StepTooSmallError("gradient_fd: h below 1e-12");
    std::vector<TangentVec> basis = orthonormal_basis(x);
    std::vector<double> out(x.coords.size(), 0.0);
    for (const TangentVec& e : basis) {
        double fp = f(exp_map(x, scaled(e, h)));
        double fm = f(exp_map(x, scaled(e, -h)));
        double g = (fp - fm) / (2.0 * h);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += g * e.comps[i];
    }
    return TangentVec{x, std::move(out)};
}

double hessian_probe(const ScalarFn& f, const Point& x, const TangentVec& v,
                     double h) {
    if (h < 1e-12) throw StepTooSmallError("hessian_probe: h below 1e-12");
    double fp = f(exp_map(x, scaled(v, h)));
    double fm = f(exp_map(x, scaled(v, -h)));
    return (fp - 2.0 * f(x) + fm) / (h * h);
}

std::string to_string(Verdict v) {
    return v == Verdict::holds ? "Holds" : "Violated";
}

Point RegionSampler::sample(std::uint64_t index) const {
    Rng rng = Rng::for_sample(seed, index);
    return random_point_in_ball(center, radius, rng);
}

std::pair<Point, Point> RegionSampler::sample_pair(std::uint64_t index) const {
    Rng rng = Rng::for_sample(seed, index);
    Point a = random_point_in_ball(center, radius, rng);
    Point b = random_point_in_ball(center, radius, rng);
    return {std::move(a), std::move(b)};
}

double default_sample_radius(const SpaceSpec& space) {
    if (space.kappa > 0.0) return 0.95 * 0.5 * space.diameter_bound();
    if (space.kappa < 0.0) return 3.0 / std::sqrt(-space.kappa);
    return 3.0;
}

RegionSampler default_sampler(const AffineProbe& probe, std::uint64_t seed) {
    return RegionSampler{probe.x0, default_sample_radius(probe.space()), seed};
}

CheckReport check_transport_commutation(const AffineProbe& probe,
                                        const RegionSampler& sampler,
                                        std::size_t n, double tol) {
    CheckReport report;
    report.property = "transport_commutation";
    report.samples = n;
    report.tolerance = tol;
    for (std::size_t i = 0; i < n; ++i) {
        auto [z, x] = sampler.sample_pair(i);
        TangentVec direct = transport(probe.x0, x, probe.u0);
        TangentVec via = transport(z, x, transport(probe.x0, z, probe.u0));
        double res = norm(subtracted(direct, via));
        if (res > report.max_residual) {
            report.max_residual = res;
            report.worst_sample = {z, x};
        }
    }
    report.verdict = report.max_residual > tol ? Verdict::violated : Verdict::holds;
    return report;
}

CheckReport check_gradient_field(const AffineProbe& probe,
                                 const RegionSampler& sampler, std::size_t n,
                                 double tol, double h) {
    CheckReport report;
    report.property = "gradient_field";
    report.samples = n;
    report.tolerance = tol;
    bool standard = is_standard_halfplane_probe(probe);
    hp::ScalarField2 closed;
    if (standard) closed = standard_f0_field_hp();
    ScalarFn f = [&probe](const Point& p) { return f0_value(probe, p); };
    for (std::size_t i = 0; i < n; ++i) {
        Point x = sampler.sample(i);
        TangentVec field = transport_field(probe, x);
        double res = norm(subtracted(gradient_fd(f, x, h), field));
        if (standard)
            res = std::max(res, norm(subtracted(hp::gradient(closed, x), field)));
        if (res > report.max_residual) {
            report.max_residual = res;
            report.worst_sample = {x};
        }
    }
    report.verdict = report.max_residual > tol ? Verdict::violated : Verdict::holds;
    if (standard) report.note = "residual is the max of the FD and closed-form gradient routes";
    return report;
}

CheckReport check_affine_formula(const ScalarFn& f, const Point& x0,
                                 const RegionSampler& sampler, std::size_t n,
                                 double tol, double h) {
    CheckReport report;
    report.property = "affine_formula";
    report.samples = n;
    report.tolerance = tol;
    TangentVec u0 = gradient_fd(f, x0, h);
    if (norm(u0) < 1e-12) report.note = "gradient at x0 is zero";
    double f_at_x0 = f(x0);
    for (std::size_t i = 0; i < n; ++i) {
        Point x = sampler.sample(i);
        double res = std::abs(f(x) - f_at_x0 - inner(u0, log_map(x0, x)));
        if (res > report.max_residual) {
            report.max_residual = res;
            report.worst_sample = {x};
        }
    }
    report.verdict = report.max_residual > tol ? Verdict::violated : Verdict::holds;
    return report;
}

namespace {

AssertionCheck near(std::string label, double computed, double expected, double tol) {
    AssertionCheck c;
    c.label = std::move(label);
    c.computed = computed;
    c.expected = expected;
    c.tolerance = tol;
    c.pass = std::abs(computed - expected) <= tol;
    return c;
}

AssertionCheck exceeds(std::string label, double computed, double threshold) {
    AssertionCheck c;
    c.label = std::move(label);
    c.computed = computed;
    c.expected = threshold;
    c.tolerance = 0.0;
    c.pass = computed > threshold;
    return c;
}

} // namespace

CounterexampleReport counterexample_suite(double numeric_tol) {
    CounterexampleReport report;
    AffineProbe probe = standard_halfplane_probe();
    const SpaceSpec H = SpaceSpec::half_plane();
    const double analytic_tol = 1e-9;

    // expected constants, from the defining expressions
    const double s5 = std::sqrt(5.0);
    const double level_x = -(1.0 / s5) * (std::atanh(2.0 / s5) - std::atanh(1.0 / s5));
    const double level_mid = std::log(1.0 / std::sqrt(2.0));
    const double gl = std::sqrt(2.0) / 8.0 * std::log(3.0 + 2.0 * std::sqrt(2.0));

    Point xi = make_point(H, {0.5, 0.5});
    Point yi = make_point(H, {-0.5, 0.5});
    Point z = make_point(H, {2.0, 1.0});

    { // (i) sub-level set L_{-0.4} is not convex
        AssertionResult a;
        a.id = "i";
        a.description = "f0 is not quasi-convex: chord of L_{-0.4} leaves the set";
        a.checks.push_back(near("f0(1/2,1/2) closed form", f0_closed_form_hp(xi), level_x, analytic_tol));
        a.checks.push_back(near("f0(1/2,1/2) log route", f0_value(probe, xi), level_x, analytic_tol));
        a.checks.push_back(near("f0(-1/2,1/2) closed form", f0_closed_form_hp(yi), level_x, analytic_tol));
        Point mid = geodesic(xi, yi).eval(0.5);
        double mid_dev = std::max(std::abs(mid.coords[0]),
                                  std::abs(mid.coords[1] - 1.0 / std::sqrt(2.0)));
        a.checks.push_back(near("midpoint = (0, 1/sqrt(2))", mid_dev, 0.0, 1e-12));
        a.checks.push_back(near("f0(midpoint)", f0_value(probe, mid), level_mid, 1e-12));
        a.checks.push_back(exceeds("membership margin at endpoints", -0.4 - f0_value(probe, xi), 0.0));
        a.checks.push_back(exceeds("violation margin at midpoint", f0_value(probe, mid) + 0.4, 0.0));
        report.assertions.push_back(std::move(a));
    }
    { // (ii) grad f0 != X0 at z = (2,1)
        AssertionResult a;
        a.id = "ii";
        a.description = "grad f0 and X0 disagree at z = (2,1)";
        TangentVec grad_an = hp::gradient(standard_f0_field_hp(), z);
        a.checks.push_back(near("grad f0(z)[1] analytic", grad_an.comps[0], gl + 0.5, analytic_tol));
        a.checks.push_back(near("grad f0(z)[2] analytic", grad_an.comps[1], gl - 0.5, analytic_tol));
        TangentVec grad_fd = gradient_fd(
            [&probe](const Point& p) { return f0_value(probe, p); }, z);
        a.checks.push_back(near("grad f0(z)[1] central differences", grad_fd.comps[0], gl + 0.5, numeric_tol));
        a.checks.push_back(near("grad f0(z)[2] central differences", grad_fd.comps[1], gl - 0.5, numeric_tol));
        hp::VectorField2 X0 = standard_field_hp();
        a.checks.push_back(near("X0(z)[1] closed form", X0.x1(2.0, 1.0), 1.0, analytic_tol));
        a.checks.push_back(near("X0(z)[2] closed form", X0.x2(2.0, 1.0), 0.0, analytic_tol));
        TangentVec rk4 = hp::transport_rk4(probe.x0, z, probe.u0, 1024);
        a.checks.push_back(near("X0(z)[1] RK4 transport", rk4.comps[0], 1.0, analytic_tol));
        a.checks.push_back(near("X0(z)[2] RK4 transport", rk4.comps[1], 0.0, analytic_tol));
        TangentVec X0z = make_tangent(z, {X0.x1(2.0, 1.0), X0.x2(2.0, 1.0)});
        a.checks.push_back(exceeds("|grad f0(z) - X0(z)|", norm(subtracted(grad_an, X0z)), 0.1));
        report.assertions.push_back(std::move(a));
    }
    { // (iii) covariant derivative of X0 in the t1 direction at z
        AssertionResult a;
        a.id = "iii";
        a.description = "covariant derivative of X0 along d/dt1 at z equals (0, 1/2)";
        TangentVec an = hp::connection_apply(standard_field_hp(), hp::coordinate_field(1), z);
        a.checks.push_back(near("analytic [1]", an.comps[0], 0.0, analytic_tol));
        a.checks.push_back(near("analytic [2]", an.comps[1], 0.5, analytic_tol));
        hp::VectorField2 X0 = standard_field_hp();
        VectorFieldFn field = [X0](const Point& p) {
            return TangentVec{p, {X0.x1(p.coords[0], p.coords[1]),
                                  X0.x2(p.coords[0], p.coords[1])}};
        };
        TangentVec dir = make_tangent(z, {1.0, 0.0});
        TangentVec fd = covariant_derivative_fd(field, z, dir, 1e-4);
        a.checks.push_back(near("transport differences [1]", fd.comps[0], 0.0, numeric_tol));
        a.checks.push_back(near("transport differences [2]", fd.comps[1], 0.5, numeric_tol));
        report.assertions.push_back(std::move(a));
    }
    { // (iv) X0 is not a gradient field
        AssertionResult a;
        a.id = "iv";
        a.description = "curl obstruction of X0 at z equals 1/2";
        a.checks.push_back(near("curl one-form", hp::curl_oneform(standard_field_hp(), z), 0.5, analytic_tol));
        report.assertions.push_back(std::move(a));
    }

    report.all_pass = true;
    for (AssertionResult& a : report.assertions) {
        a.pass = true;
        for (const AssertionCheck& c : a.checks) a.pass = a.pass && c.pass;
        report.all_pass = report.all_pass && a.pass;
    }
    return report;
}

} // namespace geoaffine
