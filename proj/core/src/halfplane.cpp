#include "geoaffine/halfplane.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "geoaffine/errors.hpp"

namespace geoaffine::hp {

namespace {

void require_half_plane(const Point& x, const char* where) {
    if (x.space.kind != SpaceKind::half_plane)
        throw std::invalid_argument(std::string(where) + ": point is not on the half plane");
}

bool vertical_pair(double x1, double y1) {
    return std::abs(x1 - y1) <= branch_rel_tol * (1.0 + std::abs(x1) + std::abs(y1));
}

// Semicircle arc with cancellation-free helpers. The parameterization is
// gamma(s) = (b - r tanh s, r / cosh s); the identity r^2 - (b-c)^2 = h_c^2
// holds for any on-circle point (c, h_c) and is what keeps the sums below
// away from catastrophic cancellation when |b| is large (near-vertical arcs).
struct Arc {
    double b, r;
    double b_minus_r, b_plus_r;

    // (t1, t2) is any point on the circle, used to form r^2 - b^2 stably
    Arc(double b_, double r_, double t1, double t2) : b(b_), r(r_) {
        double c2 = t2 * t2 + t1 * (t1 - 2.0 * b); // r^2 - b^2
        b_minus_r = (b <= 0.0) ? b - r : -c2 / (r + b);
        b_plus_r = (b >= 0.0) ? b + r : c2 / (r - b);
    }

    // r + (b - c) for an on-circle point (c, h); quotient form when b - c < 0
    double r_plus_bmc(double c, double h) const {
        double bmc = b - c;
        if (bmc >= 0.0) return r + bmc;
        return h * h / (r - bmc);
    }

    // arc parameter of the on-circle point (c, h): artanh((b-c)/r)
    double param_of(double c, double h) const {
        return std::log(r_plus_bmc(c, h) / h);
    }

    double first(double s) const {
        if (s >= 0.0) {
            double q = std::exp(-2.0 * s);
            return b_minus_r + 2.0 * r * q / (1.0 + q);
        }
        double q = std::exp(2.0 * s);
        return b_plus_r - 2.0 * r * q / (1.0 + q);
    }

    double second(double s) const { return r / std::cosh(s); }

    Point point_at(double s, const SpaceSpec& space) const {
        return Point{space, {first(s), second(s)}};
    }
};

Arc arc_through(const Point& x, const Point& y) {
    double x1 = x.coords[0], x2 = x.coords[1];
    double y1 = y.coords[0], y2 = y.coords[1];
    // difference form of (x1^2 + x2^2 - y1^2 - y2^2) / (2 (x1 - y1)); exact
    // differences keep the center accurate for nearby endpoints
    double dx = x1 - y1, dy = x2 - y2;
    double b = ((x1 + y1) * dx + (x2 + y2) * dy) / (2.0 * dx);
    double r = std::hypot(x1 - b, x2);
    return Arc(b, r, x1, x2);
}

} // namespace

double artanh(double u) {
    u = std::clamp(u, -(1.0 - 1e-15), 1.0 - 1e-15);
    return 0.5 * std::log((1.0 + u) / (1.0 - u));
}

GeodesicParams geodesic_params(const Point& x, const Point& y) {
    require_half_plane(x, "geodesic_params");
    require_half_plane(y, "geodesic_params");
    double x1 = x.coords[0], x2 = x.coords[1];
    double y1 = y.coords[0], y2 = y.coords[1];
    if (x1 == y1 && x2 == y2)
        throw CoincidentPointsError("geodesic_params: points coincide");
    if (vertical_pair(x1, y1)) {
        if (std::abs(x2 - y2) <= 1e-15 * (x2 + y2))
            throw CoincidentPointsError("geodesic_params: points coincide within tolerance");
        return GeodesicParams{GeodesicParams::Kind::vertical_line, x1, 0.0, 0.0};
    }
    Arc arc = arc_through(x, y);
    return GeodesicParams{GeodesicParams::Kind::semicircle, 0.0, arc.b, arc.r};
}

ChristoffelTable christoffel(double /*t1*/, double t2) {
    double inv = 1.0 / t2;
    return ChristoffelTable{
        0.0, -inv, -inv, 0.0, // ^1_{11}, ^1_{12}, ^1_{21}, ^1_{22}
        inv, 0.0, 0.0, -inv,  // ^2_{11}, ^2_{12}, ^2_{21}, ^2_{22}
    };
}

VectorField2 VectorField2::with_fd_partials(double h) const {
    VectorField2 out;
    out.x1 = x1;
    out.x2 = x2;
    Fn f1 = x1, f2 = x2;
    out.d1_x1 = [f1, h](double t1, double t2) { return (f1(t1 + h, t2) - f1(t1 - h, t2)) / (2.0 * h); };
    out.d2_x1 = [f1, h](double t1, double t2) { return (f1(t1, t2 + h) - f1(t1, t2 - h)) / (2.0 * h); };
    out.d1_x2 = [f2, h](double t1, double t2) { return (f2(t1 + h, t2) - f2(t1 - h, t2)) / (2.0 * h); };
    out.d2_x2 = [f2, h](double t1, double t2) { return (f2(t1, t2 + h) - f2(t1, t2 - h)) / (2.0 * h); };
    return out;
}

VectorField2 constant_field(double c1, double c2) {
    auto zero = [](double, double) { return 0.0; };
    VectorField2 f;
    f.x1 = [c1](double, double) { return c1; };
    f.x2 = [c2](double, double) { return c2; };
    f.d1_x1 = f.d2_x1 = f.d1_x2 = f.d2_x2 = zero;
    return f;
}

VectorField2 coordinate_field(int i) {
    if (i != 1 && i != 2) throw std::invalid_argument("coordinate_field: i must be 1 or 2");
    return i == 1 ? constant_field(1.0, 0.0) : constant_field(0.0, 1.0);
}

VectorField2 geodesic_tangent_field(const GeodesicParams& params) {
    auto zero = [](double, double) { return 0.0; };
    VectorField2 f;
    if (params.kind == GeodesicParams::Kind::vertical_line) {
        f.x1 = zero;
        f.x2 = [](double, double t2) { return t2; };
        f.d1_x1 = f.d2_x1 = f.d1_x2 = zero;
        f.d2_x2 = [](double, double) { return 1.0; };
        return f;
    }
    double b = params.b, r = params.r;
    f.x1 = [r](double, double t2) { return -t2 * t2 / r; };
    f.x2 = [b, r](double t1, double t2) { return -t2 * (b - t1) / r; };
    f.d1_x1 = zero;
    f.d2_x1 = [r](double, double t2) { return -2.0 * t2 / r; };
    f.d1_x2 = [r](double, double t2) { return t2 / r; };
    f.d2_x2 = [b, r](double t1, double) { return -(b - t1) / r; };
    return f;
}

VectorField2 gradient_field(const ScalarField2& f, double fd_step) {
    ScalarField2 g = f;
    VectorField2 out;
    if (g.has_partials()) {
        out.x1 = [g](double t1, double t2) { return t2 * t2 * g.d1(t1, t2); };
        out.x2 = [g](double t1, double t2) { return t2 * t2 * g.d2(t1, t2); };
    } else {
        double h = fd_step;
        out.x1 = [g, h](double t1, double t2) {
            return t2 * t2 * (g.value(t1 + h, t2) - g.value(t1 - h, t2)) / (2.0 * h);
        };
        out.x2 = [g, h](double t1, double t2) {
            return t2 * t2 * (g.value(t1, t2 + h) - g.value(t1, t2 - h)) / (2.0 * h);
        };
    }
    return out.with_fd_partials(fd_step);
}

TangentVec connection_apply(const VectorField2& X, const VectorField2& Y, const Point& x) {
    require_half_plane(x, "connection_apply");
    if (!X.has_partials())
        throw MissingPartialsError("connection_apply: field X carries no analytic partials");
    double t1 = x.coords[0], t2 = x.coords[1];
    double X1 = X.x1(t1, t2), X2 = X.x2(t1, t2);
    double Y1 = Y.x1(t1, t2), Y2 = Y.x2(t1, t2);
    double c1 = Y1 * X.d1_x1(t1, t2) + Y2 * X.d2_x1(t1, t2) - (X1 * Y2 + X2 * Y1) / t2;
    double c2 = Y1 * X.d1_x2(t1, t2) + Y2 * X.d2_x2(t1, t2) + (X1 * Y1 - X2 * Y2) / t2;
    return TangentVec{x, {c1, c2}};
}

std::pair<double, double> transport_ode_residual(const VectorField2& X,
                                                 const GeodesicParams& params, double s) {
    double g1, g2, v1, v2;
    if (params.kind == GeodesicParams::Kind::vertical_line) {
        g1 = params.a;
        g2 = std::exp(s);
        v1 = 0.0;
        v2 = g2;
    } else {
        double ch = std::cosh(s);
        g1 = params.b - params.r * std::tanh(s);
        g2 = params.r / ch;
        v1 = -params.r / (ch * ch);
        v2 = -params.r * std::sinh(s) / (ch * ch);
    }
    double X1 = X.x1(g1, g2), X2 = X.x2(g1, g2);
    double dX1, dX2;
    if (X.has_partials()) {
        dX1 = X.d1_x1(g1, g2) * v1 + X.d2_x1(g1, g2) * v2;
        dX2 = X.d1_x2(g1, g2) * v1 + X.d2_x2(g1, g2) * v2;
    } else {
        // differentiate X along the curve directly
        const double ds = 1e-6;
        auto at = [&](double sp) {
            double a1, a2;
            if (params.kind == GeodesicParams::Kind::vertical_line) {
                a1 = params.a;
                a2 = std::exp(sp);
            } else {
                a1 = params.b - params.r * std::tanh(sp);
                a2 = params.r / std::cosh(sp);
            }
            return std::pair<double, double>{X.x1(a1, a2), X.x2(a1, a2)};
        };
        auto [p1, p2] = at(s + ds);
        auto [m1, m2] = at(s - ds);
        dX1 = (p1 - m1) / (2.0 * ds);
        dX2 = (p2 - m2) / (2.0 * ds);
    }
    double r1 = dX1 - (X1 * v2 + X2 * v1) / g2;
    double r2 = dX2 + (X1 * v1 - X2 * v2) / g2;
    return {r1, r2};
}

TangentVec gradient(const ScalarField2& f, const Point& x, double fd_step) {
    require_half_plane(x, "gradient");
    double t1 = x.coords[0], t2 = x.coords[1];
    double d1, d2;
    if (f.has_partials()) {
        d1 = f.d1(t1, t2);
        d2 = f.d2(t1, t2);
    } else {
        d1 = (f.value(t1 + fd_step, t2) - f.value(t1 - fd_step, t2)) / (2.0 * fd_step);
        d2 = (f.value(t1, t2 + fd_step) - f.value(t1, t2 - fd_step)) / (2.0 * fd_step);
    }
    return TangentVec{x, {t2 * t2 * d1, t2 * t2 * d2}};
}

double curl_oneform(const VectorField2& X, const Point& x) {
    require_half_plane(x, "curl_oneform");
    if (!X.has_partials())
        throw MissingPartialsError("curl_oneform: field carries no analytic partials");
    double t1 = x.coords[0], t2 = x.coords[1];
    // d/dt1 (X2/t2^2) - d/dt2 (X1/t2^2)
    return (X.d1_x2(t1, t2) - X.d2_x1(t1, t2) + 2.0 * X.x1(t1, t2) / t2) / (t2 * t2);
}

double distance_closed_form(const Point& x, const Point& y) {
    double d1 = x.coords[0] - y.coords[0];
    double d2 = x.coords[1] - y.coords[1];
    double chord = std::hypot(d1, d2);
    return 2.0 * std::asinh(0.5 * chord / std::sqrt(x.coords[1] * y.coords[1]));
}

TangentVec log_closed_form(const Point& x, const Point& y) {
    require_half_plane(x, "log_closed_form");
    require_half_plane(y, "log_closed_form");
    double x1 = x.coords[0], x2 = x.coords[1];
    double y1 = y.coords[0], y2 = y.coords[1];
    if (vertical_pair(x1, y1))
        return TangentVec{x, {0.0, x2 * std::log(y2 / x2)}};
    Arc arc = arc_through(x, y);
    double delta = std::log(y2 * arc.r_plus_bmc(x1, x2) / (x2 * arc.r_plus_bmc(y1, y2)));
    double scale = x2 / arc.r * delta;
    return TangentVec{x, {scale * x2, scale * (arc.b - x1)}};
}

Point exp_closed_form(const Point& x, const TangentVec& v) {
    require_half_plane(x, "exp_closed_form");
    double x1 = x.coords[0], x2 = x.coords[1];
    double v1 = v.comps[0], v2 = v.comps[1];
    double len = std::hypot(v1, v2);
    if (len == 0.0) return x;
    double speed = len / x2; // metric norm
    if (std::abs(v1) <= branch_rel_tol * len) {
        double sgn = (v2 >= 0.0) ? 1.0 : -1.0;
        return Point{x.space, {x1, x2 * std::exp(sgn * speed)}};
    }
    double b = x1 + v2 * x2 / v1;
    double r = std::hypot(x1 - b, x2);
    Arc arc(b, r, x1, x2);
    double s0 = arc.param_of(x1, x2);
    double s1 = s0 - ((v1 > 0.0) ? speed : -speed);
    return arc.point_at(s1, x.space);
}

TangentVec transport_frame(const Point& x, const Point& y, const TangentVec& v) {
    require_half_plane(x, "transport_frame");
    require_half_plane(y, "transport_frame");
    TangentVec lxy = log_closed_form(x, y);
    double x2 = x.coords[1], y2 = y.coords[1];
    double d = std::hypot(lxy.comps[0], lxy.comps[1]) / x2;
    if (d < 1e-15) return TangentVec{y, v.comps};
    // metric-orthonormal frame (tangent, normal) at both endpoints; parallel
    // transport preserves the coefficients because the tangent is parallel
    // and the metric is conformal.
    double T1 = lxy.comps[0] / (d * x2), T2 = lxy.comps[1] / (d * x2);
    double a = (v.comps[0] * T1 + v.comps[1] * T2) / x2;
    double bcoef = (v.comps[0] * -T2 + v.comps[1] * T1) / x2;
    TangentVec lyx = log_closed_form(y, x);
    double dy = std::hypot(lyx.comps[0], lyx.comps[1]) / y2;
    double U1 = -lyx.comps[0] / (dy * y2), U2 = -lyx.comps[1] / (dy * y2);
    return TangentVec{y, {y2 * (a * U1 + bcoef * -U2), y2 * (a * U2 + bcoef * U1)}};
}

Point geodesic_point(const Point& x, const Point& y, double s) {
    require_half_plane(x, "geodesic_point");
    require_half_plane(y, "geodesic_point");
    double x1 = x.coords[0], x2 = x.coords[1];
    double y1 = y.coords[0], y2 = y.coords[1];
    if (vertical_pair(x1, y1)) {
        double t2 = std::exp((1.0 - s) * std::log(x2) + s * std::log(y2));
        return Point{x.space, {x1, t2}};
    }
    Arc arc = arc_through(x, y);
    double alpha = arc.param_of(x1, x2);
    double beta = arc.param_of(y1, y2);
    return arc.point_at((1.0 - s) * alpha + s * beta, x.space);
}

std::array<double, 2> geodesic_velocity(const Point& x, const Point& y, double s) {
    double x1 = x.coords[0], x2 = x.coords[1];
    double y1 = y.coords[0], y2 = y.coords[1];
    if (vertical_pair(x1, y1)) {
        double m = std::log(y2 / x2);
        double t2 = std::exp((1.0 - s) * std::log(x2) + s * std::log(y2));
        return {0.0, t2 * m};
    }
    Arc arc = arc_through(x, y);
    double alpha = arc.param_of(x1, x2);
    double beta = arc.param_of(y1, y2);
    double A = (1.0 - s) * alpha + s * beta;
    double dA = beta - alpha;
    double ch = std::cosh(A);
    return {-arc.r * dA / (ch * ch), -arc.r * dA * std::sinh(A) / (ch * ch)};
}

TangentVec transport_rk4(const Point& x, const Point& y, const TangentVec& v, int steps) {
    require_half_plane(x, "transport_rk4");
    require_half_plane(y, "transport_rk4");
    if (steps < 1) throw std::invalid_argument("transport_rk4: steps must be >= 1");
    for (int i = 0; i < 2; ++i) {
        if (std::abs(v.base.coords[i] - x.coords[i]) >
            1e-9 * (1.0 + std::abs(x.coords[i])))
            throw BaseMismatchError("transport_rk4: vector is not anchored at the start point");
    }
    double x1 = x.coords[0], x2 = x.coords[1];
    double y1 = y.coords[0], y2 = y.coords[1];
    if (x1 == y1 && x2 == y2) return TangentVec{y, v.comps};

    // position/velocity of the joining geodesic at curve parameter s in [0,1]
    std::function<void(double, double&, double&, double&, double&)> eval;
    if (vertical_pair(x1, y1)) {
        double m = std::log(y2 / x2);
        eval = [=](double s, double& g1, double& g2, double& w1, double& w2) {
            g1 = x1;
            g2 = std::exp((1.0 - s) * std::log(x2) + s * std::log(y2));
            w1 = 0.0;
            w2 = g2 * m;
        };
    } else {
        Arc arc = arc_through(x, y);
        double alpha = arc.param_of(x1, x2);
        double beta = arc.param_of(y1, y2);
        double dA = beta - alpha;
        eval = [=](double s, double& g1, double& g2, double& w1, double& w2) {
            double A = (1.0 - s) * alpha + s * beta;
            double ch = std::cosh(A);
            g1 = arc.first(A);
            g2 = arc.r / ch;
            w1 = -arc.r * dA / (ch * ch);
            w2 = -arc.r * dA * std::sinh(A) / (ch * ch);
        };
    }

    auto rhs = [&eval](double s, double X1, double X2, double& f1, double& f2) {
        double g1, g2, w1, w2;
        eval(s, g1, g2, w1, w2);
        (void)g1;
        f1 = (X1 * w2 + X2 * w1) / g2;
        f2 = (-X1 * w1 + X2 * w2) / g2;
    };

    double h = 1.0 / steps;
    double X1 = v.comps[0], X2 = v.comps[1];
    for (int i = 0; i < steps; ++i) {
        double s = i * h;
        double k11, k12, k21, k22, k31, k32, k41, k42;
        rhs(s, X1, X2, k11, k12);
        rhs(s + 0.5 * h, X1 + 0.5 * h * k11, X2 + 0.5 * h * k12, k21, k22);
        rhs(s + 0.5 * h, X1 + 0.5 * h * k21, X2 + 0.5 * h * k22, k31, k32);
        rhs(s + h, X1 + h * k31, X2 + h * k32, k41, k42);
        X1 += h / 6.0 * (k11 + 2.0 * k21 + 2.0 * k31 + k41);
        X2 += h / 6.0 * (k12 + 2.0 * k22 + 2.0 * k32 + k42);
    }
    return TangentVec{y, {X1, X2}};
}

} // namespace geoaffine::hp
