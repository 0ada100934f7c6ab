#pragma once

#include <array>
#include <functional>
#include <utility>

#include "geoaffine/space.hpp"

namespace geoaffine::hp {

// Geodesics of the half plane are vertical lines and semicircles centered on
// the horizontal axis.
struct GeodesicParams {
    enum class Kind { vertical_line, semicircle };
    Kind kind = Kind::vertical_line;
    double a = 0.0; // abscissa of the vertical line
    double b = 0.0; // semicircle center
    double r = 0.0; // semicircle radius
};

// Branch switch threshold: vertical when |t1 - s1| <= rel * (1 + |t1| + |s1|).
inline constexpr double branch_rel_tol = 1e-12;

GeodesicParams geodesic_params(const Point& x, const Point& y);

// The eight connection coefficients at (t1, t2). Only three distinct values
// appear; the struct spells all of them out so tests can check the table.
struct ChristoffelTable {
    double g1_11, g1_12, g1_21, g1_22;
    double g2_11, g2_12, g2_21, g2_22;
};
ChristoffelTable christoffel(double t1, double t2);

// Smooth vector field on {t2 > 0}, components plus (optional) analytic
// partial derivatives.
struct VectorField2 {
    using Fn = std::function<double(double, double)>;
    Fn x1, x2;
    Fn d1_x1, d2_x1, d1_x2, d2_x2;

    bool has_partials() const { return d1_x1 && d2_x1 && d1_x2 && d2_x2; }
    // attach central-difference partials built from the component functions
    VectorField2 with_fd_partials(double h = 1e-6) const;
};

struct ScalarField2 {
    using Fn = std::function<double(double, double)>;
    Fn value;
    Fn d1, d2;

    bool has_partials() const { return d1 && d2; }
};

VectorField2 constant_field(double c1, double c2);
VectorField2 coordinate_field(int i); // d/dt1 for i = 1, d/dt2 for i = 2
// extension of the unit-speed geodesic velocity off its own trace
VectorField2 geodesic_tangent_field(const GeodesicParams& params);
// the field t2^2 * (df/dt1, df/dt2); partials attached when f has them
VectorField2 gradient_field(const ScalarField2& f, double fd_step = 1e-6);

// (nabla_Y X)(x) from the coordinate formula of the half-plane connection.
// Requires analytic partials of X.
TangentVec connection_apply(const VectorField2& X, const VectorField2& Y, const Point& x);

// Left-hand sides of the parallel-transport ODE system along the natural
// parameterization at parameter s; both vanish iff X is parallel there.
std::pair<double, double> transport_ode_residual(const VectorField2& X,
                                                 const GeodesicParams& params, double s);

// intrinsic gradient t2^2 * (df/dt1, df/dt2); falls back to central
// differences (step fd_step) when f carries no analytic partials
TangentVec gradient(const ScalarField2& f, const Point& x, double fd_step = 1e-6);

// d(X1/t2^2 dt1 + X2/t2^2 dt2) coefficient: the obstruction to X being a
// gradient field. Zero (identically) iff the dual one-form is closed.
double curl_oneform(const VectorField2& X, const Point& x);

// closed forms used by the generic manifold layer
double distance_closed_form(const Point& x, const Point& y);
TangentVec log_closed_form(const Point& x, const Point& y);
Point exp_closed_form(const Point& x, const TangentVec& v);
TangentVec transport_frame(const Point& x, const Point& y, const TangentVec& v);

// joining geodesic evaluated from its own closed form (not through exp/log)
Point geodesic_point(const Point& x, const Point& y, double s);
std::array<double, 2> geodesic_velocity(const Point& x, const Point& y, double s);

// parallel transport by fixed-step RK4 integration of the transport ODE along
// the joining geodesic; independent of the closed-form frame transport
TangentVec transport_rk4(const Point& x, const Point& y, const TangentVec& v,
                         int steps = 1024);

// artanh via 0.5*ln((1+u)/(1-u)) with |u| clamped to 1 - 1e-15
double artanh(double u);

} // namespace geoaffine::hp
