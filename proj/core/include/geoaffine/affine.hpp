#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "geoaffine/halfplane.hpp"
#include "geoaffine/manifold.hpp"
#include "geoaffine/space.hpp"

namespace geoaffine {

// default step for metric-dual central-difference gradients
inline constexpr double gradient_step_default = 1e-4;
// default step for the geodesic second-difference Hessian probe
inline constexpr double hessian_step_default = 1e-3;

/**
 * The probe (x0, u0) defining the transported field X0(x) = P_{x,x0} u0 and
 * the function f0(x) = <u0, log_{x0} x>. u0 must be nonzero.
 */
struct AffineProbe {
    Point x0;
    TangentVec u0;

    const SpaceSpec& space() const { return x0.space; }
};

AffineProbe make_probe(Point x0, TangentVec u0);
// the probe of the half-plane counterexample: x0 = (0,1), u0 = (0,1)
AffineProbe standard_halfplane_probe();
bool is_standard_halfplane_probe(const AffineProbe& probe);

// f0 at x; +infinity outside the open ball of radius D_kappa/2 when kappa > 0
double f0_value(const AffineProbe& probe, const Point& x);

// closed form of f0 for the standard half-plane probe (piecewise in t1)
double f0_closed_form_hp(const Point& x);

// X0(x): u0 parallel-transported along the minimal geodesic from x0 to x
TangentVec transport_field(const AffineProbe& probe, const Point& x);

// closed form of X0 for the standard half-plane probe, with analytic partials
hp::VectorField2 standard_field_hp();
// closed form of f0 for the standard half-plane probe, with analytic partials
hp::ScalarField2 standard_f0_field_hp();

using ScalarFn = std::function<double(const Point&)>;

// Metric dual of df at x via central differences along exp-chart axes.
TangentVec gradient_fd(const ScalarFn& f, const Point& x,
                       double h = gradient_step_default);

// Geodesic second difference (f(exp(h v)) - 2 f(x) + f(exp(-h v))) / h^2,
// an approximation of Hess f(v, v).
double hessian_probe(const ScalarFn& f, const Point& x, const TangentVec& v,
                     double h = hessian_step_default);

enum class Verdict { holds, violated };
std::string to_string(Verdict v);

struct CheckReport {
    std::string property;
    std::size_t samples = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    Verdict verdict = Verdict::holds;
    std::vector<Point> worst_sample;
    std::string note;
};

// Seeded uniform sampler over an exp-chart ball; identical indices give
// identical points, so check verdicts are reproducible.
struct RegionSampler {
    Point center;
    double radius = 1.0;
    std::uint64_t seed = 20240001ull;

    Point sample(std::uint64_t index) const;
    // two points from one per-index stream
    std::pair<Point, Point> sample_pair(std::uint64_t index) const;
};

// ball radius 0.95 * D_kappa / 2 when kappa > 0, else 3 / sqrt(|kappa|)
// (3.0 on flat space)
RegionSampler default_sampler(const AffineProbe& probe,
                              std::uint64_t seed = 20240001ull);
double default_sample_radius(const SpaceSpec& space);

// Transport commutation P_{x,x0} u0 = P_{x,z} P_{z,x0} u0 over sampled (z, x).
CheckReport check_transport_commutation(const AffineProbe& probe,
                                        const RegionSampler& sampler,
                                        std::size_t n, double tol);

// grad f0 = X0 over sampled x. The gradient is taken by metric-dual central
// differences; for the standard half-plane probe the analytic closed-form
// gradient is checked as well.
CheckReport check_gradient_field(const AffineProbe& probe,
                                 const RegionSampler& sampler, std::size_t n,
                                 double tol, double h = gradient_step_default);

// f(x) = f(x0) + <u0, log_{x0} x> with u0 the FD gradient of f at x0.
CheckReport check_affine_formula(const ScalarFn& f, const Point& x0,
                                 const RegionSampler& sampler, std::size_t n,
                                 double tol, double h = gradient_step_default);

struct AssertionCheck {
    std::string label;
    double computed = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct AssertionResult {
    std::string id;
    std::string description;
    std::vector<AssertionCheck> checks;
    bool pass = false;
};

struct CounterexampleReport {
    std::vector<AssertionResult> assertions;
    bool all_pass = false;
};

/**
 * The four half-plane counterexample assertions, evaluated with the fixed
 * probe x0 = (0,1), u0 = (0,1):
 *   (i)   the c = -0.4 sub-level set is not convex,
 *   (ii)  grad f0 != X0 at z = (2,1),
 *   (iii) the covariant derivative of X0 in the t1 direction at z is (0, 1/2),
 *   (iv)  the curl obstruction at z is 1/2, so X0 is no gradient field.
 * numeric_tol applies to the finite-difference routes; the analytic routes
 * are pinned at 1e-9 and the level values at 1e-12.
 */
CounterexampleReport counterexample_suite(double numeric_tol = 1e-5);

} // namespace geoaffine
