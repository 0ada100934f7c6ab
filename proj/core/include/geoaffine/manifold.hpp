#pragma once

#include <functional>
#include <vector>

#include "geoaffine/rng.hpp"
#include "geoaffine/space.hpp"

namespace geoaffine {

// default central-difference step for the transport-based covariant derivative
inline constexpr double fd_step_default = 1e-5;

double inner(const TangentVec& u, const TangentVec& v);
double norm(const TangentVec& v);

TangentVec scaled(const TangentVec& v, double s);
TangentVec added(const TangentVec& u, const TangentVec& v);
TangentVec subtracted(const TangentVec& u, const TangentVec& v);

/**
 * Exponential map at v.base. Throws BaseMismatchError when v is not anchored
 * at x and CutLocusExceededError when a sphere shot reaches the cut locus.
 */
Point exp_map(const Point& x, const TangentVec& v);

/**
 * Inverse of exp_map: tangent at x pointing to y with |log| = d(x, y).
 * Throws AntipodalPairError on the sphere when no unique minimal geodesic
 * exists. log_map(x, x) is the zero tangent.
 */
TangentVec log_map(const Point& x, const Point& y);

double distance(const Point& x, const Point& y);

struct GeodesicSegment {
    Point start;
    Point end;
    TangentVec initial_velocity; // log_map(start, end)

    Point eval(double t) const;
    const SpaceSpec& space() const { return start.space; }
};

GeodesicSegment geodesic(const Point& x, const Point& y);

// Parallel transport of v from x to y along the unique minimal geodesic.
TangentVec transport(const Point& x, const Point& y, const TangentVec& v);

// Transport along a segment from parameter a to parameter b; v must be
// anchored at seg.eval(a).
TangentVec parallel_transport(const GeodesicSegment& seg, const TangentVec& v,
                              double a, double b);

using VectorFieldFn = std::function<TangentVec(const Point&)>;

/**
 * Covariant derivative of a vector field at x in direction dir, approximated
 * by the central transport difference
 *   (P_{x,g(h)} field(g(h)) - P_{x,g(-h)} field(g(-h))) / (2h)
 * along g(t) = exp_map(x, t dir). Second-order accurate in h.
 */
TangentVec covariant_derivative_fd(const VectorFieldFn& field, const Point& x,
                                   const TangentVec& dir, double h = fd_step_default);

// Metric-orthonormal basis of the tangent space at x (deterministic choice).
std::vector<TangentVec> orthonormal_basis(const Point& x);

// Uniform draw from the metric ball of radius `radius` in T_x M.
TangentVec random_tangent_in_ball(const Point& x, double radius, Rng& rng);
Point random_point_in_ball(const Point& center, double radius, Rng& rng);

} // namespace geoaffine
