#pragma once

#include <string>
#include <vector>

namespace geoaffine {

enum class SpaceKind { euclidean, sphere, hyperbolic, half_plane };

std::string to_string(SpaceKind kind);

/**
 * A constant-curvature model space.
 *
 * Charts:
 *   euclidean   - R^n, n coordinates
 *   sphere      - radius 1/sqrt(kappa) sphere embedded in R^(n+1), kappa > 0
 *   hyperbolic  - hyperboloid sheet in R^(n+1) with Minkowski self-product 1/kappa,
 *                 last coordinate positive, kappa < 0
 *   half_plane  - the upper half plane {t2 > 0} with metric (dt1^2+dt2^2)/t2^2,
 *                 kappa = -1, dim = 2
 */
struct SpaceSpec {
    SpaceKind kind = SpaceKind::euclidean;
    int dim = 2;
    double kappa = 0.0;

    static SpaceSpec euclidean(int dim);
    static SpaceSpec sphere(double kappa, int dim = 2);
    static SpaceSpec hyperbolic(double kappa, int dim = 2);
    static SpaceSpec half_plane();

    // pi/sqrt(kappa) for kappa > 0, +infinity otherwise
    double diameter_bound() const;
    // number of chart coordinates (n for Euclidean/half-plane, n+1 for the embeddings)
    int chart_size() const;
    // radius of the embedded model, 1/sqrt(|kappa|); meaningless for flat spaces
    double model_radius() const;

    bool operator==(const SpaceSpec& other) const;
    bool operator!=(const SpaceSpec& other) const { return !(*this == other); }
};

struct Point {
    SpaceSpec space;
    std::vector<double> coords;
};

struct TangentVec {
    Point base;
    std::vector<double> comps;
};

// Validating constructors. They throw std::invalid_argument if the coordinates
// are not on the model surface / tangent to it within the stated tolerances
// (1e-12 relative for points, 1e-10 relative for tangency).
Point make_point(const SpaceSpec& space, std::vector<double> coords);
TangentVec make_tangent(Point base, std::vector<double> comps);

bool on_manifold(const SpaceSpec& space, const std::vector<double>& coords,
                 double rel_tol = 1e-12);

// Canonical base point of each model (origin, pole, hyperboloid apex, (0,1)).
Point anchor_point(const SpaceSpec& space);

} // namespace geoaffine
