#include "geoaffine/space.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace geoaffine {

namespace {

double sq(double x) { return x * x; }

double minkowski_self(const std::vector<double>& c) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) s += sq(c[i]);
    return s - sq(c.back());
}

double euclid_self(const std::vector<double>& c) {
    double s = 0.0;
    for (double x : c) s += sq(x);
    return s;
}

} // namespace

std::string to_string(SpaceKind kind) {
    switch (kind) {
        case SpaceKind::euclidean: return "euclidean";
        case SpaceKind::sphere: return "sphere";
        case SpaceKind::hyperbolic: return "hyperbolic";
        case SpaceKind::half_plane: return "halfplane";
    }
    return "unknown";
}

SpaceSpec SpaceSpec::euclidean(int dim) {
    if (dim < 1) throw std::invalid_argument("euclidean: dim must be positive");
    return SpaceSpec{SpaceKind::euclidean, dim, 0.0};
}

SpaceSpec SpaceSpec::sphere(double kappa, int dim) {
    if (dim < 1) throw std::invalid_argument("sphere: dim must be positive");
    if (!(kappa > 0.0)) throw std::invalid_argument("sphere: kappa must be > 0");
    return SpaceSpec{SpaceKind::sphere, dim, kappa};
}

SpaceSpec SpaceSpec::hyperbolic(double kappa, int dim) {
    if (dim < 1) throw std::invalid_argument("hyperbolic: dim must be positive");
    if (!(kappa < 0.0)) throw std::invalid_argument("hyperbolic: kappa must be < 0");
    return SpaceSpec{SpaceKind::hyperbolic, dim, kappa};
}

SpaceSpec SpaceSpec::half_plane() {
    return SpaceSpec{SpaceKind::half_plane, 2, -1.0};
}

double SpaceSpec::diameter_bound() const {
    if (kappa > 0.0) return M_PI / std::sqrt(kappa);
    return std::numeric_limits<double>::infinity();
}

int SpaceSpec::chart_size() const {
    switch (kind) {
        case SpaceKind::euclidean: return dim;
        case SpaceKind::sphere:
        case SpaceKind::hyperbolic: return dim + 1;
        case SpaceKind::half_plane: return 2;
    }
    return dim;
}

double SpaceSpec::model_radius() const {
    return 1.0 / std::sqrt(std::abs(kappa));
}

bool SpaceSpec::operator==(const SpaceSpec& other) const {
    return kind == other.kind && dim == other.dim && kappa == other.kappa;
}

bool on_manifold(const SpaceSpec& space, const std::vector<double>& coords,
                 double rel_tol) {
    if (static_cast<int>(coords.size()) != space.chart_size()) return false;
    switch (space.kind) {
        case SpaceKind::euclidean:
            return true;
        case SpaceKind::sphere: {
            double r2 = 1.0 / space.kappa;
            return std::abs(euclid_self(coords) - r2) <= rel_tol * r2;
        }
        case SpaceKind::hyperbolic: {
            double target = 1.0 / space.kappa; // negative
            return coords.back() > 0.0 &&
                   std::abs(minkowski_self(coords) - target) <= rel_tol * std::abs(target);
        }
        case SpaceKind::half_plane:
            return coords[1] > 0.0;
    }
    return false;
}

Point make_point(const SpaceSpec& space, std::vector<double> coords) {
    if (static_cast<int>(coords.size()) != space.chart_size())
        throw std::invalid_argument("make_point: wrong number of coordinates");
    if (!on_manifold(space, coords))
        throw std::invalid_argument("make_point: coordinates are not on the model surface");
    return Point{space, std::move(coords)};
}

TangentVec make_tangent(Point base, std::vector<double> comps) {
    if (comps.size() != base.coords.size())
        throw std::invalid_argument("make_tangent: wrong number of components");
    const SpaceSpec& space = base.space;
    if (space.kind == SpaceKind::sphere || space.kind == SpaceKind::hyperbolic) {
        double dot = 0.0, nv = 0.0;
        if (space.kind == SpaceKind::sphere) {
            for (std::size_t i = 0; i < comps.size(); ++i) dot += comps[i] * base.coords[i];
            nv = std::sqrt(euclid_self(comps));
        } else {
            for (std::size_t i = 0; i + 1 < comps.size(); ++i) dot += comps[i] * base.coords[i];
            dot -= comps.back() * base.coords.back();
            double m = minkowski_self(comps);
            nv = std::sqrt(std::max(m, 0.0));
        }
        double scale = space.model_radius();
        if (std::abs(dot) > 1e-10 * std::max(nv * scale, 1e-300))
            throw std::invalid_argument("make_tangent: vector is not tangent to the model surface");
    }
    return TangentVec{std::move(base), std::move(comps)};
}

Point anchor_point(const SpaceSpec& space) {
    std::vector<double> c(static_cast<std::size_t>(space.chart_size()), 0.0);
    switch (space.kind) {
        case SpaceKind::euclidean:
            break;
        case SpaceKind::sphere:
        case SpaceKind::hyperbolic:
            c.back() = space.model_radius();
            break;
        case SpaceKind::half_plane:
            c[1] = 1.0;
            break;
    }
    return Point{space, std::move(c)};
}

} // namespace geoaffine
