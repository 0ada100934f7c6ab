#include "geoaffine/manifold.hpp"

#include <cmath>
#include <stdexcept>

#include "geoaffine/errors.hpp"
#include "geoaffine/halfplane.hpp"

namespace geoaffine {

namespace {

using Vec = std::vector<double>;

double edot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double enorm(const Vec& a) { return std::sqrt(edot(a, a)); }

// Minkowski product with signature (+..+, -)
double mdot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) s += a[i] * b[i];
    return s - a.back() * b.back();
}

Vec axpy(double a, const Vec& x, const Vec& y) {
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] + y[i];
    return out;
}

Vec scaled_vec(const Vec& x, double a) {
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i];
    return out;
}

bool same_coords(const Vec& a, const Vec& b, double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol * (1.0 + std::abs(a[i]) + std::abs(b[i])))
            return false;
    return true;
}

void require_base(const TangentVec& v, const Point& x, const char* where) {
    if (v.base.space != x.space || !same_coords(v.base.coords, x.coords, 1e-9))
        throw BaseMismatchError(std::string(where) + ": tangent vector anchored at a different point");
}

} // namespace

double inner(const TangentVec& u, const TangentVec& v) {
    require_base(v, u.base, "inner");
    const SpaceSpec& space = u.base.space;
    switch (space.kind) {
        case SpaceKind::euclidean:
        case SpaceKind::sphere:
            return edot(u.comps, v.comps);
        case SpaceKind::hyperbolic:
            return mdot(u.comps, v.comps);
        case SpaceKind::half_plane: {
            double t2 = u.base.coords[1];
            return edot(u.comps, v.comps) / (t2 * t2);
        }
    }
    return 0.0;
}

double norm(const TangentVec& v) {
    const SpaceSpec& space = v.base.space;
    switch (space.kind) {
        case SpaceKind::euclidean:
        case SpaceKind::sphere:
            return enorm(v.comps);
        case SpaceKind::hyperbolic:
            return std::sqrt(std::max(mdot(v.comps, v.comps), 0.0));
        case SpaceKind::half_plane:
            return enorm(v.comps) / v.base.coords[1];
    }
    return 0.0;
}

TangentVec scaled(const TangentVec& v, double s) {
    return TangentVec{v.base, scaled_vec(v.comps, s)};
}

TangentVec added(const TangentVec& u, const TangentVec& v) {
    require_base(v, u.base, "added");
    return TangentVec{u.base, axpy(1.0, u.comps, v.comps)};
}

TangentVec subtracted(const TangentVec& u, const TangentVec& v) {
    require_base(v, u.base, "subtracted");
    return TangentVec{u.base, axpy(-1.0, v.comps, u.comps)};
}

Point exp_map(const Point& x, const TangentVec& v) {
    require_base(v, x, "exp_map");
    const SpaceSpec& space = x.space;
    switch (space.kind) {
        case SpaceKind::euclidean:
            return Point{space, axpy(1.0, x.coords, v.comps)};
        case SpaceKind::sphere: {
            double len = enorm(v.comps);
            if (len >= space.diameter_bound())
                throw CutLocusExceededError("exp_map: |v| reaches the sphere cut locus");
            if (len == 0.0) return x;
            double R = space.model_radius();
            double th = len / R;
            Vec out = axpy(std::cos(th), x.coords, scaled_vec(v.comps, R * std::sin(th) / len));
            return Point{space, std::move(out)};
        }
        case SpaceKind::hyperbolic: {
            double len = std::sqrt(std::max(mdot(v.comps, v.comps), 0.0));
            if (len == 0.0) return x;
            double R = space.model_radius();
            double th = len / R;
            Vec out = axpy(std::cosh(th), x.coords, scaled_vec(v.comps, R * std::sinh(th) / len));
            return Point{space, std::move(out)};
        }
        case SpaceKind::half_plane:
            return hp::exp_closed_form(x, v);
    }
    throw std::logic_error("exp_map: unreachable");
}

double distance(const Point& x, const Point& y) {
    if (x.space != y.space) throw std::invalid_argument("distance: mixed spaces");
    const SpaceSpec& space = x.space;
    switch (space.kind) {
        case SpaceKind::euclidean: {
            Vec d = axpy(-1.0, y.coords, x.coords);
            return enorm(d);
        }
        case SpaceKind::sphere: {
            Vec diff = axpy(-1.0, y.coords, x.coords);
            Vec sum = axpy(1.0, y.coords, x.coords);
            double R = space.model_radius();
            return 2.0 * R * std::atan2(enorm(diff), enorm(sum));
        }
        case SpaceKind::hyperbolic: {
            Vec diff = axpy(-1.0, y.coords, x.coords);
            double m = std::max(mdot(diff, diff), 0.0);
            double R = space.model_radius();
            return 2.0 * R * std::asinh(0.5 * std::sqrt(m) / R);
        }
        case SpaceKind::half_plane:
            return hp::distance_closed_form(x, y);
    }
    return 0.0;
}

TangentVec log_map(const Point& x, const Point& y) {
    if (x.space != y.space) throw std::invalid_argument("log_map: mixed spaces");
    const SpaceSpec& space = x.space;
    switch (space.kind) {
        case SpaceKind::euclidean:
            return TangentVec{x, axpy(-1.0, x.coords, y.coords)};
        case SpaceKind::sphere: {
            double d = distance(x, y);
            if (d >= space.diameter_bound() - 1e-12)
                throw AntipodalPairError("log_map: antipodal pair, no unique minimal geodesic");
            double R = space.model_radius();
            // tangential part of y at x
            Vec w = axpy(-edot(y.coords, x.coords) / (R * R), x.coords, y.coords);
            double wn = enorm(w);
            if (wn < 1e-150) return TangentVec{x, Vec(x.coords.size(), 0.0)};
            return TangentVec{x, scaled_vec(w, d / wn)};
        }
        case SpaceKind::hyperbolic: {
            double d = distance(x, y);
            double R = space.model_radius();
            Vec w = axpy(mdot(y.coords, x.coords) / (R * R), x.coords, y.coords);
            double wn = std::sqrt(std::max(mdot(w, w), 0.0));
            if (wn < 1e-150) return TangentVec{x, Vec(x.coords.size(), 0.0)};
            return TangentVec{x, scaled_vec(w, d / wn)};
        }
        case SpaceKind::half_plane:
            return hp::log_closed_form(x, y);
    }
    throw std::logic_error("log_map: unreachable");
}

Point GeodesicSegment::eval(double t) const {
    return exp_map(start, scaled(initial_velocity, t));
}

GeodesicSegment geodesic(const Point& x, const Point& y) {
    TangentVec v = log_map(x, y);
    return GeodesicSegment{x, y, std::move(v)};
}

TangentVec transport(const Point& x, const Point& y, const TangentVec& v) {
    require_base(v, x, "transport");
    const SpaceSpec& space = x.space;
    switch (space.kind) {
        case SpaceKind::euclidean:
            return TangentVec{y, v.comps};
        case SpaceKind::sphere: {
            double d = distance(x, y);
            if (d < 1e-15) return TangentVec{y, v.comps};
            TangentVec lg = log_map(x, y);
            double R = space.model_radius();
            double th = d / R;
            Vec u = scaled_vec(lg.comps, 1.0 / d);
            double k = edot(v.comps, u);
            // v + k * ((cos th - 1) u - sin th x / R)
            Vec out = axpy(k * (std::cos(th) - 1.0), u, v.comps);
            out = axpy(-k * std::sin(th) / R, x.coords, out);
            return TangentVec{y, std::move(out)};
        }
        case SpaceKind::hyperbolic: {
            double d = distance(x, y);
            if (d < 1e-15) return TangentVec{y, v.comps};
            TangentVec lg = log_map(x, y);
            double R = space.model_radius();
            double th = d / R;
            Vec u = scaled_vec(lg.comps, 1.0 / d);
            double k = mdot(v.comps, u);
            Vec out = axpy(k * (std::cosh(th) - 1.0), u, v.comps);
            out = axpy(k * std::sinh(th) / R, x.coords, out);
            return TangentVec{y, std::move(out)};
        }
        case SpaceKind::half_plane:
            return hp::transport_frame(x, y, v);
    }
    throw std::logic_error("transport: unreachable");
}

TangentVec parallel_transport(const GeodesicSegment& seg, const TangentVec& v,
                              double a, double b) {
    Point pa = seg.eval(a);
    require_base(v, pa, "parallel_transport");
    if (a == b) return v;
    Point pb = seg.eval(b);
    TangentVec anchored{pa, v.comps};
    return transport(pa, pb, anchored);
}

TangentVec covariant_derivative_fd(const VectorFieldFn& field, const Point& x,
                                   const TangentVec& dir, double h) {
    if (h < 1e-12) throw StepTooSmallError("covariant_derivative_fd: h below 1e-12");
    require_base(dir, x, "covariant_derivative_fd");
    Point plus = exp_map(x, scaled(dir, h));
    Point minus = exp_map(x, scaled(dir, -h));
    TangentVec back_plus = transport(plus, x, field(plus));
    TangentVec back_minus = transport(minus, x, field(minus));
    Vec out(x.coords.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = (back_plus.comps[i] - back_minus.comps[i]) / (2.0 * h);
    return TangentVec{x, std::move(out)};
}

std::vector<TangentVec> orthonormal_basis(const Point& x) {
    const SpaceSpec& space = x.space;
    std::vector<TangentVec> basis;
    basis.reserve(static_cast<std::size_t>(space.dim));
    switch (space.kind) {
        case SpaceKind::euclidean: {
            for (int i = 0; i < space.dim; ++i) {
                Vec e(static_cast<std::size_t>(space.dim), 0.0);
                e[static_cast<std::size_t>(i)] = 1.0;
                basis.push_back(TangentVec{x, std::move(e)});
            }
            return basis;
        }
        case SpaceKind::half_plane: {
            double t2 = x.coords[1];
            basis.push_back(TangentVec{x, {t2, 0.0}});
            basis.push_back(TangentVec{x, {0.0, t2}});
            return basis;
        }
        case SpaceKind::sphere:
        case SpaceKind::hyperbolic: {
            bool hyp = space.kind == SpaceKind::hyperbolic;
            auto dot = [hyp](const Vec& a, const Vec& b) {
                return hyp ? mdot(a, b) : edot(a, b);
            };
            double xself = dot(x.coords, x.coords); // R^2 or -R^2
            std::vector<Vec> got;
            std::size_t m = x.coords.size();
            for (std::size_t seed = 0; seed < m && got.size() < static_cast<std::size_t>(space.dim); ++seed) {
                Vec cand(m, 0.0);
                cand[seed] = 1.0;
                // remove the component along the base point, then along the
                // vectors already collected (all unit, positive-definite)
                cand = axpy(-dot(cand, x.coords) / xself, x.coords, cand);
                for (const Vec& g : got) cand = axpy(-dot(cand, g), g, cand);
                double n2 = dot(cand, cand);
                if (n2 < 1e-12) continue;
                got.push_back(scaled_vec(cand, 1.0 / std::sqrt(n2)));
            }
            for (Vec& g : got) basis.push_back(TangentVec{x, std::move(g)});
            return basis;
        }
    }
    return basis;
}

TangentVec random_tangent_in_ball(const Point& x, double radius, Rng& rng) {
    std::vector<TangentVec> basis = orthonormal_basis(x);
    std::size_t n = basis.size();
    Vec coeff(n);
    double nn = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        coeff[i] = rng.normal();
        nn += coeff[i] * coeff[i];
    }
    nn = std::sqrt(nn);
    if (nn < 1e-300) nn = 1.0;
    double rad = radius * std::pow(rng.uniform01(), 1.0 / static_cast<double>(n));
    Vec out(x.coords.size(), 0.0);
    for (std::size_t i = 0; i < n; ++i)
        out = axpy(rad * coeff[i] / nn, basis[i].comps, out);
    return TangentVec{x, std::move(out)};
}

Point random_point_in_ball(const Point& center, double radius, Rng& rng) {
    return exp_map(center, random_tangent_in_ball(center, radius, rng));
}

} // namespace geoaffine
