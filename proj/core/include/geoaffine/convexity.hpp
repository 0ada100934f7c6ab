#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "geoaffine/affine.hpp"
#include "geoaffine/manifold.hpp"

namespace geoaffine {

struct TriangleData {
    std::array<Point, 3> vertices;
    std::array<double, 3> side_lengths; // side i is opposite vertex i
    std::array<double, 3> angles;       // inner angle at vertex i

    double perimeter() const {
        return side_lengths[0] + side_lengths[1] + side_lengths[2];
    }
    double min_side() const;
    double min_angle() const;
};

// Throws DegenerateTriangleError on collapsed sides and
// std::invalid_argument when the perimeter reaches 2 D_kappa.
TriangleData make_triangle(const Point& p1, const Point& p2, const Point& p3);

struct ComboCoefficients {
    double a_t = 0.0;
    double b_t = 0.0;
    double span_residual = 0.0;
};

/**
 * Coefficients of log_y gamma_pq(t) in the basis {log_y p, log_y q}, from the
 * 2x2 Gram system, together with the residual of the projection (which the
 * axiom of plane forces to vanish on constant-curvature spaces).
 */
ComboCoefficients lemma42_coefficients(const Point& y, const Point& p,
                                       const Point& q, double t);

struct ComparisonTriangleResult {
    std::array<std::array<double, 2>, 3> planar; // y~, p~, q~
    std::array<double, 2> x_tilde;
    double d_manifold = 0.0;
    double d_plane = 0.0;
};

/**
 * Euclidean comparison triangle with matched sides at y and matched angle;
 * x = gamma_pq(t) corresponds to the point x~ on [p~, q~] with the same
 * vertex angles at y~. Returns d(y, x) and |y~ x~|.
 */
ComparisonTriangleResult comparison_triangle(const Point& y, const Point& p,
                                             const Point& q, double t);

struct LawOfCosinesReport {
    // defect_i = l_i^2 - (l_{i-1}^2 + l_{i+1}^2 - 2 l_{i-1} l_{i+1} cos angle_i);
    // negative on spheres, positive on negatively curved spaces, zero flat
    std::array<double, 3> defect;
};
LawOfCosinesReport law_of_cosines_check(const Point& p1, const Point& p2,
                                        const Point& p3);

bool sublevel_membership(const AffineProbe& probe, double c, const Point& x);

struct ScanWitness {
    Point p;
    Point q;
    double t = 0.0;
    double f0_at_witness = 0.0;
};

enum class ScanVerdict { witness_found, no_witness_at_budget };
std::string to_string(ScanVerdict v);

struct ScanOptions {
    std::size_t n_pairs = 500;
    std::size_t n_steps = 64;
    std::uint64_t seed = 20240001ull;
    double sample_radius = 0.0; // 0 -> default_sample_radius(space)
    std::size_t attempt_budget = 0; // 0 -> max(10000, 400 * n_pairs)
    // candidate pairs evaluated before the random ones, in order
    std::vector<std::pair<Point, Point>> injected;
};

struct ConvexityReport {
    double c = 0.0;
    std::size_t n_pairs = 0;
    std::size_t n_steps = 0;
    std::uint64_t seed = 0;
    std::size_t injected_pairs = 0;
    ScanVerdict verdict = ScanVerdict::no_witness_at_budget;
    std::optional<ScanWitness> witness;
};

/**
 * Randomized convexity scan of the sub-level set L_{c, f0}: members are drawn
 * by rejection sampling in the exp-chart ball at x0, chords are evaluated at
 * n_steps interior parameters, and the first violating chord (injected pairs
 * first) is reported with its worst parameter. A violation requires
 * f0(gamma(t)) > c + 1e-12. Throws EmptySublevelError when the rejection
 * budget produces fewer than two members.
 */
ConvexityReport convexity_scan(const AffineProbe& probe, double c,
                               const ScanOptions& options);

// The member list the scan pairs up: rejection sampling with per-attempt
// RNG streams, so the result depends only on (probe, c, options).
std::vector<Point> sample_sublevel_members(const AffineProbe& probe, double c,
                                           const ScanOptions& options);

// Witness-bearing chord built from the perpendicular-chord construction
// (kappa > 0, 0 < c < |u0| D_kappa / 2) or the mirrored boundary chord
// (kappa < 0, c < 0). Empty when not applicable or not validated.
std::vector<std::pair<Point, Point>> construction_pairs(const AffineProbe& probe,
                                                        double c);

// the chord of the half-plane counterexample figure
std::pair<Point, Point> figure31_pair();

struct SweepOptions {
    ScanOptions scan;
    bool inject_construction = false;
    bool inject_paper_points = false;
};

struct ThresholdRow {
    double c = 0.0;
    ConvexityReport report;
};

std::vector<ThresholdRow> threshold_experiment(const AffineProbe& probe,
                                               const std::vector<double>& c_grid,
                                               const SweepOptions& options);

struct CertificateStats {
    double max_gap = 0.0;    // max |f0(gamma(t)) - (a_t f0(p) + b_t f0(q))|
    double min_sum = 0.0;    // min and max of a_t + b_t over evaluated chords
    double max_sum = 0.0;
    std::size_t evaluated = 0;
    std::size_t skipped_degenerate = 0;
};

// Evaluates the decomposition certificate along one chord at the interior
// parameter grid; near-collinear configurations are skipped.
CertificateStats lemma42_certificate(const AffineProbe& probe, const Point& p,
                                     const Point& q, std::size_t n_steps);

struct TriangleSuiteStats {
    std::size_t n = 0;
    double min_a_t = 0.0;
    double min_b_t = 0.0;
    double min_sum_ab = 0.0;
    double max_sum_ab = 0.0;
    double max_span_residual = 0.0;
    // law-of-cosines margin in the curvature-appropriate direction
    // (-defect for kappa > 0, +defect for kappa < 0); for flat spaces the
    // largest absolute defect is reported instead
    double min_loc_margin = 0.0;
    double max_abs_loc_defect = 0.0;
    // comparison-point slack d(y,x) - |y~x~| in the curvature direction
    double min_comparison_slack = 0.0;
    double max_abs_comparison_diff = 0.0;
};

TriangleSuiteStats triangle_suite(const SpaceSpec& space, std::size_t n,
                                  std::uint64_t seed);

// Seeded non-degenerate triangle with an associated interior parameter t.
struct SampledTriangle {
    TriangleData tri;
    double t = 0.5;
};
SampledTriangle random_triangle(const SpaceSpec& space, Rng& rng);

} // namespace geoaffine
