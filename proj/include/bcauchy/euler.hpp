#pragma once

// Euler polygons confined to a boundary triangle: constant base step in x,
// extra vertices where a segment meets a curve side, and the refinement
// sequence whose Cauchy gaps stand in for the limit passage.

#include <cstddef>
#include <vector>

#include "bcauchy/domain.hpp"
#include "bcauchy/peano.hpp"

namespace bcauchy {

struct EulerOptions {
    /// Largest tolerated step out of the closure at a curve vertex.
    double exit_tol = 1e-9;
    double bisection_tol = 1e-12;
    double on_curve_tol = 1e-9;
    /// Extra vertices allowed inside one base step.
    int max_splits = 64;
};

/// Vertices are right-facing, like the triangle they were built in.
struct EulerPolygon {
    HalfPlane halfplane = HalfPlane::right;
    std::vector<Point> vertices;
    int rank = 0;
    std::vector<std::size_t> boundary_contacts;
};

EulerPolygon build_polygon(const NormalizedProblem& p, const PeanoTriangle& tri, int rank,
                           const EulerOptions& opts = {});

struct Refinement {
    std::vector<EulerPolygon> levels;
    /// gaps[i] = sup |y_{i+1} - y_i| over the base grid of level i+1.
    std::vector<double> cauchy_gaps;
};

/// Polygons at ranks n, 2n, ..., 2^(levels-1) n. Levels are built concurrently.
Refinement refine(const NormalizedProblem& p, const PeanoTriangle& tri, int base_rank, int levels,
                  const EulerOptions& opts = {});

/// Max over segments of |segment slope - f0(segment midpoint)|.
double residual(const NormalizedProblem& p, const EulerPolygon& poly);

/// Piecewise-linear value of the polygon at x (clamped to its x-range).
double interpolate(const EulerPolygon& poly, double x);

struct PolygonCheck {
    bool contained = true;
    bool slope_bounded = true;
    double max_abs_slope = 0.0;
    bool starts_at_origin = true;
    bool reaches_h = true;
    std::size_t first_bad_vertex = 0;
};

/// Containment of every vertex (except the origin) in the closure and the
/// slope bound |s| <= tau_bound + 1e-9 for every segment.
PolygonCheck check_polygon(const NormalizedProblem& p, const PeanoTriangle& tri, const EulerPolygon& poly);

struct StartProbe {
    bool continuable = false;
    double slope = 0.0;
    /// Smallest step that was tried without finding an admissible one.
    double smallest_step = 0.0;
    int steps_tried = 0;
};

/// Tries the first Euler step from the origin with steps 2^-1 ... 2^-max_halvings
/// and reports whether any of them stays in the closure.
StartProbe probe_start(const NormalizedProblem& p, HalfPlane hp, int max_halvings = 40);

/// Vertices mapped back to the caller's coordinates.
std::vector<Point> to_original(const NormalizedProblem& p, const EulerPolygon& poly);

}  // namespace bcauchy
