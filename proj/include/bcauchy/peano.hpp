#pragma once

// Peano segments: the classic interior one and the boundary triangle with
// its height h+ for every index-one case.

#include <optional>
#include <variant>

#include "bcauchy/classifier.hpp"
#include "bcauchy/domain.hpp"

namespace bcauchy {

struct PeanoOptions {
    int sup_grid = 128;
    int containment_grid = 64;
    /// Multiplies every sampled supremum.
    double safety = 1.05;
    double delta_min = 1e-6;
};

/// A straight side y = slope * x through the origin.
struct Ray {
    double slope = 0.0;
};

using TriangleSide = std::variant<Ray, BoundaryCurve>;

/// Curvilinear triangle with its apex at the origin and height h along x.
/// Geometry is stored right-facing; `halfplane` says which side it belongs to.
struct PeanoTriangle {
    HalfPlane halfplane = HalfPlane::right;
    double h = 0.0;
    TriangleSide upper_side;
    TriangleSide lower_side;
    double c_tilde = 0.0;
    /// Bound on |f0| over the triangle; every Euler segment obeys it.
    double tau_bound = 0.0;

    double upper_at(double x) const;
    double lower_at(double x) const;
    const BoundaryCurve* upper_curve() const { return std::get_if<BoundaryCurve>(&upper_side); }
    const BoundaryCurve* lower_curve() const { return std::get_if<BoundaryCurve>(&lower_side); }
};

/// h = min{a, b/M} with M the sampled sup of |f| over the rectangle
/// |x - x0| <= a, |y - y0| <= b (times the safety factor); h = a when M = 0.
double classic_peano_h(const Expr& f, double x0, double y0, double a, double b, const PeanoOptions& opts = {});

/// Largest delta on the ladder c0, c0/2, c0/4, ... (not below delta_min) with
/// sup |f0| <= tau over the right half of the delta-square intersected with
/// the closure of the region. `p` is read right-facing.
double delta_for_tau(const NormalizedProblem& p, double tau, const PeanoOptions& opts = {});

/// Builds the boundary triangle for an index-one label. Throws
/// ConstructionUnavailable for N2, U2, O2 and B2.
PeanoTriangle build_triangle(const NormalizedProblem& p, const CaseLabel& label, const PeanoOptions& opts = {});

struct TriangleCheck {
    bool contained = true;
    bool bounded = true;
    double max_abs_f0 = 0.0;
    std::optional<Point> first_violation;
};

/// Samples the triangle interior and its curve sides: every point must be in
/// the closure of the region and satisfy |f0| <= tau_bound + 1e-9.
TriangleCheck check_triangle(const NormalizedProblem& p, const PeanoTriangle& tri, const PeanoOptions& opts = {});

}  // namespace bcauchy
