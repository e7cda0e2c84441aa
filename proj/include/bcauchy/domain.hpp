#pragma once

// The boundary Cauchy problem: right-hand side, region predicate, boundary
// curves and initial point, together with the shift/shear that moves the
// initial point to the origin and the x -> -x mirror between half-planes.

#include <optional>
#include <string_view>
#include <vector>

#include "bcauchy/expr.hpp"

namespace bcauchy {

enum class Side { upper, lower };
enum class HalfPlane { right, left };

std::string_view to_string(Side side);
std::string_view to_string(HalfPlane hp);
inline HalfPlane opposite(HalfPlane hp) { return hp == HalfPlane::right ? HalfPlane::left : HalfPlane::right; }

struct Point {
    double x = 0.0;
    double y = 0.0;
};

struct ValidationOptions {
    int grid = 512;
    double convexity_tol = 1e-10;
    double origin_tol = 1e-12;
    /// |b'(0)| at or below this counts as a horizontal tangent.
    double slope_zero_tol = 1e-12;
    double on_boundary_tol = 1e-9;
};

/// A validated one-sided boundary function.
///
/// `b` and `db` are written in the curve's own half-plane: a left curve is
/// defined on [-extent, 0]. `tau` and `cstar` are computed from the
/// right-facing orientation b(|x|) so that both sides share one set of rules.
struct BoundaryCurve {
    Expr b;
    Expr db;
    double extent = 0.0;
    Side side = Side::upper;
    HalfPlane halfplane = HalfPlane::right;
    double tau = 0.0;
    double cstar = 0.0;

    double value(double x) const { return b(x, 0.0); }
    double slope(double x) const { return db(x, 0.0); }
    /// True when the curve's own domain contains x.
    bool covers(double x) const;
    bool tangent_to_axis() const { return tau == 0.0; }

    /// The same curve seen through x -> -x; upper stays upper.
    BoundaryCurve mirrored() const;
    /// The same curve with the extent cut down to `a`.
    BoundaryCurve restricted(double a) const;
};

/// Checks the boundary-function requirements and computes tau and c*.
/// Throws Error with NotZeroAtOrigin, WrongSlopeSign, NotConvex or
/// Condition3Violated; InvalidArgument for a non-positive extent or a
/// curve expression that mentions y.
BoundaryCurve validate_curve(const Expr& b, double extent, Side side, HalfPlane hp,
                             const ValidationOptions& opts = {});

/// G = {g > 0} near the initial point; declared curves lie on g = 0.
struct RegionSpec {
    Expr g;
};

/// Raw curve input, before the problem is moved to the origin.
struct CurveSpec {
    Expr b;
    double extent = 0.0;
    Side side = Side::upper;
    HalfPlane halfplane = HalfPlane::right;
};

struct BoundaryProblem {
    /// Right-hand side used for x >= x0 and x <= x0. Equal unless the
    /// equation is piecewise across the vertical through the initial point.
    Expr rhs_right;
    Expr rhs_left;
    RegionSpec region;
    std::vector<CurveSpec> curves;
    double x0 = 0.0;
    double y0 = 0.0;
};

/// At most one upper and one lower curve in each half-plane.
struct CurveSet {
    std::optional<BoundaryCurve> upper;
    std::optional<BoundaryCurve> lower;

    bool empty() const { return !upper && !lower; }
    const std::optional<BoundaryCurve>& get(Side s) const { return s == Side::upper ? upper : lower; }
};

/// Problem with the initial point at the origin and f0(0,0) = 0.
struct NormalizedProblem {
    Expr f0_right;
    Expr f0_left;
    RegionSpec region;
    CurveSet right;
    CurveSet left;

    // Bookkeeping for mapping results back to the caller's coordinates.
    double x0 = 0.0;
    double y0 = 0.0;
    double shear = 0.0;  // f(x0, y0)
    bool mirrored = false;

    const CurveSet& curves(HalfPlane hp) const { return hp == HalfPlane::right ? right : left; }
    const Expr& f0(HalfPlane hp) const { return hp == HalfPlane::right ? f0_right : f0_left; }
    /// Right-hand side at a point, picking the piece by the sign of x.
    Evaluation rhs(double x, double y) const { return (x < 0.0 ? f0_left : f0_right).eval(x, y); }

    /// Maps a point of this problem back to the caller's original coordinates.
    Point to_original(Point p) const;
};

NormalizedProblem normalize(const BoundaryProblem& p, const ValidationOptions& opts = {});

/// f(x,y) -> -f(-x,y), g(x,y) -> g(-x,y), left curves <-> right curves.
NormalizedProblem reflect(const NormalizedProblem& p);

/// `p` itself for the right half-plane, reflect(p) for the left one.
NormalizedProblem oriented(const NormalizedProblem& p, HalfPlane hp);

enum class Membership { inside, on_curve, outside };

/// Membership in G-tilde: g > 0, or within `tol` of a declared curve.
/// Evaluation faults of g count as outside.
Membership membership(const NormalizedProblem& p, double x, double y, double tol = 1e-9);

inline bool in_closure(const NormalizedProblem& p, double x, double y, double tol = 1e-9) {
    return membership(p, x, y, tol) != Membership::outside;
}

/// n+1 evenly spaced points from lo to hi, endpoints exact.
std::vector<double> linspace(double lo, double hi, int n);

}  // namespace bcauchy
