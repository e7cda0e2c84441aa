#pragma once

// Local case taxonomy at the origin: which of N, U, O, B holds in a
// half-plane, whether the neighbourhood set lies inside (index 1) or
// outside (index 2) the region, and the slope sub-case of each curve.

#include <optional>
#include <string>
#include <utility>

#include "bcauchy/domain.hpp"

namespace bcauchy {

enum class Family { N1, N2, U1, U2, O1, O2, B1, B2 };
enum class UpperSlope { positive, zero, absent };
enum class LowerSlope { negative, zero, absent };

std::string_view to_string(Family f);

struct CaseLabel {
    HalfPlane halfplane = HalfPlane::right;
    Family family = Family::N1;
    UpperSlope upper_slope = UpperSlope::absent;
    LowerSlope lower_slope = LowerSlope::absent;
    double c_witness = 0.0;
    /// A single identically-zero curve was relabelled to the other side by
    /// the x-axis tie-break (declared upper but used as lower, or vice versa).
    bool zero_curve_reassigned = false;

    bool index_one() const;
    /// e.g. "B1 (upper slope zero, lower slope zero)".
    std::string name() const;
};

struct ClassifyOptions {
    int cells = 16;
    double margin = 1e-9;
    /// Override of the neighbourhood size; default is the smallest c* of the curves.
    std::optional<double> c;
    /// Starting size of the neighbourhood when the half-plane has no curves.
    double neighborhood = 1.0;
    /// Number of halvings tried when the curve-free neighbourhood is ambiguous.
    int neighborhood_halvings = 20;
};

/// Solves max{a, |b(a)|} = c for the rightmost a in (0, extent] and returns
/// it with the curve restricted to [0, a]. `curve` must be right-facing.
std::pair<double, BoundaryCurve> restrict_to(const BoundaryCurve& curve, double c);

/// Curves that take part in a label, with the tie-break applied. Right-facing.
CurveSet label_curves(const NormalizedProblem& right_facing, const CaseLabel& label);

CaseLabel classify(const NormalizedProblem& p, HalfPlane hp, const ClassifyOptions& opts = {});

struct Condition5Options {
    int points = 512;
    double tol = 1e-12;
    /// The scan covers [a * 10^-decades, a] on a logarithmic grid.
    double decades = 8.0;
};

struct Condition5Result {
    bool pass = true;
    /// First violating abscissa in the caller's half-plane (negative for left curves).
    double witness_x = 0.0;
    double field_slope = 0.0;
    double curve_slope = 0.0;
};

/// The field must not point out of the region along a curve tangent to the
/// axis: f0(x, b(x)) <= b'(x) on an upper curve, >= b'(x) on a lower one.
/// The curve's side selects the inequality; left curves are checked in the
/// mirrored frame and reported in the original one.
Condition5Result check_condition5(const NormalizedProblem& p, const BoundaryCurve& curve,
                                  const Condition5Options& opts = {});

}  // namespace bcauchy
