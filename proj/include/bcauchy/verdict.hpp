#pragma once

// Existence decision per half-plane and for the whole problem.
//
//   index-one case (N1, U1, O1, B1), tangency condition holding on every curve
//   tangent to the axis                                  -> Exists, with polygon
//   N2, U2 positive, O2 negative, B2 positive/negative   -> NoSolution
//   anything else                                        -> Inconclusive
//
// A one-sided solution is a solution through the initial point, so Exists on
// either side makes the combined verdict Exists; NoSolution on both sides is
// the only way to rule existence out.

#include <optional>
#include <string>

#include "bcauchy/classifier.hpp"
#include "bcauchy/euler.hpp"
#include "bcauchy/peano.hpp"

namespace bcauchy {

struct SolverOptions {
    ValidationOptions validation;
    ClassifyOptions classify;
    Condition5Options condition5;
    PeanoOptions peano;
    EulerOptions euler;
    int rank = 256;
};

enum class Outcome { exists, no_solution, inconclusive };

enum class InconclusiveReason {
    none,
    uncovered_case,       // a family neither criterion covers (U2 zero, B2 with a zero slope, ...)
    condition5_violated,  // index-one family but the field leaves through a tangent curve
    diagnostic,           // classification or construction failed
};

std::string_view to_string(Outcome o);
std::string_view to_string(InconclusiveReason r);

struct HalfPlaneVerdict {
    HalfPlane halfplane = HalfPlane::right;
    Outcome outcome = Outcome::inconclusive;
    InconclusiveReason reason = InconclusiveReason::none;
    std::optional<CaseLabel> label;
    /// Side of the curve that failed the tangency condition, with its witness.
    std::optional<Side> condition5_side;
    std::optional<Condition5Result> condition5;
    std::optional<PeanoTriangle> triangle;
    std::optional<EulerPolygon> polygon;
    std::string detail;

    double h() const { return triangle ? triangle->h : 0.0; }
};

enum class Combined { exists, no_solution_both_sides, mixed };

std::string_view to_string(Combined c);

struct Verdict {
    HalfPlaneVerdict right;
    HalfPlaneVerdict left;
    Combined combined = Combined::mixed;
};

/// True for the cases where non-existence in the half-plane is proved.
bool no_solution_case(const CaseLabel& label);

HalfPlaneVerdict decide_halfplane(const NormalizedProblem& p, HalfPlane hp, const SolverOptions& opts = {});

Combined combine(const HalfPlaneVerdict& right, const HalfPlaneVerdict& left);

Verdict decide(const BoundaryProblem& p, const SolverOptions& opts = {});

}  // namespace bcauchy
