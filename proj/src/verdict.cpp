#include "bcauchy/verdict.hpp"

#include <future>
#include <sstream>

namespace bcauchy {

std::string_view to_string(Outcome o) {
    switch (o) {
        case Outcome::exists: return "Exists";
        case Outcome::no_solution: return "NoSolution";
        case Outcome::inconclusive: return "Inconclusive";
    }
    return "?";
}

std::string_view to_string(InconclusiveReason r) {
    switch (r) {
        case InconclusiveReason::none: return "none";
        case InconclusiveReason::uncovered_case: return "UncoveredCase";
        case InconclusiveReason::condition5_violated: return "Condition5Violated";
        case InconclusiveReason::diagnostic: return "Diagnostic";
    }
    return "?";
}

std::string_view to_string(Combined c) {
    switch (c) {
        case Combined::exists: return "Exists";
        case Combined::no_solution_both_sides: return "NoSolutionBothSides";
        case Combined::mixed: return "Mixed";
    }
    return "?";
}

bool no_solution_case(const CaseLabel& l) {
    switch (l.family) {
        case Family::N2: return true;
        case Family::U2: return l.upper_slope == UpperSlope::positive;
        case Family::O2: return l.lower_slope == LowerSlope::negative;
        case Family::B2: return l.upper_slope == UpperSlope::positive && l.lower_slope == LowerSlope::negative;
        default: return false;
    }
}

namespace {

HalfPlaneVerdict inconclusive(HalfPlaneVerdict v, InconclusiveReason reason, std::string detail) {
    v.outcome = Outcome::inconclusive;
    v.reason = reason;
    v.detail = std::move(detail);
    return v;
}

}  // namespace

HalfPlaneVerdict decide_halfplane(const NormalizedProblem& p, HalfPlane hp, const SolverOptions& opts) {
    HalfPlaneVerdict v;
    v.halfplane = hp;
    try {
        const CaseLabel label = classify(p, hp, opts.classify);
        v.label = label;

        if (no_solution_case(label)) {
            v.outcome = Outcome::no_solution;
            v.detail = "case " + label.name() + ": no solution in this half-plane";
            return v;
        }
        if (!label.index_one())
            return inconclusive(std::move(v), InconclusiveReason::uncovered_case,
                                "case " + label.name() + " is covered by neither the existence nor the non-existence criterion");

        const NormalizedProblem q = oriented(p, hp);
        const CurveSet cs = label_curves(q, label);
        for (const auto* c : {&cs.upper, &cs.lower}) {
            if (!*c || !(*c)->tangent_to_axis()) continue;
            // q is right-facing; check there and map the witness back
            Condition5Result r = check_condition5(q, **c, opts.condition5);
            if (!r.pass) {
                if (hp == HalfPlane::left) {
                    r.witness_x = -r.witness_x;
                    r.field_slope = -r.field_slope;
                    r.curve_slope = -r.curve_slope;
                }
                v.condition5_side = (*c)->side;
                v.condition5 = r;
                std::ostringstream os;
                os << "case " << label.name() << ": tangency condition fails on the " << to_string((*c)->side)
                   << " curve at x = " << r.witness_x;
                return inconclusive(std::move(v), InconclusiveReason::condition5_violated, os.str());
            }
        }

        PeanoTriangle tri = build_triangle(p, label, opts.peano);
        EulerPolygon poly = build_polygon(p, tri, opts.rank, opts.euler);
        const PolygonCheck check = check_polygon(p, tri, poly);
        v.triangle = std::move(tri);
        if (!check.contained || !check.slope_bounded || !check.reaches_h)
            return inconclusive(std::move(v), InconclusiveReason::diagnostic,
                                "Euler polygon failed its containment or slope-bound check");
        v.polygon = std::move(poly);
        v.outcome = Outcome::exists;
        std::ostringstream os;
        os << "case " << label.name() << ": solution on a segment of length h = " << v.triangle->h;
        v.detail = os.str();
        return v;
    } catch (const Error& e) {
        return inconclusive(std::move(v), InconclusiveReason::diagnostic,
                            std::string(to_string(e.code())) + ": " + e.what());
    }
}

Combined combine(const HalfPlaneVerdict& right, const HalfPlaneVerdict& left) {
    if (right.outcome == Outcome::exists || left.outcome == Outcome::exists) return Combined::exists;
    if (right.outcome == Outcome::no_solution && left.outcome == Outcome::no_solution)
        return Combined::no_solution_both_sides;
    return Combined::mixed;
}

Verdict decide(const BoundaryProblem& p, const SolverOptions& opts) {
    const NormalizedProblem n = normalize(p, opts.validation);
    auto left = std::async(std::launch::async, [&] { return decide_halfplane(n, HalfPlane::left, opts); });
    Verdict v;
    v.right = decide_halfplane(n, HalfPlane::right, opts);
    v.left = left.get();
    v.combined = combine(v.right, v.left);
    return v;
}

}  // namespace bcauchy
