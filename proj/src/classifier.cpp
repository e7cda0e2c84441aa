#include "bcauchy/classifier.hpp"

#include <cmath>
#include <sstream>

namespace bcauchy {

std::string_view to_string(Family f) {
    switch (f) {
        case Family::N1: return "N1";
        case Family::N2: return "N2";
        case Family::U1: return "U1";
        case Family::U2: return "U2";
        case Family::O1: return "O1";
        case Family::O2: return "O2";
        case Family::B1: return "B1";
        case Family::B2: return "B2";
    }
    return "?";
}

bool CaseLabel::index_one() const {
    return family == Family::N1 || family == Family::U1 || family == Family::O1 || family == Family::B1;
}

std::string CaseLabel::name() const {
    std::string s(to_string(family));
    std::string parts;
    if (upper_slope != UpperSlope::absent)
        parts += std::string("upper slope ") + (upper_slope == UpperSlope::positive ? "positive" : "zero");
    if (lower_slope != LowerSlope::absent) {
        if (!parts.empty()) parts += ", ";
        parts += std::string("lower slope ") + (lower_slope == LowerSlope::negative ? "negative" : "zero");
    }
    if (!parts.empty()) s += " (" + parts + ")";
    return s;
}

std::pair<double, BoundaryCurve> restrict_to(const BoundaryCurve& curve, double c) {
    if (curve.halfplane != HalfPlane::right)
        throw Error(ErrorCode::InvalidArgument, "restrict_to expects a right-facing curve");
    // slack for curves that were themselves cut by the bisection below
    if (!(c > 0.0) || c > curve.cstar * (1.0 + 1e-9)) {
        std::ostringstream os;
        os << "c = " << c << " outside (0, " << curve.cstar << "]";
        throw Error(ErrorCode::OutOfRange, os.str());
    }
    auto reach = [&](double a) { return std::max(a, std::fabs(curve.value(a))); };
    double a = curve.extent;
    if (reach(a) > c) {
        // reach(a) is nondecreasing; keep the rightmost a with reach(a) <= c
        double lo = 0.0;
        double hi = curve.extent;
        while (hi - lo > 1e-12) {
            const double mid = 0.5 * (lo + hi);
            if (reach(mid) <= c) lo = mid;
            else hi = mid;
        }
        a = lo;
    }
    return {a, curve.restricted(a)};
}

namespace {

enum class SampleVerdict { all_inside, all_outside, mixed, all_fault };

struct SampleCount {
    int inside = 0;
    int outside = 0;
    int faults = 0;

    SampleVerdict verdict() const {
        if (inside > 0 && outside == 0) return SampleVerdict::all_inside;
        if (inside == 0 && outside > 0) return outside == faults ? SampleVerdict::all_fault : SampleVerdict::all_outside;
        if (inside == 0 && outside == 0) return SampleVerdict::all_fault;
        return SampleVerdict::mixed;
    }
};

/// Stratified sample of X_c: x in (0, c], y between the lower cut (or -c)
/// and the upper cut (or c); points within `margin` of a curve are skipped.
SampleCount sample_region(const NormalizedProblem& q, const std::optional<BoundaryCurve>& upper,
                          const std::optional<BoundaryCurve>& lower, double c, const ClassifyOptions& opts) {
    SampleCount count;
    const int n = opts.cells;
    for (int i = 0; i < n; ++i) {
        const double x = c * (i + 0.5) / n;
        const bool cut_up = upper && x <= upper->extent;
        const bool cut_low = lower && x <= lower->extent;
        const double bu = cut_up ? upper->value(x) : 0.0;
        const double bl = cut_low ? lower->value(x) : 0.0;
        const double hi = cut_up ? bu : c;
        const double lo = cut_low ? bl : -c;
        if (hi <= lo) continue;
        for (int j = 0; j < n; ++j) {
            const double y = lo + (hi - lo) * (j + 0.5) / n;
            if (cut_up && std::fabs(y - bu) <= opts.margin) continue;
            if (cut_low && std::fabs(y - bl) <= opts.margin) continue;
            const Evaluation g = q.region.g.eval(x, y);
            if (!g) {
                ++count.faults;
                ++count.outside;
            } else if (g.value() > 0.0) {
                ++count.inside;
            } else {
                ++count.outside;
            }
        }
    }
    return count;
}

bool identically_zero(const BoundaryCurve& c) {
    for (double x : linspace(0.0, c.extent, 64))
        if (std::fabs(c.value(x)) > 1e-12) return false;
    return true;
}

UpperSlope upper_slope_of(const BoundaryCurve& c) { return c.tau > 0.0 ? UpperSlope::positive : UpperSlope::zero; }
LowerSlope lower_slope_of(const BoundaryCurve& c) { return c.tau > 0.0 ? LowerSlope::negative : LowerSlope::zero; }

BoundaryCurve as_side(BoundaryCurve c, Side s) {
    c.side = s;
    return c;
}

[[noreturn]] void ambiguous(const CaseLabel& l, const SampleCount& s) {
    std::ostringstream os;
    os << to_string(l.halfplane) << " half-plane: region samples disagree (" << s.inside << " inside, " << s.outside
       << " outside) at c = " << l.c_witness;
    throw Error(ErrorCode::AmbiguousRegion, os.str());
}

CaseLabel classify_without_curves(const NormalizedProblem& q, CaseLabel label, const ClassifyOptions& opts) {
    double c = opts.c.value_or(opts.neighborhood);
    SampleCount last;
    for (int k = 0; k <= (opts.c ? 0 : opts.neighborhood_halvings); ++k, c *= 0.5) {
        label.c_witness = c;
        last = sample_region(q, std::nullopt, std::nullopt, c, opts);
        switch (last.verdict()) {
            case SampleVerdict::all_inside: label.family = Family::N1; return label;
            case SampleVerdict::all_outside: label.family = Family::N2; return label;
            case SampleVerdict::all_fault:
                throw Error(ErrorCode::NoCurvesNoRegion,
                            std::string(to_string(label.halfplane)) + " half-plane: region predicate faults everywhere");
            case SampleVerdict::mixed: break;
        }
    }
    ambiguous(label, last);
}

}  // namespace

CurveSet label_curves(const NormalizedProblem& q, const CaseLabel& label) {
    const CurveSet& cs = q.right;
    CurveSet out;
    auto restricted = [&](const BoundaryCurve& c) { return restrict_to(c, std::min(label.c_witness, c.cstar)).second; };
    if (label.zero_curve_reassigned) {
        const BoundaryCurve& only = cs.upper ? *cs.upper : *cs.lower;
        const BoundaryCurve r = restricted(only);
        if (cs.upper) out.lower = as_side(r, Side::lower);
        else out.upper = as_side(r, Side::upper);
        return out;
    }
    if (label.upper_slope != UpperSlope::absent && cs.upper) out.upper = restricted(*cs.upper);
    if (label.lower_slope != LowerSlope::absent && cs.lower) out.lower = restricted(*cs.lower);
    return out;
}

CaseLabel classify(const NormalizedProblem& p, HalfPlane hp, const ClassifyOptions& opts) {
    const NormalizedProblem q = oriented(p, hp);
    const CurveSet& cs = q.right;
    CaseLabel label;
    label.halfplane = hp;

    if (cs.empty()) return classify_without_curves(q, label, opts);

    double c = opts.c.value_or(std::min(cs.upper ? cs.upper->cstar : INFINITY, cs.lower ? cs.lower->cstar : INFINITY));
    label.c_witness = c;
    std::optional<BoundaryCurve> up;
    std::optional<BoundaryCurve> low;
    if (cs.upper) up = restrict_to(*cs.upper, c).second;
    if (cs.lower) low = restrict_to(*cs.lower, c).second;

    if (up && low) {
        const SampleCount s = sample_region(q, up, low, c, opts);
        label.upper_slope = upper_slope_of(*up);
        label.lower_slope = lower_slope_of(*low);
        switch (s.verdict()) {
            case SampleVerdict::all_inside: label.family = Family::B1; return label;
            case SampleVerdict::all_outside: label.family = Family::B2; return label;
            default: ambiguous(label, s);
        }
    }

    const BoundaryCurve& only = up ? *up : *low;
    const SampleCount under = sample_region(q, only, std::nullopt, c, opts);  // curve as the upper cut
    const SampleCount over = sample_region(q, std::nullopt, only, c, opts);   // curve as the lower cut

    if (identically_zero(only)) {
        // A lone curve on the x-axis: take whichever side the region is on.
        if (under.verdict() == SampleVerdict::all_inside) {
            label.family = Family::U1;
            label.upper_slope = UpperSlope::zero;
            label.zero_curve_reassigned = !up.has_value();
            return label;
        }
        if (over.verdict() == SampleVerdict::all_inside) {
            label.family = Family::O1;
            label.lower_slope = LowerSlope::zero;
            label.zero_curve_reassigned = up.has_value();
            return label;
        }
    }

    const SampleCount& s = up ? under : over;
    if (up) label.upper_slope = upper_slope_of(*up);
    else label.lower_slope = lower_slope_of(*low);
    switch (s.verdict()) {
        case SampleVerdict::all_inside: label.family = up ? Family::U1 : Family::O1; return label;
        case SampleVerdict::all_outside: label.family = up ? Family::U2 : Family::O2; return label;
        default: ambiguous(label, s);
    }
}

Condition5Result check_condition5(const NormalizedProblem& p, const BoundaryCurve& curve,
                                  const Condition5Options& opts) {
    if (!curve.tangent_to_axis())
        throw Error(ErrorCode::InvalidArgument, "the tangency condition applies only to curves tangent to the axis");
    const bool left = curve.halfplane == HalfPlane::left;
    const NormalizedProblem q = oriented(p, curve.halfplane);
    const BoundaryCurve c = left ? curve.mirrored() : curve;
    const double sgn = c.side == Side::upper ? 1.0 : -1.0;

    Condition5Result r;
    for (int k = 0; k < opts.points; ++k) {
        const double frac = opts.points == 1 ? 1.0 : static_cast<double>(k) / (opts.points - 1);
        const double x = c.extent * std::pow(10.0, -opts.decades * (1.0 - frac));
        const double yb = c.value(x);
        const Evaluation f = q.f0_right.eval(x, yb);
        if (!f) {
            std::ostringstream os;
            os << "right-hand side faults on the curve at x = " << (left ? -x : x) << ": " << f.fault().message();
            throw Error(ErrorCode::EvaluationFault, os.str());
        }
        const double slope = c.slope(x);
        if (sgn * (f.value() - slope) > opts.tol) {
            r.pass = false;
            r.witness_x = left ? -x : x;
            // report slopes in the caller's frame
            r.field_slope = left ? -f.value() : f.value();
            r.curve_slope = left ? -slope : slope;
            return r;
        }
    }
    return r;
}

}  // namespace bcauchy
