#include "bcauchy/peano.hpp"

#include <cmath>
#include <sstream>

namespace bcauchy {

double PeanoTriangle::upper_at(double x) const {
    if (const auto* r = std::get_if<Ray>(&upper_side)) return r->slope * x;
    return std::get<BoundaryCurve>(upper_side).value(x);
}

double PeanoTriangle::lower_at(double x) const {
    if (const auto* r = std::get_if<Ray>(&lower_side)) return r->slope * x;
    return std::get<BoundaryCurve>(lower_side).value(x);
}

double classic_peano_h(const Expr& f, double x0, double y0, double a, double b, const PeanoOptions& opts) {
    if (!(a > 0.0) || !(b > 0.0)) throw Error(ErrorCode::InvalidArgument, "rectangle half-sides must be positive");
    double m = 0.0;
    for (double x : linspace(x0 - a, x0 + a, opts.sup_grid - 1))
        for (double y : linspace(y0 - b, y0 + b, opts.sup_grid - 1)) m = std::max(m, std::fabs(f(x, y)));
    if (m == 0.0) return a;
    return std::min(a, b / (m * opts.safety));
}

namespace {

/// |f0| at a point known to be in the closure; curve points are evaluated on the curve itself.
double abs_f0_at(const NormalizedProblem& q, double x, double y) { return std::fabs(q.f0_right(x, y)); }

/// Sampled sup of |f0| over {0 <= x <= d, |y| <= d} intersected with the closure of the region.
double sampled_sup(const NormalizedProblem& q, double d, int n) {
    double m = 0.0;
    const std::vector<double> xs = linspace(0.0, d, n - 1);
    for (double x : xs) {
        for (double y : linspace(-d, d, n - 1)) {
            switch (membership(q, x, y)) {
                case Membership::inside: m = std::max(m, abs_f0_at(q, x, y)); break;
                case Membership::on_curve: break;  // covered by the exact curve samples below
                case Membership::outside: break;
            }
        }
        for (const auto* c : {&q.right.upper, &q.right.lower}) {
            if (!*c || !(*c)->covers(x)) continue;
            const double yb = (*c)->value(x);
            if (std::fabs(yb) <= d) m = std::max(m, abs_f0_at(q, x, yb));
        }
    }
    return m;
}

double curve_free_c0(const NormalizedProblem& q) {
    double c0 = INFINITY;
    for (const auto* c : {&q.right.upper, &q.right.lower})
        if (*c) c0 = std::min(c0, (*c)->extent);
    return std::isfinite(c0) ? c0 : 1.0;
}

/// Sampled sup of |f0| over the region between two sides on [0, h].
double sup_between(const NormalizedProblem& q, const PeanoTriangle& t, int n) {
    double m = 0.0;
    for (double x : linspace(0.0, t.h, n - 1)) {
        const double lo = t.lower_at(x);
        const double hi = t.upper_at(x);
        for (double y : linspace(lo, hi, n - 1)) m = std::max(m, abs_f0_at(q, x, y));
    }
    return m;
}

[[noreturn]] void unavailable(const CaseLabel& label) {
    throw Error(ErrorCode::ConstructionUnavailable,
                "no boundary triangle exists for case " + label.name() + " in the " +
                    std::string(to_string(label.halfplane)) + " half-plane");
}

}  // namespace

double delta_for_tau(const NormalizedProblem& q, double tau, const PeanoOptions& opts) {
    if (!(tau > 0.0)) throw Error(ErrorCode::InvalidArgument, "tau must be positive");
    for (double d = curve_free_c0(q); d >= opts.delta_min; d *= 0.5) {
        if (sampled_sup(q, d, opts.sup_grid) * opts.safety <= tau) return d;
    }
    std::ostringstream os;
    os << "no delta down to " << opts.delta_min << " keeps |f0| <= " << tau;
    throw Error(ErrorCode::NoDeltaFound, os.str());
}

PeanoTriangle build_triangle(const NormalizedProblem& p, const CaseLabel& label, const PeanoOptions& opts) {
    if (!label.index_one()) unavailable(label);
    const NormalizedProblem q = oriented(p, label.halfplane);
    const CurveSet cs = label_curves(q, label);
    const double c = label.c_witness;

    PeanoTriangle t;
    t.halfplane = label.halfplane;

    // Ray-sided triangles must stay inside the c~-square, hence the 1/max(1, tau) cap.
    auto ray_height = [](double a, double c_tilde, double tau) { return std::min(a, c_tilde / std::max(1.0, tau)); };

    switch (label.family) {
        case Family::N1: {
            double m = 0.0;
            for (double x : linspace(0.0, c, opts.sup_grid - 1))
                for (double y : linspace(-c, c, opts.sup_grid - 1)) m = std::max(m, abs_f0_at(q, x, y));
            m *= opts.safety;
            t.c_tilde = c;
            t.h = m == 0.0 ? c : std::min(c, c / m);
            t.upper_side = Ray{m};
            t.lower_side = Ray{-m};
            t.tau_bound = m;
            return t;
        }
        case Family::U1:
        case Family::O1: {
            const bool upper = label.family == Family::U1;
            const BoundaryCurve& curve = upper ? *cs.upper : *cs.lower;
            if (curve.tau > 0.0) {
                const double tau = curve.tau;
                t.c_tilde = std::min(c, delta_for_tau(q, tau, opts));
                const double a = restrict_to(curve, t.c_tilde).first;
                t.h = ray_height(a, t.c_tilde, tau);
                t.upper_side = Ray{tau};
                t.lower_side = Ray{-tau};
                t.tau_bound = tau;
            } else {
                t.c_tilde = std::min(c, delta_for_tau(q, 1.0, opts));
                const auto [a, r] = restrict_to(curve, t.c_tilde);
                t.h = a;
                if (upper) {
                    t.upper_side = r;
                    t.lower_side = Ray{-1.0};
                } else {
                    t.upper_side = Ray{1.0};
                    t.lower_side = r;
                }
                t.tau_bound = 1.0;
            }
            return t;
        }
        case Family::B1: {
            const BoundaryCurve& up = *cs.upper;
            const BoundaryCurve& low = *cs.lower;
            const bool up_pos = up.tau > 0.0;
            const bool low_neg = low.tau > 0.0;
            if (up_pos && low_neg) {
                const double tau = std::min(up.tau, low.tau);
                t.c_tilde = std::min(c, delta_for_tau(q, tau, opts));
                const double a = std::min(restrict_to(up, t.c_tilde).first, restrict_to(low, t.c_tilde).first);
                t.h = ray_height(a, t.c_tilde, tau);
                t.upper_side = Ray{tau};
                t.lower_side = Ray{-tau};
                t.tau_bound = tau;
            } else if (!up_pos && !low_neg) {
                // the neighbourhood set itself is the triangle
                t.c_tilde = c;
                t.h = std::min(up.extent, low.extent);
                t.upper_side = up.restricted(t.h);
                t.lower_side = low.restricted(t.h);
                t.tau_bound = sup_between(q, t, opts.sup_grid) * opts.safety;
            } else if (up_pos) {
                t.c_tilde = std::min(c, delta_for_tau(q, up.tau, opts));
                t.h = ray_height(restrict_to(up, t.c_tilde).first, t.c_tilde, up.tau);
                t.upper_side = Ray{up.tau};
                t.lower_side = low.restricted(std::min(t.h, low.extent));
                t.tau_bound = up.tau;
            } else {
                t.c_tilde = std::min(c, delta_for_tau(q, low.tau, opts));
                t.h = ray_height(restrict_to(low, t.c_tilde).first, t.c_tilde, low.tau);
                t.upper_side = up.restricted(std::min(t.h, up.extent));
                t.lower_side = Ray{-low.tau};
                t.tau_bound = low.tau;
            }
            return t;
        }
        default: unavailable(label);
    }
}

TriangleCheck check_triangle(const NormalizedProblem& p, const PeanoTriangle& t, const PeanoOptions& opts) {
    const NormalizedProblem q = oriented(p, t.halfplane);
    TriangleCheck r;
    const int n = opts.containment_grid;
    auto visit = [&](double x, double y) {
        const bool inside = in_closure(q, x, y);
        const Evaluation f = q.f0_right.eval(x, y);
        const bool ok_bound = f && std::fabs(f.value()) <= t.tau_bound + 1e-9;
        if (f) r.max_abs_f0 = std::max(r.max_abs_f0, std::fabs(f.value()));
        if (!inside) r.contained = false;
        if (!ok_bound) r.bounded = false;
        if ((!inside || !ok_bound) && !r.first_violation) r.first_violation = Point{x, y};
    };
    for (int i = 0; i < n; ++i) {
        const double x = t.h * (i + 0.5) / n;
        const double lo = t.lower_at(x);
        const double hi = t.upper_at(x);
        for (int j = 0; j < n; ++j) visit(x, lo + (hi - lo) * (j + 0.5) / n);
        visit(x, lo);
        visit(x, hi);
    }
    return r;
}

}  // namespace bcauchy
