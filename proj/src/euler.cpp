#include "bcauchy/euler.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>
#include <tuple>

namespace bcauchy {

namespace {

std::string at(double x, double y) {
    std::ostringstream os;
    os.precision(10);
    os << "(" << x << ", " << y << ")";
    return os.str();
}

bool near(const BoundaryCurve* c, double x, double y, double tol) {
    if (!c || !c->covers(x)) return false;
    const Evaluation b = c->b.eval(x, 0.0);
    return b && std::fabs(y - b.value()) <= tol;
}

/// Rightmost t in [x, xn] with the segment still on the region side of the curve.
/// `sgn` is +1 for an upper curve (segment must stay below) and -1 for a lower one.
double crossing(double x, double y, double s, double xn, const BoundaryCurve& c, double sgn, double tol) {
    auto outside = [&](double t) { return sgn * (y + s * (t - x) - c.value(t)) > 0.0; };
    double lo = x;
    double hi = xn;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (outside(mid)) hi = mid;
        else lo = mid;
    }
    return lo;
}

}  // namespace

EulerPolygon build_polygon(const NormalizedProblem& p, const PeanoTriangle& tri, int rank, const EulerOptions& opts) {
    if (rank < 1) throw Error(ErrorCode::InvalidArgument, "rank must be at least 1");
    const NormalizedProblem q = oriented(p, tri.halfplane);
    const BoundaryCurve* up = tri.upper_curve();
    const BoundaryCurve* low = tri.lower_curve();
    const auto* up_ray = std::get_if<Ray>(&tri.upper_side);
    const auto* low_ray = std::get_if<Ray>(&tri.lower_side);

    EulerPolygon poly;
    poly.halfplane = tri.halfplane;
    poly.rank = rank;
    poly.vertices.reserve(static_cast<std::size_t>(rank) + 1);
    poly.vertices.push_back({0.0, 0.0});
    if (near(up, 0.0, 0.0, opts.on_curve_tol) || near(low, 0.0, 0.0, opts.on_curve_tol))
        poly.boundary_contacts.push_back(0);

    double x = 0.0;
    double y = 0.0;
    for (int k = 1; k <= rank; ++k) {
        const double xt = k == rank ? tri.h : tri.h * (static_cast<double>(k) / rank);
        int splits = 0;
        while (x < xt) {
            const bool at_up = near(up, x, y, opts.on_curve_tol);
            const bool at_low = near(low, x, y, opts.on_curve_tol);
            const Evaluation fe = q.f0_right.eval(x, y);
            if (!fe) throw Error(ErrorCode::EvaluationFault, "right-hand side faults at " + at(x, y) + ": " + fe.fault().message());
            const double s = fe.value();

            if (at_up && s > up->slope(x) + opts.exit_tol)
                throw Error(ErrorCode::PolygonExits, "field points out through the upper curve at " + at(x, y));
            if (at_low && s < low->slope(x) - opts.exit_tol)
                throw Error(ErrorCode::PolygonExits, "field points out through the lower curve at " + at(x, y));

            double xn = xt;
            double yn = y + s * (xn - x);
            bool split = false;

            for (const auto& [curve, sgn, riding] : {std::tuple{up, 1.0, at_up}, std::tuple{low, -1.0, at_low}}) {
                if (!curve) continue;
                const double excess = sgn * (yn - curve->value(xn));
                if (excess <= 0.0) continue;
                if (riding) {
                    // sliding along the curve; only rounding-size overshoot is tolerated
                    if (excess > opts.exit_tol)
                        throw Error(ErrorCode::PolygonExits, "polygon leaves through a curve side after " + at(x, y));
                    yn = curve->value(xn);
                    continue;
                }
                const double xc = crossing(x, y, s, xn, *curve, sgn, opts.bisection_tol);
                if (xc <= x)
                    throw Error(ErrorCode::PolygonExits, "polygon meets a curve side transversally at " + at(x, y));
                xn = xc;
                yn = y + s * (xn - x);
                split = true;
            }

            if (up_ray && yn > up_ray->slope * xn + opts.exit_tol)
                throw Error(ErrorCode::PolygonExits, "polygon crossed the upper ray side at " + at(xn, yn));
            if (low_ray && yn < low_ray->slope * xn - opts.exit_tol)
                throw Error(ErrorCode::PolygonExits, "polygon crossed the lower ray side at " + at(xn, yn));

            poly.vertices.push_back({xn, yn});
            if (near(up, xn, yn, opts.on_curve_tol) || near(low, xn, yn, opts.on_curve_tol))
                poly.boundary_contacts.push_back(poly.vertices.size() - 1);
            x = xn;
            y = yn;
            if (split && ++splits > opts.max_splits)
                throw Error(ErrorCode::PolygonExits, "too many curve contacts within one step near " + at(x, y));
        }
    }
    return poly;
}

double interpolate(const EulerPolygon& poly, double x) {
    const auto& v = poly.vertices;
    if (x <= v.front().x) return v.front().y;
    if (x >= v.back().x) return v.back().y;
    const auto it = std::upper_bound(v.begin(), v.end(), x, [](double t, const Point& pt) { return t < pt.x; });
    const Point& b = *it;
    const Point& a = *(it - 1);
    if (b.x == a.x) return b.y;
    return a.y + (b.y - a.y) * ((x - a.x) / (b.x - a.x));
}

Refinement refine(const NormalizedProblem& p, const PeanoTriangle& tri, int base_rank, int levels,
                  const EulerOptions& opts) {
    if (levels < 2) throw Error(ErrorCode::InvalidArgument, "refinement needs at least two levels");
    if (base_rank < 1) throw Error(ErrorCode::InvalidArgument, "rank must be at least 1");

    std::vector<std::future<EulerPolygon>> jobs;
    for (int i = 0; i < levels; ++i) {
        const int rank = base_rank << i;
        jobs.push_back(std::async(std::launch::async, [&p, &tri, rank, &opts] { return build_polygon(p, tri, rank, opts); }));
    }
    Refinement r;
    for (auto& j : jobs) r.levels.push_back(j.get());

    for (int i = 0; i + 1 < levels; ++i) {
        const EulerPolygon& coarse = r.levels[i];
        const EulerPolygon& fine = r.levels[i + 1];
        double gap = 0.0;
        for (int k = 0; k <= fine.rank; ++k) {
            const double x = k == fine.rank ? tri.h : tri.h * (static_cast<double>(k) / fine.rank);
            gap = std::max(gap, std::fabs(interpolate(fine, x) - interpolate(coarse, x)));
        }
        r.cauchy_gaps.push_back(gap);
    }
    return r;
}

double residual(const NormalizedProblem& p, const EulerPolygon& poly) {
    const NormalizedProblem q = oriented(p, poly.halfplane);
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < poly.vertices.size(); ++i) {
        const Point& a = poly.vertices[i];
        const Point& b = poly.vertices[i + 1];
        const double dx = b.x - a.x;
        if (dx <= 0.0) continue;
        const double slope = (b.y - a.y) / dx;
        const double xm = 0.5 * (a.x + b.x);
        const double ym = 0.5 * (a.y + b.y);
        Evaluation f = q.f0_right.eval(xm, ym);
        if (!f) {
            // chord midpoints of a polygon riding a convex side fall just outside; use the side itself
            for (const auto* c : {&q.right.upper, &q.right.lower}) {
                if (*c && (*c)->covers(xm) && std::fabs(ym - (*c)->value(xm)) <= 1e-6) {
                    f = q.f0_right.eval(xm, (*c)->value(xm));
                    break;
                }
            }
        }
        worst = std::max(worst, std::fabs(slope - f.value()));
    }
    return worst;
}

PolygonCheck check_polygon(const NormalizedProblem& p, const PeanoTriangle& tri, const EulerPolygon& poly) {
    const NormalizedProblem q = oriented(p, poly.halfplane);
    PolygonCheck r;
    const auto& v = poly.vertices;
    r.starts_at_origin = !v.empty() && v.front().x == 0.0 && v.front().y == 0.0;
    r.reaches_h = !v.empty() && std::fabs(v.back().x - tri.h) <= 1e-12;

    auto near_declared = [&](double x, double y) {
        const BoundaryCurve* u = q.right.upper ? &*q.right.upper : nullptr;
        const BoundaryCurve* l = q.right.lower ? &*q.right.lower : nullptr;
        return near(u, x, y, 1e-9) || near(l, x, y, 1e-9);
    };
    for (std::size_t i = 1; i < v.size(); ++i) {
        const Evaluation g = q.region.g.eval(v[i].x, v[i].y);
        bool ok;
        if (!g) ok = near_declared(v[i].x, v[i].y);
        else ok = g.value() >= -1e-9 && (g.value() >= 1e-9 || near_declared(v[i].x, v[i].y));
        if (!ok && r.contained) {
            r.contained = false;
            r.first_bad_vertex = i;
        }
        const double dx = v[i].x - v[i - 1].x;
        if (dx > 0.0) {
            const double s = std::fabs((v[i].y - v[i - 1].y) / dx);
            r.max_abs_slope = std::max(r.max_abs_slope, s);
            if (s > tri.tau_bound + 1e-9) r.slope_bounded = false;
        }
    }
    return r;
}

StartProbe probe_start(const NormalizedProblem& p, HalfPlane hp, int max_halvings) {
    const NormalizedProblem q = oriented(p, hp);
    StartProbe r;
    r.slope = q.f0_right(0.0, 0.0);
    double step = 1.0;
    for (int k = 1; k <= max_halvings; ++k) {
        step *= 0.5;
        r.steps_tried = k;
        r.smallest_step = step;
        // tolerance scales with the step so tiny steps cannot pass by grazing a curve
        if (in_closure(q, step, r.slope * step, 1e-9 * step)) {
            r.continuable = true;
            return r;
        }
    }
    return r;
}

std::vector<Point> to_original(const NormalizedProblem& p, const EulerPolygon& poly) {
    const NormalizedProblem q = oriented(p, poly.halfplane);
    std::vector<Point> out;
    out.reserve(poly.vertices.size());
    for (const Point& v : poly.vertices) out.push_back(q.to_original(v));
    return out;
}

}  // namespace bcauchy
