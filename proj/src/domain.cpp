#include "bcauchy/domain.hpp"

#include <cmath>
#include <sstream>

namespace bcauchy {

std::string_view to_string(Side side) { return side == Side::upper ? "upper" : "lower"; }
std::string_view to_string(HalfPlane hp) { return hp == HalfPlane::right ? "right" : "left"; }

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) out[i] = lo + (hi - lo) * (static_cast<double>(i) / n);
    out.back() = hi;
    return out;
}

namespace {

const Expr kX = Expr::variable(Var::x);
const Expr kY = Expr::variable(Var::y);

std::string describe(const Expr& b, Side side, HalfPlane hp) {
    return std::string(to_string(hp)) + " " + std::string(to_string(side)) + " curve '" + b.str() + "'";
}

std::string num(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

}  // namespace

bool BoundaryCurve::covers(double x) const {
    const double slack = 1e-12 * std::max(1.0, extent);
    if (halfplane == HalfPlane::right) return x >= -slack && x <= extent + slack;
    return x <= slack && x >= -extent - slack;
}

BoundaryCurve BoundaryCurve::mirrored() const {
    BoundaryCurve m = *this;
    m.b = substitute(b, -kX, kY);
    m.db = differentiate(m.b, Var::x);
    m.halfplane = opposite(halfplane);
    return m;
}

BoundaryCurve BoundaryCurve::restricted(double a) const {
    BoundaryCurve r = *this;
    r.extent = a;
    const double end = value(halfplane == HalfPlane::right ? a : -a);
    r.cstar = std::max(a, std::fabs(end));
    return r;
}

BoundaryCurve validate_curve(const Expr& b, double extent, Side side, HalfPlane hp,
                             const ValidationOptions& opts) {
    if (!(extent > 0.0)) throw Error(ErrorCode::InvalidArgument, "extent must be positive");
    if (b.depends_on(Var::y))
        throw Error(ErrorCode::InvalidArgument, "boundary function must depend on x only: '" + b.str() + "'");

    // Right-facing view: all checks are written for x in [0, extent].
    const Expr bo = hp == HalfPlane::right ? b : substitute(b, -kX, kY);
    const Expr dbo = differentiate(bo, Var::x);
    const std::string name = describe(b, side, hp);

    if (std::fabs(bo(0.0, 0.0)) > opts.origin_tol)
        throw Error(ErrorCode::NotZeroAtOrigin, name + " does not pass through the origin");

    double s0 = dbo(0.0, 0.0);
    if (std::fabs(s0) <= opts.slope_zero_tol) s0 = 0.0;
    if (side == Side::upper && s0 < 0.0)
        throw Error(ErrorCode::WrongSlopeSign, name + " has negative slope " + num(s0) + " at the origin");
    if (side == Side::lower && s0 > 0.0)
        throw Error(ErrorCode::WrongSlopeSign, name + " has positive slope " + num(s0) + " at the origin");

    BoundaryCurve c;
    c.b = b;
    c.db = differentiate(b, Var::x);
    c.extent = extent;
    c.side = side;
    c.halfplane = hp;
    c.tau = std::fabs(s0) / 2.0;

    const std::vector<double> xs = linspace(0.0, extent, opts.grid);
    std::vector<double> vs(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) vs[i] = bo(xs[i], 0.0);
    const double end = vs.back();
    c.cstar = std::max(extent, std::fabs(end));

    if (c.tau == 0.0) {
        // upper: convex, lower: concave; midpoint test over all grid pairs with a grid midpoint
        const double sgn = side == Side::upper ? 1.0 : -1.0;
        const std::size_t n = vs.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 2; j < n; j += 2) {
                const double mid = vs[(i + j) / 2];
                if (sgn * (mid - 0.5 * (vs[i] + vs[j])) > opts.convexity_tol) {
                    throw Error(ErrorCode::NotConvex,
                                name + (side == Side::upper ? " is not convex" : " is not concave") +
                                    " near x = " + num(xs[(i + j) / 2]));
                }
            }
        }
        if (std::fabs(end) > extent)
            throw Error(ErrorCode::Condition3Violated,
                        name + ": |b(a*)| = " + num(std::fabs(end)) + " exceeds the extent " + num(extent));
    } else {
        for (double x : xs) {
            const double d = dbo(x, 0.0);
            const bool ok = side == Side::upper ? d >= c.tau - opts.convexity_tol
                                                : d <= -c.tau + opts.convexity_tol;
            if (!ok)
                throw Error(ErrorCode::Condition3Violated,
                            name + ": slope " + num(d) + " at x = " + num(x) + " falls below tau = " + num(c.tau));
        }
    }
    return c;
}

Point NormalizedProblem::to_original(Point p) const {
    const double t = mirrored ? -p.x : p.x;
    return {t + x0, p.y + y0 + shear * t};
}

NormalizedProblem normalize(const BoundaryProblem& p, const ValidationOptions& opts) {
    const Evaluation fr = p.rhs_right.eval(p.x0, p.y0);
    if (!fr) throw Error(ErrorCode::SubstitutionFault, "right-hand side faults at the initial point: " + fr.fault().message());
    const Evaluation fl = p.rhs_left.eval(p.x0, p.y0);
    if (!fl) throw Error(ErrorCode::SubstitutionFault, "right-hand side faults at the initial point: " + fl.fault().message());
    if (std::fabs(fr.value() - fl.value()) > 1e-9)
        throw Error(ErrorCode::InvalidArgument, "right-hand side pieces disagree at the initial point");

    const double shear = fr.value();
    // x = t + x0, y = v + y0 + f(x0, y0) t
    const Expr xs = kX + Expr::constant(p.x0);
    const Expr ys = kY + Expr::constant(p.y0) + Expr::constant(shear) * kX;

    NormalizedProblem n;
    n.x0 = p.x0;
    n.y0 = p.y0;
    n.shear = shear;
    n.f0_right = substitute(p.rhs_right, xs, ys) - Expr::constant(shear);
    n.f0_left = substitute(p.rhs_left, xs, ys) - Expr::constant(shear);
    n.region.g = substitute(p.region.g, xs, ys);

    for (const CurveSpec& spec : p.curves) {
        const Expr b0 = substitute(spec.b, xs, Expr()) - Expr::constant(p.y0) - Expr::constant(shear) * kX;
        BoundaryCurve c = validate_curve(b0, spec.extent, spec.side, spec.halfplane, opts);
        CurveSet& set = spec.halfplane == HalfPlane::right ? n.right : n.left;
        std::optional<BoundaryCurve>& slot = spec.side == Side::upper ? set.upper : set.lower;
        if (slot)
            throw Error(ErrorCode::InvalidArgument, "more than one " + std::string(to_string(spec.side)) +
                                                        " curve in the " + std::string(to_string(spec.halfplane)) +
                                                        " half-plane");
        slot = std::move(c);
    }

    for (const Expr* f : {&n.f0_right, &n.f0_left}) {
        const Evaluation v = f->eval(0.0, 0.0);
        if (!v || std::fabs(v.value()) > 1e-12)
            throw Error(ErrorCode::SubstitutionFault, "normalized right-hand side is not zero at the origin");
    }

    const bool has_curves = !n.right.empty() || !n.left.empty();
    const Evaluation g0 = n.region.g.eval(0.0, 0.0);
    if (!has_curves && (!g0 || g0.value() < -opts.on_boundary_tol))
        throw Error(ErrorCode::InitialPointOutside, "initial point lies outside the closure of the region");

    for (const CurveSet* set : {&n.right, &n.left}) {
        for (const auto* c : {&set->upper, &set->lower}) {
            if (!*c) continue;
            const BoundaryCurve& curve = **c;
            const double dir = curve.halfplane == HalfPlane::right ? 1.0 : -1.0;
            for (double x : linspace(0.0, curve.extent, opts.grid)) {
                const double xc = dir * x;
                const Evaluation g = n.region.g.eval(xc, curve.value(xc));
                if (!g || std::fabs(g.value()) > opts.on_boundary_tol)
                    throw Error(ErrorCode::CurveNotOnBoundary,
                                describe(curve.b, curve.side, curve.halfplane) +
                                    " is not on the zero set of the region predicate near x = " + num(xc));
            }
        }
    }
    return n;
}

NormalizedProblem reflect(const NormalizedProblem& p) {
    const Expr mx = -kX;
    NormalizedProblem r = p;
    r.f0_right = -substitute(p.f0_left, mx, kY);
    r.f0_left = -substitute(p.f0_right, mx, kY);
    r.region.g = substitute(p.region.g, mx, kY);
    auto mirror = [](const std::optional<BoundaryCurve>& c) -> std::optional<BoundaryCurve> {
        if (!c) return std::nullopt;
        return c->mirrored();
    };
    r.right = {mirror(p.left.upper), mirror(p.left.lower)};
    r.left = {mirror(p.right.upper), mirror(p.right.lower)};
    r.mirrored = !p.mirrored;
    return r;
}

NormalizedProblem oriented(const NormalizedProblem& p, HalfPlane hp) {
    return hp == HalfPlane::right ? p : reflect(p);
}

Membership membership(const NormalizedProblem& p, double x, double y, double tol) {
    const CurveSet& set = x >= 0.0 ? p.right : p.left;
    for (const auto* c : {&set.upper, &set.lower}) {
        if (!*c || !(*c)->covers(x)) continue;
        const Evaluation b = (*c)->b.eval(x, 0.0);
        if (b && std::fabs(y - b.value()) <= tol) return Membership::on_curve;
    }
    // at x == 0 the left curves may also hold the point
    if (x == 0.0) {
        for (const auto* c : {&p.left.upper, &p.left.lower}) {
            if (*c && std::fabs(y - (*c)->value(0.0)) <= tol) return Membership::on_curve;
        }
    }
    const Evaluation g = p.region.g.eval(x, y);
    if (g && g.value() > 0.0) return Membership::inside;
    return Membership::outside;
}

}  // namespace bcauchy
