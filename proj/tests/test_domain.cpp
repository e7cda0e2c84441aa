#include <doctest.h>

#include <cmath>

#include "bcauchy/domain.hpp"
#include "generators.hpp"

using namespace bcauchy;

namespace {

BoundaryProblem make(const char* rhs, const char* region, std::vector<CurveSpec> curves = {}, double x0 = 0,
                     double y0 = 0) {
    BoundaryProblem p;
    p.rhs_right = p.rhs_left = parse(rhs);
    p.region.g = parse(region);
    p.curves = std::move(curves);
    p.x0 = x0;
    p.y0 = y0;
    return p;
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error");
    return ErrorCode::IoError;
}

}  // namespace

TEST_CASE("validate_curve computes tau and c*") {
    const BoundaryCurve c = validate_curve(parse("2*x^2"), 0.5, Side::upper, HalfPlane::right);
    CHECK(c.tau == 0.0);
    CHECK(c.cstar == doctest::Approx(0.5));
    CHECK(c.db.str() == "4*x");

    const BoundaryCurve z = validate_curve(parse("0"), 1.0, Side::upper, HalfPlane::right);
    CHECK(z.tau == 0.0);
    CHECK(z.cstar == 1.0);

    const BoundaryCurve r = validate_curve(parse("x"), 1.0, Side::upper, HalfPlane::right);
    CHECK(r.tau == 0.5);
    const BoundaryCurve l = validate_curve(parse("-3*x"), 0.2, Side::lower, HalfPlane::right);
    CHECK(l.tau == 1.5);
    CHECK(l.cstar == doctest::Approx(0.6));

    // left curve on [-a, 0]; a lower curve with G above is concave in the mirrored view too
    const BoundaryCurve left = validate_curve(parse("-2*x^2"), 0.5, Side::lower, HalfPlane::left);
    CHECK(left.covers(-0.25));
    CHECK_FALSE(left.covers(0.25));
    const BoundaryCurve lr = validate_curve(parse("x"), 1.0, Side::lower, HalfPlane::left);
    CHECK(lr.tau == 0.5);
}

TEST_CASE("validate_curve rejects each failed requirement by name") {
    CHECK(code_of([] { validate_curve(parse("-x"), 1, Side::upper, HalfPlane::right); }) == ErrorCode::WrongSlopeSign);
    CHECK(code_of([] { validate_curve(parse("x"), 1, Side::lower, HalfPlane::right); }) == ErrorCode::WrongSlopeSign);
    CHECK(code_of([] { validate_curve(parse("x^2+0.1"), 1, Side::upper, HalfPlane::right); }) ==
          ErrorCode::NotZeroAtOrigin);
    CHECK(code_of([] { validate_curve(parse("-x^2"), 0.5, Side::upper, HalfPlane::right); }) == ErrorCode::NotConvex);
    CHECK(code_of([] { validate_curve(parse("2*x^2"), 0.5, Side::lower, HalfPlane::right); }) == ErrorCode::NotConvex);
    // tangent curve leaving the unit box: |b(a*)| > a*
    CHECK(code_of([] { validate_curve(parse("2*x^2"), 1.0, Side::upper, HalfPlane::right); }) ==
          ErrorCode::Condition3Violated);
    // slope drops below tau = 1/2 on the interval
    CHECK(code_of([] { validate_curve(parse("x - x^2"), 0.9, Side::upper, HalfPlane::right); }) ==
          ErrorCode::Condition3Violated);
    CHECK(code_of([] { validate_curve(parse("y"), 1, Side::upper, HalfPlane::right); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { validate_curve(parse("x"), 0, Side::upper, HalfPlane::right); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("normalize moves the initial point to the origin") {
    const NormalizedProblem n = normalize(make("y", "1", {}, 0.0, 1.0));
    for (double x : {-0.5, 0.0, 0.3})
        for (double y : {-1.0, 0.0, 2.0}) CHECK(n.f0_right(x, y) == doctest::Approx(x + y));
    CHECK(n.f0_right(0, 0) == 0.0);
    const Point o = n.to_original({0.5, 0.25});
    CHECK(o.x == 0.5);
    CHECK(o.y == doctest::Approx(0.25 + 1.0 + 0.5));

    const char* ex1 = "4*(-1)*sqrt(2*x^2-abs(y))+6*x";
    const NormalizedProblem e = normalize(make(ex1, "2*x^2-abs(y)",
                                               {{parse("2*x^2"), 0.5, Side::upper, HalfPlane::right},
                                                {parse("-2*x^2"), 0.5, Side::lower, HalfPlane::right}}));
    CHECK(e.f0_right.str() == parse(ex1).str());
    CHECK(e.right.upper);
    CHECK(e.right.lower);
    CHECK(e.left.empty());
}

TEST_CASE("normalize reports inconsistent problems") {
    CHECK(code_of([] { normalize(make("sqrt(x)", "1", {}, -1.0, 0.0)); }) == ErrorCode::SubstitutionFault);
    CHECK(code_of([] { normalize(make("0", "-1")); }) == ErrorCode::InitialPointOutside);
    CHECK(code_of([] {
              normalize(make("0", "y-x^2", {{parse("2*x^2"), 0.5, Side::upper, HalfPlane::right}}));
          }) == ErrorCode::CurveNotOnBoundary);
    CHECK(code_of([] {
              normalize(make("0", "y", {{parse("0"), 0.5, Side::upper, HalfPlane::right},
                                        {parse("x^2"), 0.5, Side::upper, HalfPlane::right}}));
          }) == ErrorCode::InvalidArgument);
    BoundaryProblem piecewise = make("1", "1");
    piecewise.rhs_left = parse("2");
    CHECK(code_of([&] { normalize(piecewise); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("reflection of the piecewise example") {
    BoundaryProblem p = make("0", "y-((x+abs(x))/2)^2",
                             {{parse("x^2"), 0.5, Side::upper, HalfPlane::right},
                              {parse("0"), 0.5, Side::lower, HalfPlane::left}});
    p.rhs_right = parse("-2*x*(2*sqrt(y-x^2)+1)");
    p.rhs_left = parse("-4*x*(sqrt(y)+1)");
    const NormalizedProblem r = reflect(normalize(p));
    // -f0(-x, y) with f0 = -4x(sqrt(y)+1) is -4x(sqrt(y)+1)
    for (double x : {0.1, 0.4})
        for (double y : {0.0, 0.5, 2.0}) CHECK(r.f0_right(x, y) == doctest::Approx(-4 * x * (std::sqrt(y) + 1)));
    REQUIRE(r.right.lower);
    CHECK(r.right.lower->value(0.3) == 0.0);
    CHECK(r.right.lower->halfplane == HalfPlane::right);
    CHECK_FALSE(r.right.upper);
    REQUIRE(r.left.upper);
    CHECK(r.left.upper->value(-0.3) == doctest::Approx(0.09));
}

TEST_CASE("right-only problem has an empty left side after reflection") {
    const NormalizedProblem n = normalize(make("x", "x-abs(y)",
                                               {{parse("x"), 1, Side::upper, HalfPlane::right},
                                                {parse("-x"), 1, Side::lower, HalfPlane::right}}));
    const NormalizedProblem r = reflect(n);
    CHECK(r.right.empty());
    CHECK_FALSE(r.left.empty());
}

TEST_CASE("membership") {
    const NormalizedProblem n = normalize(make("0", "2*x^2-abs(y)",
                                               {{parse("2*x^2"), 0.5, Side::upper, HalfPlane::right},
                                                {parse("-2*x^2"), 0.5, Side::lower, HalfPlane::right}}));
    CHECK(membership(n, 0.3, 0.0) == Membership::inside);
    CHECK(membership(n, 0.3, 0.18) == Membership::on_curve);
    CHECK(membership(n, 0.3, 0.2) == Membership::outside);
    CHECK(in_closure(n, 0.0, 0.0));
}

TEST_CASE("linspace") {
    const auto v = linspace(0.0, 0.3, 3);
    REQUIRE(v.size() == 4);
    CHECK(v.front() == 0.0);
    CHECK(v.back() == 0.3);
}

TEST_CASE("property: reflection is an involution") {
    gen::Rng r(11);
    for (int t = 0; t < 40; ++t) {
        const Expr f = gen::expr(r, 3);
        const Expr b = gen::convex_curve(r);
        BoundaryProblem p;
        p.rhs_right = p.rhs_left = f - Expr::constant(f.eval(0, 0).ok() ? f(0, 0) : 0.0);
        if (!p.rhs_right.eval(0, 0)) continue;
        p.region.g = Expr::variable(Var::y) - b;
        p.curves = {{b, 0.3, Side::upper, HalfPlane::right}};
        NormalizedProblem n;
        try {
            n = normalize(p);
        } catch (const Error&) {
            continue;
        }
        const NormalizedProblem rr = reflect(reflect(n));
        CHECK(rr.mirrored == n.mirrored);
        REQUIRE(rr.right.upper);
        for (int k = 0; k < 100; ++k) {
            const double x = r.uniform(-1, 1);
            const double y = r.uniform(-1, 1);
            const Evaluation a = n.f0_right.eval(x, y);
            const Evaluation c = rr.f0_right.eval(x, y);
            REQUIRE(a.ok() == c.ok());
            if (a) CHECK(c.value() == doctest::Approx(a.value()).epsilon(1e-14));
            CHECK(rr.region.g.eval(x, y).value() == n.region.g.eval(x, y).value());
            const double xs = std::fabs(x) * 0.3;
            CHECK(rr.right.upper->value(xs) == n.right.upper->value(xs));
        }
    }
}

TEST_CASE("property: normalize is idempotent on normalized problems") {
    gen::Rng r(12);
    int tried = 0;
    for (int t = 0; t < 60; ++t) {
        const Expr f = gen::expr(r, 3);
        const double x0 = r.uniform(-1, 1);
        const double y0 = r.uniform(-1, 1);
        BoundaryProblem p;
        p.rhs_right = p.rhs_left = f;
        p.region.g = Expr::constant(1.0);
        p.x0 = x0;
        p.y0 = y0;
        const Evaluation f00 = f.eval(x0, y0);
        if (!f00) continue;
        const NormalizedProblem n = normalize(p);
        BoundaryProblem again;
        again.rhs_right = n.f0_right;
        again.rhs_left = n.f0_left;
        again.region = n.region;
        const NormalizedProblem m = normalize(again);
        ++tried;
        for (int k = 0; k < 100; ++k) {
            const double x = r.uniform(-0.5, 0.5);
            const double y = r.uniform(-0.5, 0.5);
            const Evaluation a = n.f0_right.eval(x, y);
            const Evaluation b = m.f0_right.eval(x, y);
            REQUIRE(a.ok() == b.ok());
            if (a) CHECK(std::fabs(a.value() - b.value()) <= 1e-12);
            // f0(t, v) = f(t + x0, v + y0 + f(x0,y0) t) - f(x0,y0)
            const Evaluation orig = f.eval(x + x0, y + y0 + f00.value() * x);
            if (a && orig) CHECK(a.value() == doctest::Approx(orig.value() - f00.value()).epsilon(1e-12));
        }
    }
    CHECK(tried > 20);
}

TEST_CASE("property: a ray-type upper curve stays above tau x") {
    gen::Rng r(13);
    for (int t = 0; t < 50; ++t) {
        const double s = r.uniform(0.1, 2.0);
        const Expr b = Expr::constant(s) * Expr::variable(Var::x) + gen::convex_curve(r);
        const BoundaryCurve c = validate_curve(b, 0.4, Side::upper, HalfPlane::right);
        CHECK(c.tau == doctest::Approx(s / 2));
        for (double x : linspace(0.0, 0.4, 200)) CHECK(c.value(x) >= c.tau * x - 1e-15);
    }
}
