#include <doctest.h>

#include <cmath>

#include "bcauchy/classifier.hpp"
#include "generators.hpp"
#include "problems.hpp"

using namespace bcauchy;
using namespace problems;

TEST_CASE("restrict_to solves max{a, |b(a)|} = c") {
    const BoundaryCurve q = validate_curve(parse("2*x^2"), 0.5, Side::upper, HalfPlane::right);
    CHECK(restrict_to(q, 0.5).first == doctest::Approx(0.5).epsilon(1e-12));
    const BoundaryCurve z = validate_curve(parse("0"), 1.0, Side::upper, HalfPlane::right);
    CHECK(restrict_to(z, 0.3).first == doctest::Approx(0.3).epsilon(1e-12));
    const BoundaryCurve r = validate_curve(parse("x"), 1.0, Side::upper, HalfPlane::right);
    const auto [a, cut] = restrict_to(r, 0.4);
    CHECK(a == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(cut.extent == doctest::Approx(0.4).epsilon(1e-12));
    // steep curve: |b(a)| binds
    const BoundaryCurve s = validate_curve(parse("3*x"), 1.0, Side::upper, HalfPlane::right);
    CHECK(restrict_to(s, 0.6).first == doctest::Approx(0.2).epsilon(1e-12));

    CHECK_THROWS_AS(restrict_to(q, 0.6), Error);
    CHECK_THROWS_AS(restrict_to(q, 0.0), Error);
}

TEST_CASE("golden labels of the worked examples") {
    const NormalizedProblem e1 = normalize(example1(-1));
    const CaseLabel l1 = classify(e1, HalfPlane::right);
    CHECK(l1.family == Family::B1);
    CHECK(l1.upper_slope == UpperSlope::zero);
    CHECK(l1.lower_slope == LowerSlope::zero);
    CHECK(l1.c_witness == doctest::Approx(0.5));
    CHECK(l1.name() == "B1 (upper slope zero, lower slope zero)");

    const NormalizedProblem e2 = normalize(example2());
    const CaseLabel r2 = classify(e2, HalfPlane::right);
    CHECK(r2.family == Family::U2);
    CHECK(r2.upper_slope == UpperSlope::zero);
    const CaseLabel l2 = classify(e2, HalfPlane::left);
    CHECK(l2.family == Family::O1);
    CHECK(l2.lower_slope == LowerSlope::zero);
    CHECK(l2.halfplane == HalfPlane::left);

    for (const char* rhs : {"4*x*sqrt(y-2*x^2)", "6*sqrt(y-2*x^2)", "2*sqrt(y-2*x^2)+4*x"}) {
        const NormalizedProblem e3 = normalize(example3(rhs));
        for (HalfPlane hp : {HalfPlane::right, HalfPlane::left}) {
            const CaseLabel l = classify(e3, hp);
            CHECK(l.family == Family::U2);
            CHECK(l.upper_slope == UpperSlope::zero);
            CHECK(l.lower_slope == LowerSlope::absent);
        }
    }
}

TEST_CASE("synthetic families") {
    const CaseLabel b = classify(normalize(sector("y/2")), HalfPlane::right);
    CHECK(b.family == Family::B1);
    CHECK(b.upper_slope == UpperSlope::positive);
    CHECK(b.lower_slope == LowerSlope::negative);
    CHECK(classify(normalize(sector("y/2")), HalfPlane::left).family == Family::N2);

    const CaseLabel u = classify(normalize(u2_positive()), HalfPlane::right);
    CHECK(u.family == Family::U2);
    CHECK(u.upper_slope == UpperSlope::positive);

    CHECK(classify(normalize(make("0", "1", {})), HalfPlane::right).family == Family::N1);
    CHECK(classify(normalize(make("0", "x", {})), HalfPlane::right).family == Family::N1);
    CHECK(classify(normalize(make("0", "x", {})), HalfPlane::left).family == Family::N2);

    // G below a single upper curve
    const CaseLabel u1 = classify(normalize(make("0", "x^2-y", {curve("x^2", Side::upper, HalfPlane::right)})),
                                  HalfPlane::right);
    CHECK(u1.family == Family::U1);
    // G above a single lower curve
    const CaseLabel o1 = classify(normalize(make("0", "y+x^2", {curve("-x^2", Side::lower, HalfPlane::right)})),
                                  HalfPlane::right);
    CHECK(o1.family == Family::O1);
    // outside the sector between two curves
    const CaseLabel b2 = classify(normalize(make("0", "abs(y)-x", {curve("x", Side::upper, HalfPlane::right, 1.0),
                                                                    curve("-x", Side::lower, HalfPlane::right, 1.0)})),
                                  HalfPlane::right);
    CHECK(b2.family == Family::B2);
}

TEST_CASE("zero curve tie-break follows the side of the region") {
    // declared upper but G lies above: taken as the lower boundary
    const CaseLabel above = classify(normalize(make("0", "y", {curve("0", Side::upper, HalfPlane::right)})),
                                     HalfPlane::right);
    CHECK(above.family == Family::O1);
    CHECK(above.lower_slope == LowerSlope::zero);
    CHECK(above.zero_curve_reassigned);
    const CaseLabel below = classify(normalize(make("0", "-y", {curve("0", Side::upper, HalfPlane::right)})),
                                     HalfPlane::right);
    CHECK(below.family == Family::U1);
    CHECK_FALSE(below.zero_curve_reassigned);
}

TEST_CASE("ambiguous regions are reported") {
    // the region boundary y = 0 crosses the neighbourhood but no curve is declared there
    CHECK_THROWS_AS(classify(normalize(make("0", "y+1e-300", {})), HalfPlane::right), Error);
}

TEST_CASE("tangency condition on the worked examples") {
    const NormalizedProblem e1 = normalize(example1(-1));
    const CurveSet cs = label_curves(e1, classify(e1, HalfPlane::right));
    const Condition5Result up = check_condition5(e1, *cs.upper);
    CHECK_FALSE(up.pass);
    CHECK(up.witness_x > 0.0);
    CHECK(up.field_slope == doctest::Approx(6 * up.witness_x).epsilon(1e-12));
    CHECK(up.curve_slope == doctest::Approx(4 * up.witness_x).epsilon(1e-12));
    CHECK(check_condition5(e1, *cs.lower).pass);

    // left curve of the piecewise example, in the caller's coordinates
    const NormalizedProblem e2 = normalize(example2());
    const Condition5Result l = check_condition5(e2, *e2.left.lower);
    CHECK_FALSE(l.pass);
    CHECK(l.witness_x < 0.0);
    CHECK(l.field_slope == doctest::Approx(-4 * l.witness_x).epsilon(1e-12));
    CHECK(l.field_slope > 0.0);

    // 2x^2 used as a lower boundary for y' = 2 sqrt(y - 2x^2) + 4x: equality along the curve
    const NormalizedProblem e3 = normalize(example3("2*sqrt(y-2*x^2)+4*x"));
    BoundaryCurve low = *e3.right.upper;
    low.side = Side::lower;
    CHECK(check_condition5(e3, low).pass);

    const NormalizedProblem z = normalize(make("-y", "y", {curve("0", Side::lower, HalfPlane::right)}));
    CHECK(check_condition5(z, *z.right.lower).pass);

    CHECK_THROWS_AS(check_condition5(normalize(sector("y/2")), *normalize(sector("y/2")).right.upper), Error);
}

TEST_CASE("property: restrict_to is monotone in c") {
    gen::Rng r(21);
    for (int t = 0; t < 50; ++t) {
        const BoundaryCurve c = validate_curve(gen::convex_curve(r), 0.4, Side::upper, HalfPlane::right);
        double prev = 0.0;
        for (double cc : linspace(0.01, c.cstar, 40)) {
            const double a = restrict_to(c, cc).first;
            CHECK(a >= prev);
            CHECK(std::max(a, std::fabs(c.value(a))) <= cc + 1e-12);
            prev = a;
        }
    }
}

TEST_CASE("property: labels are stable under halving c") {
    gen::Rng r(22);
    for (int t = 0; t < 20; ++t) {
        const Expr bu = gen::convex_curve(r);
        const Expr bl = -gen::convex_curve(r);
        BoundaryProblem p;
        p.rhs_right = p.rhs_left = parse("0");
        p.region.g = (bu - Expr::variable(Var::y)) * (Expr::variable(Var::y) - bl);
        p.curves = {{bu, 0.3, Side::upper, HalfPlane::right}, {bl, 0.3, Side::lower, HalfPlane::right}};
        const NormalizedProblem n = normalize(p);
        const CaseLabel l = classify(n, HalfPlane::right);
        ClassifyOptions half;
        half.c = l.c_witness / 2;
        const CaseLabel h = classify(n, HalfPlane::right, half);
        CHECK(h.family == l.family);
        CHECK(h.upper_slope == l.upper_slope);
        CHECK(h.lower_slope == l.lower_slope);
        CHECK(l.family == Family::B1);

        // every point strictly between the restricted curves is in G
        const CurveSet cs = label_curves(n, l);
        const double a = std::min(cs.upper->extent, cs.lower->extent);
        for (double x : linspace(a / 64, a, 63))
            for (double s : linspace(0.01, 0.99, 20)) {
                const double y = cs.lower->value(x) + s * (cs.upper->value(x) - cs.lower->value(x));
                CHECK(n.region.g(x, y) > 0.0);
            }
    }
}
