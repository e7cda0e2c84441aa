#pragma once

// Problems shared by several test files, written out in full.

#include "bcauchy/domain.hpp"

namespace problems {

using namespace bcauchy;

inline CurveSpec curve(const char* b, Side s, HalfPlane hp, double extent = 0.5) {
    return CurveSpec{parse(b), extent, s, hp};
}

inline BoundaryProblem make(const char* rhs, const char* region, std::vector<CurveSpec> curves) {
    BoundaryProblem p;
    p.rhs_right = p.rhs_left = parse(rhs);
    p.region.g = parse(region);
    p.curves = std::move(curves);
    return p;
}

/// y' = 4 s sqrt(2x^2 - |y|) + 6x between +-2x^2, right half-plane only.
inline BoundaryProblem example1(double sigma) {
    return make(sigma > 0 ? "4*sqrt(2*x^2-abs(y))+6*x" : "-4*sqrt(2*x^2-abs(y))+6*x", "2*x^2-abs(y)",
                {curve("2*x^2", Side::upper, HalfPlane::right), curve("-2*x^2", Side::lower, HalfPlane::right),
                 curve("2*x^2", Side::upper, HalfPlane::left), curve("-2*x^2", Side::lower, HalfPlane::left)});
}

inline BoundaryProblem example2() {
    BoundaryProblem p = make("0", "y-((x+abs(x))/2)^2",
                             {curve("x^2", Side::upper, HalfPlane::right), curve("0", Side::lower, HalfPlane::left)});
    p.rhs_right = parse("-2*x*(2*sqrt(y-x^2)+1)");
    p.rhs_left = parse("-4*x*(sqrt(y)+1)");
    return p;
}

inline BoundaryProblem example3(const char* rhs) {
    return make(rhs, "y-2*x^2",
                {curve("2*x^2", Side::upper, HalfPlane::right), curve("2*x^2", Side::upper, HalfPlane::left)});
}

/// Sector |y| <= x with y' = f.
inline BoundaryProblem sector(const char* rhs) {
    return make(rhs, "x-abs(y)",
                {curve("x", Side::upper, HalfPlane::right, 1.0), curve("-x", Side::lower, HalfPlane::right, 1.0)});
}

/// {y >= x, x >= 0} with y' = sqrt(y - x).
inline BoundaryProblem u2_positive() {
    return make("sqrt(y-x)", "(y-abs(y-2*x))/2", {curve("x", Side::upper, HalfPlane::right, 1.0)});
}

}  // namespace problems
