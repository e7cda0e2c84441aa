#pragma once

// Closed-form knowledge about the three worked examples:
//
//   ex1p, ex1m  y' = 4*s*sqrt(2x^2 - |y|) + 6x, s = +1 / -1, on |y| <= 2x^2, x >= 0
//   ex2         y' = -4x(sqrt(y) + 1) for x <= 0, -2x(2 sqrt(y - x^2) + 1) for x >= 0
//   ex3a..c     y' = 4x u, 6u, 2u + 4x with u = sqrt(y - 2x^2), on y >= 2x^2
//
// Known solutions, first integrals and the existence facts are recorded
// here so the classifier, the verdict and the Euler builder can be
// cross-checked against them.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bcauchy/domain.hpp"

namespace bcauchy {

enum class OracleId { ex1p, ex1m, ex2, ex3a, ex3b, ex3c };

enum class GroundTruth { exists, not_exists, continuum };

std::string_view to_string(OracleId id);
std::string_view to_string(GroundTruth g);
std::optional<OracleId> parse_oracle_id(std::string_view text);
const std::vector<OracleId>& all_oracle_ids();

struct KnownSolution {
    Expr phi;
    double lo = 0.0;
    double hi = 0.0;
    std::string note;
};

struct FirstIntegral {
    Expr F;
    std::string validity;
    /// False for integrals whose printed form could not be confirmed; those
    /// are kept for reference and never used as ground truth.
    bool confirmed = true;
};

struct OracleCase {
    OracleId id = OracleId::ex1p;
    std::string title;
    BoundaryProblem problem;
    std::vector<KnownSolution> known_solutions;
    std::vector<FirstIntegral> first_integrals;
    /// Printed integrals that are recorded as text only.
    std::vector<std::string> unconfirmed_integrals;
    GroundTruth truth = GroundTruth::exists;
    std::optional<double> zeta1;
    std::optional<double> zeta2;
};

const OracleCase& oracle_case(OracleId id);

inline GroundTruth ground_truth(OracleId id) { return oracle_case(id).truth; }

/// max |phi'(x) - f(x, phi(x))| over n samples of (lo, hi) (midpoints of n equal cells).
double solution_residual(const OracleCase& c, const Expr& phi, double lo, double hi, int n = 100);

/// max |F_x + F_y f| / (1 + |grad F|) over the points; symbolic gradient,
/// central differences (h = 1e-6) where the symbolic one faults.
double first_integral_invariance(const OracleCase& c, const Expr& F, std::span<const Point> points);

/// Deterministic interior points of the open region where the case's first
/// integrals are smooth.
std::vector<Point> integral_sample_points(OracleId id, int n);

/// Member of the ex3c branch family: 3(x - C/3)^2 + 2C^2/3, valid for x >= C.
Expr ex3c_branch(double C);

struct OracleCheck {
    std::string name;
    bool pass = false;
    double value = 0.0;
    double tolerance = 0.0;
};

/// Residual, first-integral and branch-touching checks for one case.
std::vector<OracleCheck> run_oracle_checks(OracleId id);

}  // namespace bcauchy
