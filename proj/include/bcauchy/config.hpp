#pragma once

// Problem files: line-oriented `key = value` under `[section]` headers,
// `#` starts a comment.
//
//   [problem]      rhs, rhs_left, rhs_right, region, x0, y0
//   [right.upper]  curve, extent      (also right.lower, left.upper, left.lower)
//   [options]      rank, levels, cells, sup_grid, containment_grid, safety,
//                  delta_min, condition5_points, exit_tol, neighborhood
//
// rhs_left / rhs_right override rhs for a piecewise equation; at least one
// of rhs or both pieces must be present.

#include <istream>
#include <string>

#include "bcauchy/verdict.hpp"

namespace bcauchy {

struct ProblemConfig {
    BoundaryProblem problem;
    SolverOptions options;
    int levels = 4;
};

/// Throws Error(ConfigError) with "line N: ..." or "missing key section.key";
/// expression errors keep their parse code and gain the line number.
ProblemConfig parse_config(std::istream& in);
ProblemConfig load_config(const std::string& path);

}  // namespace bcauchy
