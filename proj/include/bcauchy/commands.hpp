#pragma once

// The command-line front end as plain functions: each reads its inputs,
// writes a report to `out`, diagnostics to `err`, and returns the exit status
// (0 success or inconclusive, 1 invalid input, 2 construction/runtime failure).

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bcauchy/config.hpp"
#include "bcauchy/oracle.hpp"

namespace bcauchy {

int cmd_classify(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_verdict(const std::string& path, std::ostream& out, std::ostream& err);

struct SolveRequest {
    std::optional<int> rank;
    std::optional<int> levels;
    std::string csv;
    std::string svg;
    HalfPlane halfplane = HalfPlane::right;
};

int cmd_solve(const std::string& path, const SolveRequest& req, std::ostream& out, std::ostream& err);

/// `id` is a case name or "all".
int cmd_oracle(const std::string& id, std::ostream& out, std::ostream& err);

/// "x,y" header, then one vertex per line with 17 significant digits.
void write_csv(std::ostream& os, const std::vector<Point>& vertices);
std::vector<Point> read_csv(std::istream& is);

/// Polyline of the vertices with the triangle sides, y axis pointing up.
void write_svg(std::ostream& os, const NormalizedProblem& p, const PeanoTriangle& tri, const std::vector<Point>& vertices);

}  // namespace bcauchy
