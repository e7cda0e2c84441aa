#include <iostream>

#include <CLI11.hpp>

#include "bcauchy/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Boundary Cauchy problems: case classification, existence verdicts and Euler polygons"};
    app.require_subcommand(1);

    std::string path;
    auto* classify = app.add_subcommand("classify", "print the case label of each half-plane");
    classify->add_option("config", path, "problem file")->required();

    auto* verdict = app.add_subcommand("verdict", "decide existence in each half-plane");
    verdict->add_option("config", path, "problem file")->required();

    bcauchy::SolveRequest req;
    int rank = 0;
    int levels = 0;
    std::string side = "right";
    auto* solve = app.add_subcommand("solve", "build and refine the Euler polygon");
    solve->add_option("config", path, "problem file")->required();
    solve->add_option("--rank", rank, "base number of steps")->check(CLI::PositiveNumber);
    solve->add_option("--levels", levels, "refinement levels (rank doubles per level)")->check(CLI::PositiveNumber);
    solve->add_option("--csv", req.csv, "write the finest polygon as CSV");
    solve->add_option("--svg", req.svg, "write a plot of the polygon and the triangle");
    solve->add_option("--halfplane", side, "right or left")->check(CLI::IsMember({"right", "left"}));

    std::string id;
    auto* oracle = app.add_subcommand("oracle", "run the closed-form checks of a worked example");
    oracle->add_option("case", id, "ex1p, ex1m, ex2, ex3a, ex3b, ex3c or all")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    if (*classify) return bcauchy::cmd_classify(path, std::cout, std::cerr);
    if (*verdict) return bcauchy::cmd_verdict(path, std::cout, std::cerr);
    if (*solve) {
        if (rank > 0) req.rank = rank;
        if (levels > 0) req.levels = levels;
        req.halfplane = side == "left" ? bcauchy::HalfPlane::left : bcauchy::HalfPlane::right;
        return bcauchy::cmd_solve(path, req, std::cout, std::cerr);
    }
    return bcauchy::cmd_oracle(id, std::cout, std::cerr);
}
