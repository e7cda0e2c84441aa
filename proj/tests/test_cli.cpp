#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bcauchy/commands.hpp"
#include "bcauchy/config.hpp"

using namespace bcauchy;

namespace {

const std::string data = BCAUCHY_DATA_DIR;

ProblemConfig from(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
}

std::string error_of(const std::string& text) {
    try {
        from(text);
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

std::string temp(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("bcauchy_test_" + name)).string();
}

}  // namespace

TEST_CASE("config files load") {
    const ProblemConfig c = load_config(data + "/example1.cfg");
    CHECK(c.problem.curves.size() == 4);
    CHECK(c.problem.rhs_right(1, 1) == doctest::Approx(2.0));
    CHECK(c.problem.region.g.str() == "2*x^2 - abs(y)");
    const NormalizedProblem n = normalize(c.problem);
    CHECK(n.right.upper);
    CHECK(n.right.lower);

    const ProblemConfig p = load_config(data + "/example2.cfg");
    CHECK(p.problem.rhs_left(-1, 4) == doctest::Approx(12.0));
    CHECK(p.problem.rhs_right(1, 2) == doctest::Approx(-6.0));

    const ProblemConfig o = from("[problem]\nrhs = y\nregion = 1\nx0 = 0.5\n[options]\nrank = 32\nsafety = 1\nlevels = 3\n");
    CHECK(o.problem.x0 == 0.5);
    CHECK(o.options.rank == 32);
    CHECK(o.options.peano.safety == 1.0);
    CHECK(o.levels == 3);
}

TEST_CASE("config diagnostics") {
    CHECK(error_of("[problem]\nregion = 1\n") == "missing key problem.rhs");
    CHECK(error_of("[problem]\nrhs = 0\n") == "missing key problem.region");
    CHECK(error_of("[problem]\nrhs = 0\nregion = y\n[right.upper]\ncurve = 0\nextent = -1\n") ==
          "line 6: extent must be positive");
    CHECK(error_of("[problem]\nrhs = 0\nregion = y\n[right.upper]\ncurve = 0\n") == "missing key right.upper.extent");
    CHECK(error_of("[problem]\nrhs = 0\nregion = y\nfoo = 1\n") == "line 4: unknown key problem.foo");
    CHECK(error_of("[nowhere]\n") == "line 1: unknown section [nowhere]");
    CHECK(error_of("rhs = 0\n") == "line 1: key outside of any section");
    CHECK(error_of("[problem]\nrhs 0\n") == "line 2: expected key = value");
    CHECK(error_of("[problem]\nrhs = 0\nrhs = 1\nregion = 1\n") == "line 3: duplicate key problem.rhs");
    CHECK(error_of("[problem]\nrhs = 0\nregion = 1\nx0 = abc\n") == "line 4: x0 is not a number: 'abc'");
    CHECK(error_of("[problem]\nrhs = 0\nregion = 1\n[options]\nrank = 1.5\n") == "line 5: rank must be a positive integer");
    CHECK(error_of("[problem]\n# comment\nrhs = sqrt(\nregion = 1\n").rfind("line 3: ", 0) == 0);
    CHECK(error_of("[problem]\nrhs = 0 # trailing comment\nregion = 1\n") == "");
}

TEST_CASE("exit codes") {
    std::ostringstream out, err;
    CHECK(cmd_classify(data + "/missing.cfg", out, err) == 1);
    CHECK(err.str().find("cannot open") != std::string::npos);

    const std::string bad = temp("bad.cfg");
    std::ofstream(bad) << "[problem]\nrhs = 0\nregion = y\n[right.upper]\ncurve = -x\nextent = 1\n";
    CHECK(cmd_verdict(bad, out, err) == 1);
    std::remove(bad.c_str());

    // inconclusive is not an error
    CHECK(cmd_verdict(data + "/example2.cfg", out, err) == 0);
    // no polygon to write
    CHECK(cmd_solve(data + "/example2.cfg", {}, out, err) == 2);
    CHECK(cmd_oracle("nope", out, err) == 1);
}

TEST_CASE("classify report") {
    std::ostringstream out, err;
    REQUIRE(cmd_classify(data + "/example2.cfg", out, err) == 0);
    const std::string s = out.str();
    CHECK(s.find("left: O1 (lower slope zero), tangency on lower curve FAIL at x = -") != std::string::npos);
    CHECK(s.find("right: U2 (upper slope zero)\n") != std::string::npos);
}

TEST_CASE("verdict report") {
    std::ostringstream out, err;
    REQUIRE(cmd_verdict(data + "/u2_positive.cfg", out, err) == 0);
    CHECK(out.str().find("combined: NoSolutionBothSides") != std::string::npos);
    std::ostringstream o2;
    REQUIRE(cmd_verdict(data + "/b1_synthetic.cfg", o2, err) == 0);
    CHECK(o2.str().find("right: Exists") != std::string::npos);
    CHECK(o2.str().find("combined: Exists") != std::string::npos);
}

TEST_CASE("solve writes CSV and SVG") {
    std::ostringstream out, err;
    SolveRequest req;
    req.rank = 1024;
    req.levels = 4;
    req.csv = temp("b1.csv");
    req.svg = temp("b1.svg");
    REQUIRE(cmd_solve(data + "/b1_synthetic.cfg", req, out, err) == 0);
    std::ifstream f(req.csv);
    std::string header, first;
    std::getline(f, header);
    std::getline(f, first);
    CHECK(header == "x,y");
    CHECK(first == "0,0");
    std::ifstream again(req.csv);
    CHECK(read_csv(again).size() >= 1025);
    CHECK(slurp(req.svg).find("<polyline") != std::string::npos);
    std::remove(req.csv.c_str());
    std::remove(req.svg.c_str());
}

TEST_CASE("CSV round trip is exact") {
    std::vector<Point> pts{{0, 0}, {0.1, 1.0 / 3.0}, {1e-300, -2.5e10}, {0.30000000000000004, -0.0}};
    std::stringstream s;
    write_csv(s, pts);
    const std::vector<Point> back = read_csv(s);
    REQUIRE(back.size() == pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(back[i].x == pts[i].x);
        CHECK(back[i].y == pts[i].y);
    }
    CHECK(s.str().find("-0") == std::string::npos);

    // and for a real polygon
    std::ostringstream out, err;
    SolveRequest req;
    req.rank = 100;
    req.levels = 1;
    req.csv = temp("smooth.csv");
    const std::string cfg = temp("smooth.cfg");
    std::ofstream(cfg) << "[problem]\nrhs = y/2+x/4\nregion = x-abs(y)\n[right.upper]\ncurve = x\nextent = 1\n"
                          "[right.lower]\ncurve = -x\nextent = 1\n";
    REQUIRE(cmd_solve(cfg, req, out, err) == 0);
    ProblemConfig pc = load_config(cfg);
    pc.options.rank = 100;
    const Verdict v = decide(pc.problem, pc.options);
    std::ifstream f(req.csv);
    const std::vector<Point> read = read_csv(f);
    const std::vector<Point> direct = to_original(normalize(load_config(cfg).problem), *v.right.polygon);
    REQUIRE(read.size() == direct.size());
    for (std::size_t i = 0; i < read.size(); ++i) {
        CHECK(read[i].x == direct[i].x);
        CHECK(read[i].y == direct[i].y);
    }
    std::remove(req.csv.c_str());
    std::remove(cfg.c_str());
}

TEST_CASE("solve is deterministic") {
    std::ostringstream out, err;
    SolveRequest req;
    req.rank = 256;
    req.levels = 3;
    req.csv = temp("det1.csv");
    REQUIRE(cmd_solve(data + "/b1_synthetic.cfg", req, out, err) == 0);
    const std::string a = slurp(req.csv);
    req.csv = temp("det2.csv");
    REQUIRE(cmd_solve(data + "/b1_synthetic.cfg", req, out, err) == 0);
    CHECK(a == slurp(req.csv));
    std::remove(temp("det1.csv").c_str());
    std::remove(temp("det2.csv").c_str());
}

TEST_CASE("oracle command") {
    std::ostringstream out, err;
    CHECK(cmd_oracle("ex3c", out, err) == 0);
    CHECK(out.str().find("FAIL") == std::string::npos);
    CHECK(out.str().find("PASS residual of y = 2*x^2") != std::string::npos);
}
