#include "bcauchy/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

namespace bcauchy {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v + 0.0);
    return buf;
}

std::string full(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v + 0.0);  // + 0.0 turns -0 into 0
    return buf;
}

int report(const Error& e, std::ostream& err) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return is_validation_error(e.code()) ? 1 : 2;
}

template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        return report(e, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

std::string tangency_line(const NormalizedProblem& p, HalfPlane hp, const CaseLabel& label, const Condition5Options& o) {
    const NormalizedProblem q = oriented(p, hp);
    const CurveSet cs = label_curves(q, label);
    std::string line;
    for (const auto* c : {&cs.upper, &cs.lower}) {
        if (!*c || !(*c)->tangent_to_axis()) continue;
        Condition5Result r = check_condition5(q, **c, o);
        line += ", tangency on " + std::string(to_string((*c)->side)) + " curve ";
        if (r.pass) {
            line += "PASS";
            continue;
        }
        const double s = hp == HalfPlane::left ? -1.0 : 1.0;
        line += "FAIL at x = " + num(s * r.witness_x) + " (field slope " + num(s * r.field_slope) +
                ", curve slope " + num(s * r.curve_slope) + ")";
    }
    return line;
}

void print_halfplane(std::ostream& out, const HalfPlaneVerdict& v) {
    out << to_string(v.halfplane) << ": " << to_string(v.outcome);
    if (v.outcome == Outcome::inconclusive) out << " (" << to_string(v.reason) << ")";
    out << "\n  " << v.detail << "\n";
    if (v.outcome == Outcome::exists && v.triangle && v.polygon) {
        out << "  h = " << num(v.triangle->h) << ", slope bound " << num(v.triangle->tau_bound) << ", "
            << v.polygon->vertices.size() << " vertices, " << v.polygon->boundary_contacts.size()
            << " boundary contacts\n";
    }
}

double sx(double x, double lo, double span) { return 10.0 + 480.0 * (x - lo) / span; }
double sy(double y, double lo, double span) { return 490.0 - 480.0 * (y - lo) / span; }

}  // namespace

int cmd_classify(const std::string& path, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const ProblemConfig cfg = load_config(path);
        const NormalizedProblem p = normalize(cfg.problem, cfg.options.validation);
        int status = 0;
        for (HalfPlane hp : {HalfPlane::left, HalfPlane::right}) {
            try {
                const CaseLabel label = classify(p, hp, cfg.options.classify);
                out << to_string(hp) << ": " << label.name();
                if (label.zero_curve_reassigned) out << " [zero curve taken on the region side]";
                if (label.index_one()) out << tangency_line(p, hp, label, cfg.options.condition5);
                out << "\n";
            } catch (const Error& e) {
                out << to_string(hp) << ": unclassified\n";
                status = std::max(status, report(e, err));
            }
        }
        return status;
    });
}

int cmd_verdict(const std::string& path, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const ProblemConfig cfg = load_config(path);
        const Verdict v = decide(cfg.problem, cfg.options);
        print_halfplane(out, v.left);
        print_halfplane(out, v.right);
        out << "combined: " << to_string(v.combined) << "\n";
        return 0;
    });
}

int cmd_solve(const std::string& path, const SolveRequest& req, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        ProblemConfig cfg = load_config(path);
        if (req.rank) cfg.options.rank = *req.rank;
        const int levels = req.levels.value_or(cfg.levels);
        if (cfg.options.rank < 1) throw Error(ErrorCode::InvalidArgument, "rank must be at least 1");
        if (levels < 1) throw Error(ErrorCode::InvalidArgument, "levels must be at least 1");

        const NormalizedProblem p = normalize(cfg.problem, cfg.options.validation);
        const HalfPlaneVerdict v = decide_halfplane(p, req.halfplane, cfg.options);
        if (v.outcome != Outcome::exists) {
            err << "no Euler construction in the " << to_string(req.halfplane) << " half-plane: " << v.detail << "\n";
            return 2;
        }
        const PeanoTriangle& tri = *v.triangle;
        EulerPolygon finest = *v.polygon;
        out << "case " << v.label->name() << ", h = " << num(tri.h) << "\n";
        if (levels >= 2) {
            const Refinement r = refine(p, tri, cfg.options.rank, levels, cfg.options.euler);
            for (std::size_t i = 0; i < r.levels.size(); ++i) {
                out << "rank " << r.levels[i].rank << ": residual " << num(residual(p, r.levels[i]));
                if (i > 0) out << ", gap to previous " << num(r.cauchy_gaps[i - 1]);
                out << "\n";
            }
            finest = r.levels.back();
        } else {
            out << "rank " << finest.rank << ": residual " << num(residual(p, finest)) << "\n";
        }

        const std::vector<Point> pts = to_original(p, finest);
        if (!req.csv.empty()) {
            std::ofstream f(req.csv, std::ios::binary);
            if (!f) throw Error(ErrorCode::IoError, "cannot write " + req.csv);
            write_csv(f, pts);
            out << "wrote " << pts.size() << " vertices to " << req.csv << "\n";
        }
        if (!req.svg.empty()) {
            std::ofstream f(req.svg, std::ios::binary);
            if (!f) throw Error(ErrorCode::IoError, "cannot write " + req.svg);
            write_svg(f, p, tri, pts);
            out << "wrote " << req.svg << "\n";
        }
        return 0;
    });
}

int cmd_oracle(const std::string& id, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        std::vector<OracleId> ids;
        if (id == "all") {
            ids = all_oracle_ids();
        } else if (const auto one = parse_oracle_id(id)) {
            ids.push_back(*one);
        } else {
            throw Error(ErrorCode::InvalidArgument, "unknown oracle case '" + id + "'");
        }
        bool ok = true;
        for (OracleId oid : ids) {
            const OracleCase& c = oracle_case(oid);
            out << to_string(oid) << ": " << c.title << " (ground truth " << to_string(c.truth) << ")\n";
            const auto checks = run_oracle_checks(oid);
            if (checks.empty()) out << "  no closed-form checks recorded\n";
            for (const OracleCheck& k : checks) {
                out << "  " << (k.pass ? "PASS " : "FAIL ") << k.name << ": " << num(k.value) << " <= "
                    << num(k.tolerance) << "\n";
                ok = ok && k.pass;
            }
            for (const std::string& u : c.unconfirmed_integrals) out << "  not checked: " << u << "\n";
        }
        return ok ? 0 : 2;
    });
}

void write_csv(std::ostream& os, const std::vector<Point>& vertices) {
    os << "x,y\n";
    for (const Point& v : vertices) os << full(v.x) << "," << full(v.y) << "\n";
}

std::vector<Point> read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "x,y") throw Error(ErrorCode::IoError, "CSV header 'x,y' expected");
    std::vector<Point> out;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw Error(ErrorCode::IoError, "malformed CSV row: " + line);
        out.push_back({std::strtod(line.c_str(), nullptr), std::strtod(line.c_str() + comma + 1, nullptr)});
    }
    return out;
}

void write_svg(std::ostream& os, const NormalizedProblem& p, const PeanoTriangle& tri, const std::vector<Point>& vertices) {
    const NormalizedProblem q = oriented(p, tri.halfplane);
    // triangle sides, right-facing, sampled and mapped back
    constexpr int n = 64;
    std::vector<Point> upper;
    std::vector<Point> lower;
    for (int i = 0; i <= n; ++i) {
        const double x = tri.h * i / n;
        upper.push_back(q.to_original({x, tri.upper_at(x)}));
        lower.push_back(q.to_original({x, tri.lower_at(x)}));
    }
    double xlo = INFINITY, xhi = -INFINITY, ylo = INFINITY, yhi = -INFINITY;
    for (const std::vector<Point>* set : {&std::as_const(upper), &std::as_const(lower), &vertices}) {
        for (const Point& pt : *set) {
            xlo = std::min(xlo, pt.x);
            xhi = std::max(xhi, pt.x);
            ylo = std::min(ylo, pt.y);
            yhi = std::max(yhi, pt.y);
        }
    }
    const double span = std::max({xhi - xlo, yhi - ylo, 1e-12});
    auto polyline = [&](const std::vector<Point>& pts, const char* colour, double width) {
        os << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"" << width << "\" points=\"";
        for (const Point& pt : pts) os << num(sx(pt.x, xlo, span)) << "," << num(sy(pt.y, ylo, span)) << " ";
        os << "\"/>\n";
    };
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 500 500\">\n";
    polyline(upper, "#888", 1.0);
    polyline(lower, "#888", 1.0);
    std::vector<Point> right_edge{upper.back(), lower.back()};
    polyline(right_edge, "#888", 1.0);
    polyline(vertices, "#c00", 1.5);
    os << "</svg>\n";
}

}  // namespace bcauchy
