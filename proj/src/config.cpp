#include "bcauchy/config.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>

namespace bcauchy {

namespace {

struct Entry {
    std::string value;
    int line = 0;
};

using Section = std::map<std::string, Entry>;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw Error(ErrorCode::ConfigError, "line " + std::to_string(line) + ": " + msg);
}

double number(const Entry& e, const std::string& key) {
    const char* s = e.value.c_str();
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(s, &end);
    if (end == s || *end != '\0' || errno == ERANGE) fail(e.line, key + " is not a number: '" + e.value + "'");
    return v;
}

int integer(const Entry& e, const std::string& key) {
    const double v = number(e, key);
    if (v != static_cast<int>(v) || v < 1) fail(e.line, key + " must be a positive integer");
    return static_cast<int>(v);
}

Expr expression(const Entry& e) {
    try {
        return parse(e.value);
    } catch (const ParseError& pe) {
        throw Error(pe.code(), "line " + std::to_string(e.line) + ": " + pe.what());
    }
}

class Sections {
public:
    explicit Sections(std::map<std::string, Section> s) : s_(std::move(s)) {}

    const Entry* find(const std::string& section, const std::string& key) const {
        const auto it = s_.find(section);
        if (it == s_.end()) return nullptr;
        const auto kt = it->second.find(key);
        return kt == it->second.end() ? nullptr : &kt->second;
    }
    const Entry& need(const std::string& section, const std::string& key) const {
        if (const Entry* e = find(section, key)) return *e;
        throw Error(ErrorCode::ConfigError, "missing key " + section + "." + key);
    }
    bool has(const std::string& section) const { return s_.count(section) != 0; }

private:
    std::map<std::string, Section> s_;
};

const std::map<std::string, std::vector<std::string>>& schema() {
    static const std::map<std::string, std::vector<std::string>> keys{
        {"problem", {"rhs", "rhs_left", "rhs_right", "region", "x0", "y0"}},
        {"right.upper", {"curve", "extent"}},
        {"right.lower", {"curve", "extent"}},
        {"left.upper", {"curve", "extent"}},
        {"left.lower", {"curve", "extent"}},
        {"options",
         {"rank", "levels", "cells", "sup_grid", "containment_grid", "safety", "delta_min", "condition5_points",
          "exit_tol", "neighborhood"}},
    };
    return keys;
}

}  // namespace

ProblemConfig parse_config(std::istream& in) {
    std::map<std::string, Section> raw;
    std::string current;
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail(n, "unterminated section header");
            current = trim(line.substr(1, line.size() - 2));
            if (!schema().count(current)) fail(n, "unknown section [" + current + "]");
            if (raw.count(current)) fail(n, "duplicate section [" + current + "]");
            raw[current];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(n, "expected key = value");
        if (current.empty()) fail(n, "key outside of any section");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto& allowed = schema().at(current);
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            fail(n, "unknown key " + current + "." + key);
        if (value.empty()) fail(n, current + "." + key + " has no value");
        if (raw[current].count(key)) fail(n, "duplicate key " + current + "." + key);
        raw[current][key] = Entry{value, n};
    }

    const Sections s(std::move(raw));
    ProblemConfig cfg;
    BoundaryProblem& p = cfg.problem;

    const Entry* rhs = s.find("problem", "rhs");
    const Entry* rl = s.find("problem", "rhs_left");
    const Entry* rr = s.find("problem", "rhs_right");
    if (!rhs && !(rl && rr)) s.need("problem", "rhs");
    if (rhs) p.rhs_right = p.rhs_left = expression(*rhs);
    if (rl) p.rhs_left = expression(*rl);
    if (rr) p.rhs_right = expression(*rr);
    p.region.g = expression(s.need("problem", "region"));
    if (const Entry* e = s.find("problem", "x0")) p.x0 = number(*e, "x0");
    if (const Entry* e = s.find("problem", "y0")) p.y0 = number(*e, "y0");

    for (HalfPlane hp : {HalfPlane::right, HalfPlane::left}) {
        for (Side side : {Side::upper, Side::lower}) {
            const std::string name = std::string(to_string(hp)) + "." + std::string(to_string(side));
            if (!s.has(name)) continue;
            CurveSpec c;
            c.b = expression(s.need(name, "curve"));
            const Entry& ext = s.need(name, "extent");
            c.extent = number(ext, "extent");
            if (!(c.extent > 0.0)) fail(ext.line, "extent must be positive");
            c.side = side;
            c.halfplane = hp;
            p.curves.push_back(std::move(c));
        }
    }

    SolverOptions& o = cfg.options;
    auto opt_int = [&](const char* key, int& dst) {
        if (const Entry* e = s.find("options", key)) dst = integer(*e, key);
    };
    auto opt_pos = [&](const char* key, double& dst) {
        if (const Entry* e = s.find("options", key)) {
            dst = number(*e, key);
            if (!(dst > 0.0)) fail(e->line, std::string(key) + " must be positive");
        }
    };
    opt_int("rank", o.rank);
    opt_int("levels", cfg.levels);
    opt_int("cells", o.classify.cells);
    opt_int("sup_grid", o.peano.sup_grid);
    opt_int("containment_grid", o.peano.containment_grid);
    opt_int("condition5_points", o.condition5.points);
    opt_pos("safety", o.peano.safety);
    opt_pos("delta_min", o.peano.delta_min);
    opt_pos("exit_tol", o.euler.exit_tol);
    opt_pos("neighborhood", o.classify.neighborhood);
    return cfg;
}

ProblemConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
    return parse_config(in);
}

}  // namespace bcauchy
