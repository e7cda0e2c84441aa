#include "bcauchy/expr.hpp"

#include <cmath>
#include <cstdio>

namespace bcauchy {

struct Expr::Node {
    Kind kind = Kind::constant;
    double value = 0.0;
    Var var = Var::x;
    UnaryOp uop = UnaryOp::neg;
    BinaryOp bop = BinaryOp::add;
    std::shared_ptr<const Node> a;
    std::shared_ptr<const Node> b;
};

std::string_view to_string(FaultKind kind) {
    switch (kind) {
        case FaultKind::SqrtOfNegative: return "square root of a negative number";
        case FaultKind::DivisionByZero: return "division by zero";
        case FaultKind::LogOfNonPositive: return "logarithm of a non-positive number";
        case FaultKind::PowDomain: return "power outside its domain";
        case FaultKind::NonFinite: return "non-finite result";
    }
    return "fault";
}

std::string EvalFault::message() const {
    return std::string(to_string(kind)) + " in '" + where + "'";
}

double Evaluation::value() const {
    if (fault_) throw Error(ErrorCode::EvaluationFault, fault_->message());
    return value_;
}

Expr::Expr() {
    static const auto zero = std::make_shared<const Node>();
    node_ = zero;
}

Expr Expr::constant(double value) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::constant;
    n->value = value;
    return Expr(std::move(n));
}

Expr Expr::variable(Var v) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::variable;
    n->var = v;
    return Expr(std::move(n));
}

Expr Expr::unary(UnaryOp op, Expr arg) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::unary;
    n->uop = op;
    n->a = std::move(arg.node_);
    return Expr(std::move(n));
}

Expr Expr::binary(BinaryOp op, Expr lhs, Expr rhs) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::binary;
    n->bop = op;
    n->a = std::move(lhs.node_);
    n->b = std::move(rhs.node_);
    return Expr(std::move(n));
}

Expr::Kind Expr::kind() const { return node_->kind; }
double Expr::constant_value() const { return node_->value; }
Var Expr::variable_name() const { return node_->var; }
UnaryOp Expr::unary_op() const { return node_->uop; }
BinaryOp Expr::binary_op() const { return node_->bop; }
Expr Expr::lhs() const { return Expr(node_->a); }
Expr Expr::rhs() const { return Expr(node_->b); }

bool Expr::depends_on(Var v) const {
    switch (kind()) {
        case Kind::constant: return false;
        case Kind::variable: return variable_name() == v;
        case Kind::unary: return lhs().depends_on(v);
        case Kind::binary: return lhs().depends_on(v) || rhs().depends_on(v);
    }
    return false;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

struct Evaluator {
    double x;
    double y;
    std::optional<EvalFault> fault;

    double fail(FaultKind kind, const Expr& at) {
        if (!fault) fault = EvalFault{kind, at.str()};
        return 0.0;
    }

    double run(const Expr& e) {
        if (fault) return 0.0;
        switch (e.kind()) {
            case Expr::Kind::constant: return e.constant_value();
            case Expr::Kind::variable: return e.variable_name() == Var::x ? x : y;
            case Expr::Kind::unary: return run_unary(e);
            case Expr::Kind::binary: return run_binary(e);
        }
        return 0.0;
    }

    double finite(double r, const Expr& at) {
        if (fault) return 0.0;
        if (!std::isfinite(r)) return fail(FaultKind::NonFinite, at);
        return r;
    }

    double run_unary(const Expr& e) {
        const double u = run(e.lhs());
        if (fault) return 0.0;
        switch (e.unary_op()) {
            case UnaryOp::neg: return -u;
            case UnaryOp::sqrt:
                if (u < 0.0) return fail(FaultKind::SqrtOfNegative, e);
                return std::sqrt(u);
            case UnaryOp::abs: return std::fabs(u);
            case UnaryOp::exp: return finite(std::exp(u), e);
            case UnaryOp::ln:
                if (u <= 0.0) return fail(FaultKind::LogOfNonPositive, e);
                return std::log(u);
            case UnaryOp::sin: return std::sin(u);
            case UnaryOp::cos: return std::cos(u);
            case UnaryOp::sign: return u > 0.0 ? 1.0 : (u < 0.0 ? -1.0 : 0.0);
        }
        return 0.0;
    }

    double run_binary(const Expr& e) {
        const double a = run(e.lhs());
        const double b = run(e.rhs());
        if (fault) return 0.0;
        switch (e.binary_op()) {
            case BinaryOp::add: return finite(a + b, e);
            case BinaryOp::sub: return finite(a - b, e);
            case BinaryOp::mul: return finite(a * b, e);
            case BinaryOp::div:
                if (b == 0.0) return fail(FaultKind::DivisionByZero, e);
                return finite(a / b, e);
            case BinaryOp::pow:
                if (a == 0.0 && b < 0.0) return fail(FaultKind::DivisionByZero, e);
                // Negative bases only with integer exponents; odd roots are not special-cased.
                if (a < 0.0 && b != std::floor(b)) return fail(FaultKind::PowDomain, e);
                return finite(std::pow(a, b), e);
        }
        return 0.0;
    }
};

}  // namespace

Evaluation Expr::eval(double x, double y) const {
    Evaluator ev{x, y, std::nullopt};
    const double r = ev.run(*this);
    if (ev.fault) return Evaluation(std::move(*ev.fault));
    return Evaluation(r);
}

// ---------------------------------------------------------------------------
// Folding builders

namespace {

std::optional<double> fold_unary(UnaryOp op, double u) {
    Evaluation r = Expr::unary(op, Expr::constant(u)).eval(0.0, 0.0);
    if (!r) return std::nullopt;
    return r.value();
}

std::optional<double> fold_binary(BinaryOp op, double a, double b) {
    Evaluation r = Expr::binary(op, Expr::constant(a), Expr::constant(b)).eval(0.0, 0.0);
    if (!r) return std::nullopt;
    return r.value();
}

Expr fold_or_build(BinaryOp op, const Expr& a, const Expr& b) {
    if (a.is_constant() && b.is_constant()) {
        if (auto v = fold_binary(op, a.constant_value(), b.constant_value())) return Expr::constant(*v);
    }
    return Expr::binary(op, a, b);
}

}  // namespace

Expr operator+(const Expr& a, const Expr& b) {
    if (a.is_constant(0.0)) return b;
    if (b.is_constant(0.0)) return a;
    return fold_or_build(BinaryOp::add, a, b);
}

Expr operator-(const Expr& a, const Expr& b) {
    if (b.is_constant(0.0)) return a;
    if (a.is_constant(0.0)) return -b;
    return fold_or_build(BinaryOp::sub, a, b);
}

Expr operator*(const Expr& a, const Expr& b) {
    if (a.is_constant(0.0) || b.is_constant(0.0)) return Expr::constant(0.0);
    if (a.is_constant(1.0)) return b;
    if (b.is_constant(1.0)) return a;
    if (a.is_constant(-1.0)) return -b;
    if (b.is_constant(-1.0)) return -a;
    if (a.is_constant() && b.kind() == Expr::Kind::binary && b.binary_op() == BinaryOp::mul && b.lhs().is_constant())
        return Expr::constant(a.constant_value() * b.lhs().constant_value()) * b.rhs();
    return fold_or_build(BinaryOp::mul, a, b);
}

Expr operator/(const Expr& a, const Expr& b) {
    if (b.is_constant(1.0)) return a;
    if (a.is_constant(0.0) && !b.is_constant(0.0)) return Expr::constant(0.0);
    return fold_or_build(BinaryOp::div, a, b);
}

Expr operator-(const Expr& a) {
    if (a.is_constant()) return Expr::constant(-a.constant_value());
    if (a.kind() == Expr::Kind::unary && a.unary_op() == UnaryOp::neg) return a.lhs();
    return Expr::unary(UnaryOp::neg, a);
}

Expr pow(const Expr& base, double exponent) {
    if (exponent == 1.0) return base;
    if (exponent == 0.0) return Expr::constant(1.0);
    return fold_or_build(BinaryOp::pow, base, Expr::constant(exponent));
}

Expr apply(UnaryOp op, const Expr& arg) {
    if (op == UnaryOp::neg) return -arg;
    if (arg.is_constant()) {
        if (auto v = fold_unary(op, arg.constant_value())) return Expr::constant(*v);
    }
    return Expr::unary(op, arg);
}

// ---------------------------------------------------------------------------
// Printing

namespace {

constexpr int kPrecSum = 1;
constexpr int kPrecProduct = 2;
constexpr int kPrecNeg = 3;
constexpr int kPrecPow = 4;
constexpr int kPrecAtom = 5;

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string_view function_name(UnaryOp op) {
    switch (op) {
        case UnaryOp::neg: return "-";
        case UnaryOp::sqrt: return "sqrt";
        case UnaryOp::abs: return "abs";
        case UnaryOp::exp: return "exp";
        case UnaryOp::ln: return "ln";
        case UnaryOp::sin: return "sin";
        case UnaryOp::cos: return "cos";
        case UnaryOp::sign: return "sign";
    }
    return "?";
}

int precedence(const Expr& e) {
    switch (e.kind()) {
        case Expr::Kind::constant: return e.constant_value() < 0.0 ? kPrecNeg : kPrecAtom;
        case Expr::Kind::variable: return kPrecAtom;
        case Expr::Kind::unary: return e.unary_op() == UnaryOp::neg ? kPrecNeg : kPrecAtom;
        case Expr::Kind::binary:
            switch (e.binary_op()) {
                case BinaryOp::add:
                case BinaryOp::sub: return kPrecSum;
                case BinaryOp::mul:
                case BinaryOp::div: return kPrecProduct;
                case BinaryOp::pow: return kPrecPow;
            }
    }
    return kPrecAtom;
}

void print(const Expr& e, std::string& out);

void print_wrapped(const Expr& e, bool parens, std::string& out) {
    if (parens) out += '(';
    print(e, out);
    if (parens) out += ')';
}

void print(const Expr& e, std::string& out) {
    switch (e.kind()) {
        case Expr::Kind::constant: out += format_number(e.constant_value()); return;
        case Expr::Kind::variable: out += e.variable_name() == Var::x ? 'x' : 'y'; return;
        case Expr::Kind::unary:
            if (e.unary_op() == UnaryOp::neg) {
                out += '-';
                print_wrapped(e.lhs(), precedence(e.lhs()) < kPrecNeg, out);
            } else {
                out += function_name(e.unary_op());
                print_wrapped(e.lhs(), true, out);
            }
            return;
        case Expr::Kind::binary: {
            const int p = precedence(e);
            const Expr l = e.lhs();
            const Expr r = e.rhs();
            if (e.binary_op() == BinaryOp::pow) {
                print_wrapped(l, precedence(l) <= kPrecPow, out);
                out += '^';
                print_wrapped(r, precedence(r) < kPrecAtom, out);
                return;
            }
            print_wrapped(l, precedence(l) < p, out);
            switch (e.binary_op()) {
                case BinaryOp::add: out += " + "; break;
                case BinaryOp::sub: out += " - "; break;
                case BinaryOp::mul: out += '*'; break;
                case BinaryOp::div: out += '/'; break;
                case BinaryOp::pow: break;
            }
            // right operands of equal precedence keep their grouping so the tree round-trips exactly
            print_wrapped(r, precedence(r) <= p, out);
            return;
        }
    }
}

}  // namespace

std::string Expr::str() const {
    std::string out;
    print(*this, out);
    return out;
}

// ---------------------------------------------------------------------------
// Calculus and substitution

Expr differentiate(const Expr& e, Var var) {
    switch (e.kind()) {
        case Expr::Kind::constant: return Expr::constant(0.0);
        case Expr::Kind::variable: return Expr::constant(e.variable_name() == var ? 1.0 : 0.0);
        case Expr::Kind::unary: {
            const Expr u = e.lhs();
            const Expr du = differentiate(u, var);
            if (du.is_constant(0.0)) return Expr::constant(0.0);
            switch (e.unary_op()) {
                case UnaryOp::neg: return -du;
                case UnaryOp::sqrt: return du / (Expr::constant(2.0) * apply(UnaryOp::sqrt, u));
                // sign(0) = 0; only valid where u keeps a constant sign
                case UnaryOp::abs: return apply(UnaryOp::sign, u) * du;
                case UnaryOp::exp: return e * du;
                case UnaryOp::ln: return du / u;
                case UnaryOp::sin: return apply(UnaryOp::cos, u) * du;
                case UnaryOp::cos: return -(apply(UnaryOp::sin, u) * du);
                case UnaryOp::sign: return Expr::constant(0.0);
            }
            break;
        }
        case Expr::Kind::binary: {
            const Expr a = e.lhs();
            const Expr b = e.rhs();
            const Expr da = differentiate(a, var);
            switch (e.binary_op()) {
                case BinaryOp::add: return da + differentiate(b, var);
                case BinaryOp::sub: return da - differentiate(b, var);
                case BinaryOp::mul: return da * b + a * differentiate(b, var);
                case BinaryOp::div: {
                    const Expr db = differentiate(b, var);
                    if (db.is_constant(0.0)) return da / b;
                    return (da * b - a * db) / pow(b, 2.0);
                }
                case BinaryOp::pow: {
                    if (!b.is_constant())
                        throw Error(ErrorCode::NotDifferentiable, "non-constant exponent in '" + e.str() + "'");
                    const double c = b.constant_value();
                    return Expr::constant(c) * pow(a, c - 1.0) * da;
                }
            }
            break;
        }
    }
    throw Error(ErrorCode::NotDifferentiable, "cannot differentiate '" + e.str() + "'");
}

Expr substitute(const Expr& e, const Expr& x_by, const Expr& y_by) {
    switch (e.kind()) {
        case Expr::Kind::constant: return e;
        case Expr::Kind::variable: return e.variable_name() == Var::x ? x_by : y_by;
        case Expr::Kind::unary: return apply(e.unary_op(), substitute(e.lhs(), x_by, y_by));
        case Expr::Kind::binary: {
            const Expr a = substitute(e.lhs(), x_by, y_by);
            const Expr b = substitute(e.rhs(), x_by, y_by);
            switch (e.binary_op()) {
                case BinaryOp::add: return a + b;
                case BinaryOp::sub: return a - b;
                case BinaryOp::mul: return a * b;
                case BinaryOp::div: return a / b;
                case BinaryOp::pow: return pow(a, b.constant_value());
            }
        }
    }
    return e;
}

}  // namespace bcauchy
