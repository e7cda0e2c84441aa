#pragma once

// Scalar expressions over the two plane coordinates x and y.
//
// Grammar (whitespace ignored):
//   sum     := product (('+' | '-') product)*
//   product := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' unary)?          exponent must fold to a constant
//   primary := number | 'x' | 'y' | func '(' sum ')' | '(' sum ')'
//   func    := sqrt | abs | exp | ln | sin | cos | sign
//
// so '^' binds tighter than unary minus, which binds tighter than '*' and '/'.
// `sign` is not needed by user input; it appears in derivatives of abs and is
// accepted by the parser so that printed derivatives parse back.

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "bcauchy/error.hpp"

namespace bcauchy {

enum class Var { x, y };

enum class UnaryOp { neg, sqrt, abs, exp, ln, sin, cos, sign };

enum class BinaryOp { add, sub, mul, div, pow };

enum class FaultKind {
    SqrtOfNegative,
    DivisionByZero,
    LogOfNonPositive,
    PowDomain,
    NonFinite,
};

std::string_view to_string(FaultKind kind);

class Expr;

/// Why an evaluation failed and the sub-expression that failed.
struct EvalFault {
    FaultKind kind;
    std::string where;

    std::string message() const;
};

/// Outcome of evaluating an expression at a point: a finite value or a fault.
class Evaluation {
public:
    Evaluation(double value) : value_(value) {}
    Evaluation(EvalFault fault) : fault_(std::move(fault)) {}

    bool ok() const noexcept { return !fault_.has_value(); }
    explicit operator bool() const noexcept { return ok(); }

    /// Throws Error(EvaluationFault) if the evaluation faulted.
    double value() const;
    const EvalFault& fault() const { return *fault_; }

private:
    double value_ = 0.0;
    std::optional<EvalFault> fault_;
};

/// Immutable expression tree with shared structure. Copies are cheap.
class Expr {
public:
    enum class Kind { constant, variable, unary, binary };

    /// The constant 0.
    Expr();

    static Expr constant(double value);
    static Expr variable(Var v);
    static Expr unary(UnaryOp op, Expr arg);
    static Expr binary(BinaryOp op, Expr lhs, Expr rhs);

    Kind kind() const;
    bool is_constant() const { return kind() == Kind::constant; }
    bool is_constant(double value) const { return is_constant() && constant_value() == value; }
    double constant_value() const;
    Var variable_name() const;
    UnaryOp unary_op() const;
    BinaryOp binary_op() const;
    /// Operand of a unary node or left operand of a binary node.
    Expr lhs() const;
    Expr rhs() const;

    bool depends_on(Var v) const;

    Evaluation eval(double x, double y) const;

    /// Evaluation that throws Error(EvaluationFault) on a domain fault.
    double operator()(double x, double y) const { return eval(x, y).value(); }

    /// Infix text that parses back to an expression with identical evaluation.
    std::string str() const;

private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

// Builders with constant folding. These are what parse() and differentiate() use.
Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr pow(const Expr& base, double exponent);
Expr apply(UnaryOp op, const Expr& arg);

Expr parse(std::string_view source);

Expr differentiate(const Expr& e, Var var);

/// Replaces every x by `x_by` and every y by `y_by`.
Expr substitute(const Expr& e, const Expr& x_by, const Expr& y_by);

}  // namespace bcauchy
