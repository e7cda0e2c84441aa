#include <cctype>
#include <cstdlib>
#include <string>

#include "bcauchy/expr.hpp"

namespace bcauchy {

namespace {

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    Expr run() {
        skip_space();
        if (pos_ >= src_.size()) fail("empty expression");
        Expr e = sum();
        skip_space();
        if (pos_ < src_.size()) fail(std::string("unexpected '") + src_[pos_] + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what, ErrorCode code = ErrorCode::SyntaxError) const {
        throw ParseError(code, pos_, what);
    }

    [[noreturn]] void fail_at(std::size_t at, const std::string& what, ErrorCode code) const {
        throw ParseError(code, at, what);
    }

    void skip_space() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            if (pos_ >= src_.size()) fail(std::string("expected '") + c + "' but input ended");
            fail(std::string("expected '") + c + "'");
        }
    }

    Expr sum() {
        Expr e = product();
        for (;;) {
            if (accept('+')) e = e + product();
            else if (accept('-')) e = e - product();
            else return e;
        }
    }

    Expr product() {
        Expr e = unary();
        for (;;) {
            if (accept('*')) e = e * unary();
            else if (accept('/')) e = e / unary();
            else return e;
        }
    }

    Expr unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Expr power() {
        Expr base = primary();
        skip_space();
        const std::size_t at = pos_;
        if (accept('^')) {
            Expr exponent = unary();
            if (!exponent.is_constant()) fail_at(at, "exponent must be a constant", ErrorCode::SyntaxError);
            return pow(base, exponent.constant_value());
        }
        return base;
    }

    Expr primary() {
        skip_space();
        if (pos_ >= src_.size()) fail("unexpected end of input");
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        if (accept('(')) {
            Expr e = sum();
            expect(')');
            return e;
        }
        fail(std::string("unexpected '") + c + "'");
    }

    Expr number() {
        const std::string rest(src_.substr(pos_));
        char* end = nullptr;
        const double v = std::strtod(rest.c_str(), &end);
        if (end == rest.c_str()) fail("malformed number");
        pos_ += static_cast<std::size_t>(end - rest.c_str());
        return Expr::constant(v);
    }

    Expr identifier() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        const std::string_view name = src_.substr(start, pos_ - start);
        if (name == "x") return Expr::variable(Var::x);
        if (name == "y") return Expr::variable(Var::y);

        UnaryOp op;
        if (name == "sqrt") op = UnaryOp::sqrt;
        else if (name == "abs") op = UnaryOp::abs;
        else if (name == "exp") op = UnaryOp::exp;
        else if (name == "ln") op = UnaryOp::ln;
        else if (name == "sin") op = UnaryOp::sin;
        else if (name == "cos") op = UnaryOp::cos;
        else if (name == "sign") op = UnaryOp::sign;
        else fail_at(start, "unknown identifier '" + std::string(name) + "'", ErrorCode::UnknownIdentifier);

        expect('(');
        Expr arg = sum();
        expect(')');
        return apply(op, arg);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view source) { return Parser(source).run(); }

}  // namespace bcauchy
