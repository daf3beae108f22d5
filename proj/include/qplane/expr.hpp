#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "qplane/rational.hpp"

namespace qplane {

// Surface-syntax AST for quantum-plane expressions. Grammar (whitespace
// ignored; multiplication always explicit; `^` binds tighter than unary
// minus, which binds tighter than `*`, which binds tighter than `+`/`-`;
// `*`, `+`, `-` left-associative; `^` non-associative):
//
//   expr    := term (("+"|"-") term)*
//   term    := unary ("*" unary)*
//   unary   := "-" unary | factor
//   factor  := base ("^" nat)?
//   base    := "x" | "y" | "q" | "qinv" | rational | "(" expr ")"
//            | "expq" "(" expr ")"
//   rational:= nat ("/" nat)?
//   nat     := digit+
enum class ExprKind {
    SymX,
    SymY,
    SymQ,
    SymQInv,
    Literal,  // nonnegative rational scalar
    Neg,
    Add,
    Sub,
    Mul,
    Pow,   // child ^ nonnegative integer
    QExp,  // expq(child)
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    ExprKind kind;
    std::size_t pos = 0;  // byte offset of the node's first token
    Rational literal;     // Literal only
    long exponent = 0;    // Pow only
    ExprPtr lhs;          // unary child / left operand
    ExprPtr rhs;          // right operand of Add/Sub/Mul
};

ExprPtr make_symbol(ExprKind kind, std::size_t pos);
ExprPtr make_literal(Rational value, std::size_t pos);
ExprPtr make_unary(ExprKind kind, ExprPtr child, std::size_t pos);
ExprPtr make_binary(ExprKind kind, ExprPtr lhs, ExprPtr rhs, std::size_t pos);
ExprPtr make_pow(ExprPtr base, long exponent, std::size_t pos);
ExprPtr make_qexp(ExprPtr child, std::size_t pos);

// Positioned syntax diagnostic; position is a 0-based byte offset into the
// input text. what() carries the fully formatted message.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t pos, const std::string& message)
        : std::runtime_error("parse error at position " + std::to_string(pos) +
                             ": " + message),
          pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// Largest accepted `^` exponent; bigger literals get a positioned error.
inline constexpr long kMaxExponent = 1024;

// Total over the grammar: every rejection is a ParseError, never a crash.
ExprPtr parse(const std::string& input);

// Structural equality; source positions are ignored.
bool expr_equal(const Expr& a, const Expr& b);

// Renders with minimal parentheses such that parse(render_expr(e)) is
// structurally equal to e for any tree parse can produce.
std::string render_expr(const Expr& e);

}  // namespace qplane
