#include "qplane/expr.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace qplane {

ExprPtr make_symbol(ExprKind kind, std::size_t pos) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->pos = pos;
    return e;
}

ExprPtr make_literal(Rational value, std::size_t pos) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Literal;
    e->pos = pos;
    e->literal = std::move(value);
    return e;
}

ExprPtr make_unary(ExprKind kind, ExprPtr child, std::size_t pos) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->pos = pos;
    e->lhs = std::move(child);
    return e;
}

ExprPtr make_binary(ExprKind kind, ExprPtr lhs, ExprPtr rhs, std::size_t pos) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->pos = pos;
    e->lhs = std::move(lhs);
    e->rhs = std::move(rhs);
    return e;
}

ExprPtr make_pow(ExprPtr base, long exponent, std::size_t pos) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Pow;
    e->pos = pos;
    e->lhs = std::move(base);
    e->exponent = exponent;
    return e;
}

ExprPtr make_qexp(ExprPtr child, std::size_t pos) {
    return make_unary(ExprKind::QExp, std::move(child), pos);
}

namespace {

enum class Tok {
    Plus, Minus, Star, Caret, Slash, LParen, RParen,
    Nat, SymX, SymY, SymQ, SymQInv, ExpQ, End,
};

struct Token {
    Tok kind;
    std::size_t pos;
    std::string text;  // digits for Nat
};

std::vector<Token> lex(const std::string& input) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < input.size()) {
        char c = input[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t pos = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < input.size() &&
                   std::isdigit(static_cast<unsigned char>(input[j])))
                ++j;
            tokens.push_back({Tok::Nat, pos, input.substr(i, j - i)});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < input.size() &&
                   (std::isalnum(static_cast<unsigned char>(input[j])) ||
                    input[j] == '_'))
                ++j;
            std::string word = input.substr(i, j - i);
            Tok kind;
            if (word == "x") kind = Tok::SymX;
            else if (word == "y") kind = Tok::SymY;
            else if (word == "q") kind = Tok::SymQ;
            else if (word == "qinv") kind = Tok::SymQInv;
            else if (word == "expq") kind = Tok::ExpQ;
            else
                throw ParseError(pos, "unknown symbol '" + word +
                                          "' (expected x, y, q, qinv, or expq)");
            tokens.push_back({kind, pos, std::move(word)});
            i = j;
            continue;
        }
        switch (c) {
            case '+': tokens.push_back({Tok::Plus, pos, "+"}); break;
            case '-': tokens.push_back({Tok::Minus, pos, "-"}); break;
            case '*': tokens.push_back({Tok::Star, pos, "*"}); break;
            case '^': tokens.push_back({Tok::Caret, pos, "^"}); break;
            case '/': tokens.push_back({Tok::Slash, pos, "/"}); break;
            case '(': tokens.push_back({Tok::LParen, pos, "("}); break;
            case ')': tokens.push_back({Tok::RParen, pos, ")"}); break;
            default:
                throw ParseError(pos, std::string("unexpected character '") + c + "'");
        }
        ++i;
    }
    tokens.push_back({Tok::End, input.size(), ""});
    return tokens;
}

class Parser {
public:
    explicit Parser(const std::string& input) : tokens_(lex(input)) {}

    ExprPtr run() {
        ExprPtr e = parse_expr();
        if (peek().kind != Tok::End)
            throw ParseError(peek().pos, "unexpected trailing input");
        return e;
    }

private:
    const Token& peek() const { return tokens_[index_]; }
    Token take() { return tokens_[index_++]; }
    bool accept(Tok kind) {
        if (peek().kind != kind)
            return false;
        ++index_;
        return true;
    }

    ExprPtr parse_expr() {
        ExprPtr left = parse_term();
        for (;;) {
            std::size_t pos = peek().pos;
            if (accept(Tok::Plus))
                left = make_binary(ExprKind::Add, left, parse_term(), pos);
            else if (accept(Tok::Minus))
                left = make_binary(ExprKind::Sub, left, parse_term(), pos);
            else
                return left;
        }
    }

    ExprPtr parse_term() {
        ExprPtr left = parse_unary();
        while (peek().kind == Tok::Star) {
            std::size_t pos = take().pos;
            left = make_binary(ExprKind::Mul, left, parse_unary(), pos);
        }
        return left;
    }

    ExprPtr parse_unary() {
        if (peek().kind == Tok::Minus) {
            std::size_t pos = take().pos;
            return make_unary(ExprKind::Neg, parse_unary(), pos);
        }
        return parse_factor();
    }

    ExprPtr parse_factor() {
        ExprPtr base = parse_base();
        if (peek().kind != Tok::Caret)
            return base;
        std::size_t caret_pos = take().pos;
        if (peek().kind != Tok::Nat)
            throw ParseError(peek().pos,
                             "exponent must be a bare nonnegative integer");
        Token nat = take();
        long exponent = parse_bounded_nat(nat, kMaxExponent, "exponent");
        ExprPtr powered = make_pow(std::move(base), exponent, caret_pos);
        if (peek().kind == Tok::Caret)
            throw ParseError(peek().pos,
                             "'^' is non-associative; parenthesize the base");
        return powered;
    }

    ExprPtr parse_base() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::SymX: return make_symbol(ExprKind::SymX, take().pos);
            case Tok::SymY: return make_symbol(ExprKind::SymY, take().pos);
            case Tok::SymQ: return make_symbol(ExprKind::SymQ, take().pos);
            case Tok::SymQInv: return make_symbol(ExprKind::SymQInv, take().pos);
            case Tok::Nat: return parse_rational();
            case Tok::LParen: {
                take();
                ExprPtr inner = parse_expr();
                if (!accept(Tok::RParen))
                    throw ParseError(peek().pos, "expected ')'");
                return inner;
            }
            case Tok::ExpQ: {
                std::size_t pos = take().pos;
                if (!accept(Tok::LParen))
                    throw ParseError(peek().pos, "expected '(' after expq");
                ExprPtr inner = parse_expr();
                if (!accept(Tok::RParen))
                    throw ParseError(peek().pos, "expected ')'");
                return make_qexp(std::move(inner), pos);
            }
            case Tok::End:
                throw ParseError(t.pos, "unexpected end of input");
            default:
                throw ParseError(t.pos, "expected x, y, q, qinv, a number, '(', or expq");
        }
    }

    ExprPtr parse_rational() {
        // Base 10 always: mpz_class's default base auto-detection would read
        // a leading 0 as octal.
        Token num = take();
        if (!accept(Tok::Slash))
            return make_literal(Rational(mpz_class(num.text, 10)), num.pos);
        if (peek().kind != Tok::Nat)
            throw ParseError(peek().pos, "expected denominator digits after '/'");
        Token den = take();
        mpz_class d(den.text, 10);
        if (d == 0)
            throw ParseError(den.pos, "zero denominator in rational literal");
        return make_literal(Rational(mpz_class(num.text, 10), d), num.pos);
    }

    long parse_bounded_nat(const Token& t, long bound, const char* what) {
        // Bound is small, so length alone rules out overflow.
        if (t.text.size() > 10)
            throw ParseError(t.pos, std::string(what) + " too large (max " +
                                        std::to_string(bound) + ")");
        long value = std::stol(t.text);
        if (value > bound)
            throw ParseError(t.pos, std::string(what) + " too large (max " +
                                        std::to_string(bound) + ")");
        return value;
    }

    std::vector<Token> tokens_;
    std::size_t index_ = 0;
};

}  // namespace

ExprPtr parse(const std::string& input) {
    return Parser(input).run();
}

bool expr_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind)
        return false;
    switch (a.kind) {
        case ExprKind::SymX:
        case ExprKind::SymY:
        case ExprKind::SymQ:
        case ExprKind::SymQInv:
            return true;
        case ExprKind::Literal:
            return a.literal == b.literal;
        case ExprKind::Neg:
        case ExprKind::QExp:
            return expr_equal(*a.lhs, *b.lhs);
        case ExprKind::Add:
        case ExprKind::Sub:
        case ExprKind::Mul:
            return expr_equal(*a.lhs, *b.lhs) && expr_equal(*a.rhs, *b.rhs);
        case ExprKind::Pow:
            return a.exponent == b.exponent && expr_equal(*a.lhs, *b.lhs);
    }
    return false;
}

namespace {

// Binding strength used for minimal parenthesization: additive 1,
// multiplicative 2, unary minus 3, power 4, atoms 5.
int expr_level(const Expr& e) {
    switch (e.kind) {
        case ExprKind::Add:
        case ExprKind::Sub:
            return 1;
        case ExprKind::Mul:
            return 2;
        case ExprKind::Neg:
            return 3;
        case ExprKind::Pow:
            return 4;
        default:
            return 5;
    }
}

void render_into(const Expr& e, int min_level, std::ostream& out) {
    int level = expr_level(e);
    bool wrap = level < min_level;
    if (wrap)
        out << "(";
    switch (e.kind) {
        case ExprKind::SymX: out << "x"; break;
        case ExprKind::SymY: out << "y"; break;
        case ExprKind::SymQ: out << "q"; break;
        case ExprKind::SymQInv: out << "qinv"; break;
        case ExprKind::Literal: out << e.literal.to_string(); break;
        case ExprKind::Neg:
            out << "-";
            render_into(*e.lhs, 3, out);
            break;
        case ExprKind::Add:
        case ExprKind::Sub:
            render_into(*e.lhs, 1, out);
            out << (e.kind == ExprKind::Add ? " + " : " - ");
            render_into(*e.rhs, 2, out);
            break;
        case ExprKind::Mul:
            render_into(*e.lhs, 2, out);
            out << "*";
            render_into(*e.rhs, 3, out);
            break;
        case ExprKind::Pow:
            render_into(*e.lhs, 5, out);
            out << "^" << e.exponent;
            break;
        case ExprKind::QExp:
            out << "expq(";
            render_into(*e.lhs, 1, out);
            out << ")";
            break;
    }
    if (wrap)
        out << ")";
}

}  // namespace

std::string render_expr(const Expr& e) {
    std::ostringstream out;
    render_into(e, 1, out);
    return out.str();
}

}  // namespace qplane
