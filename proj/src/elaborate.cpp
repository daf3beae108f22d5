#include "qplane/elaborate.hpp"

#include <sstream>

namespace qplane {

PlaneElement elaborate(const Expr& ast, TruncationOrder cutoff) {
    switch (ast.kind) {
        case ExprKind::SymX:
            return PlaneElement::x().truncated(cutoff);
        case ExprKind::SymY:
            return PlaneElement::y().truncated(cutoff);
        case ExprKind::SymQ:
            return PlaneElement::constant(RatFun(LaurentPoly::q_power(1)));
        case ExprKind::SymQInv:
            return PlaneElement::constant(RatFun(LaurentPoly::q_power(-1)));
        case ExprKind::Literal:
            return PlaneElement::constant(RatFun(ast.literal));
        case ExprKind::Neg:
            return -elaborate(*ast.lhs, cutoff);
        case ExprKind::Add:
            return elaborate(*ast.lhs, cutoff) + elaborate(*ast.rhs, cutoff);
        case ExprKind::Sub:
            return elaborate(*ast.lhs, cutoff) - elaborate(*ast.rhs, cutoff);
        case ExprKind::Mul:
            return mul(elaborate(*ast.lhs, cutoff), elaborate(*ast.rhs, cutoff),
                       cutoff);
        case ExprKind::Pow:
            return pow(elaborate(*ast.lhs, cutoff),
                       static_cast<int>(ast.exponent), cutoff);
        case ExprKind::QExp: {
            PlaneElement arg = elaborate(*ast.lhs, cutoff);
            try {
                return q_exp(arg, cutoff);
            } catch (const std::domain_error& ex) {
                throw ElaborateError(ast.pos, ex.what());
            }
        }
    }
    throw std::logic_error("elaborate: unknown node kind");
}

std::string render_parseable(const PlaneElement& e) {
    if (e.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, c] : e.terms()) {
        if (!c.is_polynomial())
            throw std::domain_error(
                "render_parseable: coefficient " + c.to_string() +
                " has a non-unit denominator and cannot be written in the "
                "expression grammar");
        if (!first)
            out << " + ";
        first = false;
        bool has_vars = mono.xdeg > 0 || mono.ydeg > 0;
        bool unit = c.is_one();
        bool need_star = false;
        if (!unit || !has_vars) {
            bool multi_term = c.num().terms().size() > 1;
            if (multi_term)
                out << "(" << c.num().to_input_syntax() << ")";
            else
                out << c.num().to_input_syntax();
            need_star = true;
        }
        if (mono.xdeg > 0) {
            if (need_star)
                out << "*";
            out << "x";
            if (mono.xdeg > 1)
                out << "^" << mono.xdeg;
            need_star = true;
        }
        if (mono.ydeg > 0) {
            if (need_star)
                out << "*";
            out << "y";
            if (mono.ydeg > 1)
                out << "^" << mono.ydeg;
        }
    }
    return out.str();
}

}  // namespace qplane
