#include "qplane/plane_element.hpp"

#include <algorithm>
#include <sstream>

#include "qplane/qcombinatorics.hpp"

namespace qplane {

PlaneElement PlaneElement::monomial(const RatFun& c, int xdeg, int ydeg) {
    if (xdeg < 0 || ydeg < 0)
        throw std::invalid_argument("PlaneElement::monomial: negative degree");
    PlaneElement e;
    if (!c.is_zero())
        e.terms_.emplace(PlaneMonomial{xdeg, ydeg}, c);
    return e;
}

int PlaneElement::max_xdeg() const {
    int m = -1;
    for (const auto& [mono, c] : terms_)
        m = std::max(m, mono.xdeg);
    return m;
}

int PlaneElement::max_ydeg() const {
    int m = -1;
    for (const auto& [mono, c] : terms_)
        m = std::max(m, mono.ydeg);
    return m;
}

RatFun PlaneElement::coeff(int xdeg, int ydeg) const {
    auto it = terms_.find(PlaneMonomial{xdeg, ydeg});
    return it == terms_.end() ? RatFun() : it->second;
}

void PlaneElement::add_to(PlaneMonomial mono, const RatFun& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

PlaneElement& PlaneElement::operator+=(const PlaneElement& o) {
    for (const auto& [mono, c] : o.terms_)
        add_to(mono, c);
    return *this;
}

PlaneElement& PlaneElement::operator-=(const PlaneElement& o) {
    for (const auto& [mono, c] : o.terms_)
        add_to(mono, -c);
    return *this;
}

PlaneElement& PlaneElement::operator*=(const RatFun& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, coeff] : terms_)
        coeff = coeff * c;
    return *this;
}

PlaneElement PlaneElement::operator-() const {
    PlaneElement r = *this;
    for (auto& [mono, c] : r.terms_)
        c = -c;
    return r;
}

PlaneElement operator*(const PlaneElement& a, const PlaneElement& b) {
    return mul(a, b);
}

PlaneElement PlaneElement::truncated(TruncationOrder cutoff) const {
    PlaneElement r;
    for (const auto& [mono, c] : terms_)
        if (mono.total() <= cutoff.value)
            r.terms_.emplace(mono, c);
    return r;
}

PlaneElement mul(const PlaneElement& a, const PlaneElement& b,
                 std::optional<TruncationOrder> cutoff) {
    PlaneElement r;
    for (const auto& [ma, ca] : a.terms()) {
        if (cutoff && ma.total() > cutoff->value)
            break;  // terms ordered by total degree; the rest only grow
        for (const auto& [mb, cb] : b.terms()) {
            PlaneMonomial mono{ma.xdeg + mb.xdeg, ma.ydeg + mb.ydeg};
            if (cutoff && mono.total() > cutoff->value)
                continue;
            // y^n1 x^m2 = q^(n1*m2) x^m2 y^n1
            long twist = static_cast<long>(ma.ydeg) * mb.xdeg;
            RatFun c = ca * cb;
            if (twist != 0)
                c = c * RatFun(LaurentPoly::q_power(twist));
            r.add_to(mono, c);
        }
    }
    return r;
}

PlaneElement pow(const PlaneElement& a, int k,
                 std::optional<TruncationOrder> cutoff) {
    if (k < 0)
        throw std::invalid_argument("pow: negative exponent for a plane element");
    PlaneElement r = PlaneElement::one();
    for (int i = 0; i < k; ++i)
        r = mul(r, a, cutoff);
    return r;
}

PlaneElement q_exp(const PlaneElement& arg, TruncationOrder cutoff) {
    if (!arg.constant_term().is_zero())
        throw std::domain_error(
            "q_exp: argument has a nonzero constant term; the truncated series "
            "is only defined for arguments of minimum degree >= 1");
    PlaneElement a = arg.truncated(cutoff);
    PlaneElement sum = PlaneElement::one();
    PlaneElement inc = PlaneElement::one();
    for (int k = 1; k <= cutoff.value; ++k) {
        inc = mul(inc, a, cutoff);
        inc *= RatFun(LaurentPoly::monomial(Rational(1), 0), q_integer(k));
        if (inc.is_zero())
            break;
        sum += inc;
    }
    return sum;
}

PlaneElement normal_order_word(std::string_view word) {
    long xdeg = 0, ydeg = 0, inversions = 0;
    for (char ch : word) {
        if (ch == 'x') {
            ++xdeg;
            inversions += ydeg;  // this x crosses every y already seen
        } else if (ch == 'y') {
            ++ydeg;
        } else {
            throw std::invalid_argument(
                std::string("normal_order_word: unexpected letter '") + ch + "'");
        }
    }
    return PlaneElement::monomial(RatFun(LaurentPoly::q_power(inversions)),
                                  static_cast<int>(xdeg), static_cast<int>(ydeg));
}

PlaneElement evaluate_coefficients(const PlaneElement& a, const Rational& q0) {
    PlaneElement r;
    for (const auto& [mono, c] : a.terms())
        r.add_to(mono, RatFun(c.eval(q0)));
    return r;
}

PlaneElement q_derivative_x(const PlaneElement& a) {
    PlaneElement r;
    for (const auto& [mono, c] : a.terms()) {
        if (mono.xdeg == 0)
            continue;
        RatFun factor(q_integer(mono.xdeg));
        r.add_to(PlaneMonomial{mono.xdeg - 1, mono.ydeg}, c * factor);
    }
    return r;
}

std::string PlaneElement::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        if (!first)
            out << " + ";
        first = false;
        bool has_vars = mono.xdeg > 0 || mono.ydeg > 0;
        bool unit = c.is_one();
        if (unit && !has_vars)
            out << "1";
        else if (!unit)
            out << c.to_string();
        bool need_star = !unit || !has_vars;
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
