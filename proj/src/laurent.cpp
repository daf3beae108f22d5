#include "qplane/laurent.hpp"

#include <sstream>
#include <vector>

namespace qplane {

void LaurentPoly::add_to(long exponent, const Rational& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_)
        add_to(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_)
        add_to(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_to(ea + eb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e + k, c);
    return r;
}

Rational LaurentPoly::eval(const Rational& q0) const {
    if (is_zero())
        return Rational(0);
    if (q0.is_zero() && min_exponent() < 0)
        throw std::domain_error("LaurentPoly: pole at q = 0");
    // Horner over the exponent range, walking from the highest exponent down.
    Rational acc(0);
    long prev = max_exponent();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        acc *= q0.pow(prev - it->first);
        acc += it->second;
        prev = it->first;
    }
    return acc * q0.pow(prev);
}

LaurentPoly pow(const LaurentPoly& p, unsigned long e) {
    LaurentPoly r(1);
    LaurentPoly base = p;
    while (e > 0) {
        if (e & 1)
            r *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return r;
}

namespace {

std::string q_power_text(long e, bool input_syntax) {
    if (e == 1)
        return "q";
    if (e > 1)
        return "q^" + std::to_string(e);
    if (!input_syntax)
        return "q^" + std::to_string(e);
    return e == -1 ? "qinv" : "qinv^" + std::to_string(-e);
}

std::string render_terms(const LaurentPoly& p, bool input_syntax) {
    if (p.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a.sign() < 0 ? " - " : " + ");
            a = a.abs();
        }
        if (e == 0)
            out << a.to_string();
        else if (a.is_one())
            out << q_power_text(e, input_syntax);
        else
            out << a.to_string() << "*" << q_power_text(e, input_syntax);
        first = false;
    }
    return out.str();
}

}  // namespace

std::string LaurentPoly::to_string() const { return render_terms(*this, false); }

std::string LaurentPoly::to_input_syntax() const { return render_terms(*this, true); }

// ---- gcd / exact division ----------------------------------------------
//
// The ordinary-polynomial part of each operand (lowest exponent shifted to 0)
// is lifted to a primitive integer polynomial; the gcd runs as a primitive
// pseudo-remainder sequence over Z, which bounds intermediate coefficient
// growth. The result is returned monic over Q.

namespace {

using ZVec = std::vector<mpz_class>;  // dense, coefficient of q^i at index i

void z_trim(ZVec& v) {
    while (!v.empty() && sgn(v.back()) == 0)
        v.pop_back();
}

// Divide by the content and make the leading coefficient positive.
void z_make_primitive(ZVec& v) {
    if (v.empty())
        return;
    mpz_class g = 0;
    for (const auto& c : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            break;
    }
    if (sgn(v.back()) < 0)
        g = -g;
    if (g == 1)
        return;
    for (auto& c : v)
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder: repeatedly a <- lc(b)*a - lc(a)*q^(deg a - deg b)*b.
ZVec z_prem(ZVec a, const ZVec& b) {
    const mpz_class& lb = b.back();
    while (a.size() >= b.size()) {
        const mpz_class la = a.back();
        const size_t shift = a.size() - b.size();
        for (auto& c : a)
            c *= lb;
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= la * b[i];
        z_trim(a);
        if (a.empty())
            break;
    }
    return a;
}

ZVec z_gcd(ZVec a, ZVec b) {
    z_trim(a);
    z_trim(b);
    z_make_primitive(a);
    z_make_primitive(b);
    if (a.empty())
        return b;
    if (b.empty())
        return a;
    if (a.size() < b.size())
        std::swap(a, b);
    while (!b.empty()) {
        ZVec r = z_prem(a, b);
        z_make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Primitive integer image of the ordinary part of p (p shifted so its lowest
// exponent is 0). p must be nonzero.
ZVec to_primitive(const LaurentPoly& p) {
    mpz_class lcm_den = 1;
    for (const auto& [e, c] : p.terms())
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
    const long shift = p.min_exponent();
    ZVec v(static_cast<size_t>(p.max_exponent() - shift + 1), mpz_class(0));
    for (const auto& [e, c] : p.terms())
        v[static_cast<size_t>(e - shift)] = c.num() * (lcm_den / c.den());
    z_make_primitive(v);
    return v;
}

LaurentPoly monic_from_z(const ZVec& v) {
    LaurentPoly r;
    const mpz_class& lead = v.back();
    for (size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0)
            r += LaurentPoly::monomial(Rational(v[i], lead), static_cast<long>(i));
    return r;
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero())
        return LaurentPoly();
    if (a.is_zero())
        return monic_from_z(to_primitive(b));
    if (b.is_zero())
        return monic_from_z(to_primitive(a));
    return monic_from_z(z_gcd(to_primitive(a), to_primitive(b)));
}

LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero())
        throw std::domain_error("div_exact: division by zero polynomial");
    if (a.is_zero())
        return LaurentPoly();

    // Dense rational long division of the ordinary parts; the q-power shift
    // difference is reattached to the quotient.
    const long sa = a.min_exponent(), sb = b.min_exponent();
    const size_t da = static_cast<size_t>(a.max_exponent() - sa);
    const size_t db = static_cast<size_t>(b.max_exponent() - sb);
    if (da < db)
        throw std::domain_error("div_exact: not divisible");

    std::vector<Rational> r(da + 1), d(db + 1);
    for (const auto& [e, c] : a.terms())
        r[static_cast<size_t>(e - sa)] = c;
    for (const auto& [e, c] : b.terms())
        d[static_cast<size_t>(e - sb)] = c;

    std::vector<Rational> quot(da - db + 1);
    const Rational lead_inv = d[db].reciprocal();
    for (size_t k = da + 1; k-- > db;) {
        if (r[k].is_zero())
            continue;
        const Rational f = r[k] * lead_inv;
        quot[k - db] = f;
        for (size_t i = 0; i <= db; ++i)
            r[k - db + i] -= f * d[i];
    }
    for (const auto& c : r)
        if (!c.is_zero())
            throw std::domain_error("div_exact: not divisible");

    LaurentPoly q;
    for (size_t i = 0; i < quot.size(); ++i)
        if (!quot[i].is_zero())
            q += LaurentPoly::monomial(quot[i], static_cast<long>(i) + (sa - sb));
    return q;
}

}  // namespace qplane
