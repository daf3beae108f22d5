#include "qplane/rational_function.hpp"

namespace qplane {

// Unit normalization: pull the q-power out of den into num, make den monic.
RatFun::RatFun(reduced_tag, LaurentPoly num, LaurentPoly den) {
    if (num.is_zero()) {
        num_ = LaurentPoly();
        den_ = LaurentPoly(1);
        return;
    }
    const long beta = den.min_exponent();
    const Rational lead = den.leading_coeff();
    const Rational scale = lead.reciprocal();
    num_ = num.shifted(-beta) * scale;
    den_ = den.shifted(-beta) * scale;
}

RatFun::RatFun(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero())
        throw std::domain_error("RatFun: zero denominator");
    if (num.is_zero()) {
        num_ = LaurentPoly();
        den_ = LaurentPoly(1);
        return;
    }
    const LaurentPoly g = gcd(num, den);
    if (g.is_one())
        *this = RatFun(reduced_tag{}, num, den);
    else
        *this = RatFun(reduced_tag{}, div_exact(num, g), div_exact(den, g));
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    // Classic reduced addition: with g = gcd(da, db), the combined numerator
    // can only share factors with g, so one more gcd finishes the reduction.
    const LaurentPoly g = gcd(a.den_, b.den_);
    if (g.is_one()) {
        return RatFun(RatFun::reduced_tag{}, a.num_ * b.den_ + b.num_ * a.den_,
                      a.den_ * b.den_);
    }
    const LaurentPoly da = div_exact(a.den_, g);
    const LaurentPoly db = div_exact(b.den_, g);
    const LaurentPoly t = a.num_ * db + b.num_ * da;
    if (t.is_zero())
        return RatFun();
    const LaurentPoly h = gcd(t, g);
    if (h.is_one())
        return RatFun(RatFun::reduced_tag{}, t, a.den_ * db);
    return RatFun(RatFun::reduced_tag{}, div_exact(t, h),
                  div_exact(g, h) * da * db);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero())
        return RatFun();
    // Cross-cancel before multiplying; the factors are then pairwise coprime.
    const LaurentPoly g1 = gcd(a.num_, b.den_);
    const LaurentPoly g2 = gcd(b.num_, a.den_);
    LaurentPoly n1 = g1.is_one() ? a.num_ : div_exact(a.num_, g1);
    LaurentPoly n2 = g2.is_one() ? b.num_ : div_exact(b.num_, g2);
    LaurentPoly d1 = g2.is_one() ? a.den_ : div_exact(a.den_, g2);
    LaurentPoly d2 = g1.is_one() ? b.den_ : div_exact(b.den_, g1);
    return RatFun(RatFun::reduced_tag{}, n1 * n2, d1 * d2);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    return a * b.reciprocal();
}

RatFun RatFun::reciprocal() const {
    if (is_zero())
        throw std::domain_error("RatFun: division by zero");
    return RatFun(reduced_tag{}, den_, num_);
}

RatFun RatFun::operator-() const {
    RatFun r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational RatFun::eval(const Rational& q0) const {
    const Rational d = den_.eval(q0);
    if (d.is_zero())
        throw std::domain_error("RatFun: pole at q = " + q0.to_string());
    return num_.eval(q0) / d;
}

std::string RatFun::to_string() const {
    // Input syntax (qinv^k, never q^-k) keeps polynomial coefficients
    // re-parseable by the expression grammar; the denominator never has
    // negative exponents, so only the numerator is affected.
    std::string s = "(" + num_.to_input_syntax() + ")";
    if (!den_.is_one())
        s += "/(" + den_.to_input_syntax() + ")";
    return s;
}

}  // namespace qplane
