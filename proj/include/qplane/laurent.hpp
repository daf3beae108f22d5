#pragma once

#include <map>
#include <string>

#include "qplane/rational.hpp"

namespace qplane {

// Laurent polynomial in one indeterminate q over the rationals, stored as a
// sparse map from (possibly negative) exponent to coefficient. Invariant: no
// stored coefficient is zero; the zero polynomial is the empty map.
class LaurentPoly {
public:
    using TermMap = std::map<long, Rational>;

    LaurentPoly() = default;
    LaurentPoly(const Rational& c) { set(0, c); }
    LaurentPoly(long c) : LaurentPoly(Rational(c)) {}

    static LaurentPoly monomial(const Rational& c, long exponent) {
        LaurentPoly p;
        p.set(exponent, c);
        return p;
    }
    static LaurentPoly q_power(long exponent) { return monomial(Rational(1), exponent); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

    // Lowest / highest stored exponent. Undefined on the zero polynomial.
    long min_exponent() const { return terms_.begin()->first; }
    long max_exponent() const { return terms_.rbegin()->first; }

    const TermMap& terms() const { return terms_; }
    Rational coeff(long exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    Rational leading_coeff() const { return terms_.rbegin()->second; }

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }
    LaurentPoly& operator*=(const Rational& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { a += b; return a; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { a -= b; return a; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { a *= c; return a; }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { a *= c; return a; }
    LaurentPoly operator-() const;

    // Multiply by q^k (exponent shift).
    LaurentPoly shifted(long k) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // Exact value at q = q0. Throws if q0 = 0 while negative exponents are
    // present (pole at the origin).
    Rational eval(const Rational& q0) const;

    // Canonical text: terms in ascending exponent order, "q^-1" style for
    // negative exponents, rationals as "a/b" or "a".
    std::string to_string() const;
    // Same polynomial in the expression-language syntax (qinv^k instead of
    // q^-k), suitable for re-parsing.
    std::string to_input_syntax() const;

private:
    void set(long exponent, const Rational& c) {
        if (!c.is_zero())
            terms_[exponent] = c;
    }
    void add_to(long exponent, const Rational& c);

    TermMap terms_;
};

LaurentPoly pow(const LaurentPoly& p, unsigned long e);

// Monic gcd of the ordinary-polynomial parts: powers of q are units in the
// Laurent ring and are ignored, so gcd(q^a A, q^b B) = gcd(A, B), returned
// with lowest exponent 0 and leading coefficient 1. gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

// Exact quotient satisfying div_exact(a, b) * b = a; throws
// std::domain_error if b is zero or does not divide a (up to q-powers, every
// nonzero Laurent monomial is invertible, so shifts never block division).
LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace qplane
