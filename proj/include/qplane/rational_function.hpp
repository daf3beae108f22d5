#pragma once

#include <string>

#include "qplane/laurent.hpp"

namespace qplane {

// Element of the field Q(q), kept in a unique canonical form:
//  - den is never zero and contains no negative exponents,
//  - the lowest exponent of den is 0 and its leading coefficient is 1,
//  - num (shifted to an ordinary polynomial) and den are coprime.
// Any power of q is a unit and lives in the numerator. With this form,
// equality of values coincides with equality of representations.
class RatFun {
public:
    RatFun() : num_(), den_(1) {}
    RatFun(const Rational& c) : num_(c), den_(1) {}
    RatFun(long c) : num_(Rational(c)), den_(1) {}
    RatFun(LaurentPoly p) : num_(std::move(p)), den_(1) {}
    // Canonicalizing constructor; throws std::domain_error on a zero den.
    RatFun(const LaurentPoly& num, const LaurentPoly& den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFun& operator+=(const RatFun& o) { *this = *this + o; return *this; }
    RatFun& operator-=(const RatFun& o) { *this = *this - o; return *this; }
    RatFun& operator*=(const RatFun& o) { *this = *this * o; return *this; }
    RatFun& operator/=(const RatFun& o) { *this = *this / o; return *this; }

    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    // Throws std::domain_error on division by the zero rational function.
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun operator-() const;

    RatFun reciprocal() const;

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    // Exact value at q = q0; throws std::domain_error at a pole (a root of
    // the canonical denominator, or q0 = 0 with negative exponents present).
    Rational eval(const Rational& q0) const;

    // "(num)/(den)", with "/(den)" omitted when den = 1. Negative exponents
    // render in expression-language syntax (qinv^k), so any value with unit
    // denominator re-parses as written.
    std::string to_string() const;

private:
    struct reduced_tag {};
    // Unit normalization only; assumes the ordinary parts are already coprime.
    RatFun(reduced_tag, LaurentPoly num, LaurentPoly den);

    LaurentPoly num_;
    LaurentPoly den_;
};

}  // namespace qplane
