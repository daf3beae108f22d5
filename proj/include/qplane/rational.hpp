#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace qplane {

// Exact rational scalar backed by GMP. Values are always canonical:
// denominator > 0 and gcd(|num|, den) = 1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}
    Rational(mpz_class n, mpz_class d) {
        if (sgn(d) == 0)
            throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(std::move(n), std::move(d));
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}

    // Accepts "a" or "a/b", optionally signed, e.g. "-3/2".
    static Rational from_string(const std::string& text);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    Rational operator-() const { Rational r; r.v_ = -v_; return r; }

    Rational reciprocal() const {
        if (is_zero())
            throw std::domain_error("Rational: reciprocal of zero");
        Rational r;
        mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
        return r;
    }

    // q^e for signed e; e < 0 requires a nonzero value.
    Rational pow(long e) const;

    Rational abs() const { Rational r; r.v_ = ::abs(v_); return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    std::string to_string() const {
        if (v_.get_den() == 1)
            return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

private:
    mpq_class v_;
};

inline Rational Rational::from_string(const std::string& text) {
    auto slash = text.find('/');
    try {
        // Base 10 always: mpz_class's default base auto-detection would read
        // a leading 0 as octal.
        if (slash == std::string::npos)
            return Rational(mpz_class(text, 10), mpz_class(1));
        return Rational(mpz_class(text.substr(0, slash), 10),
                        mpz_class(text.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    }
}

inline Rational Rational::pow(long e) const {
    if (e == 0)
        return Rational(1);
    const Rational base = e < 0 ? reciprocal() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1
                            : static_cast<unsigned long>(e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), k);
    Rational r;
    r.v_ = mpq_class(n, d);  // already canonical: num, den coprime
    return r;
}

// n! as an exact integer value.
inline Rational factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

}  // namespace qplane
