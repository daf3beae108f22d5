#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "qplane/rational_function.hpp"

namespace qplane {

// Total-degree cutoff for truncated series computation: terms of total degree
// greater than value are dropped.
struct TruncationOrder {
    explicit TruncationOrder(int n) : value(n) {
        if (n < 0)
            throw std::invalid_argument("TruncationOrder: negative cutoff");
    }
    int value;
};

struct PlaneMonomial {
    int xdeg = 0;
    int ydeg = 0;
    int total() const { return xdeg + ydeg; }
    friend bool operator==(PlaneMonomial, PlaneMonomial) = default;
};

// Canonical term order: total degree ascending, then x-degree descending.
struct PlaneMonomialOrder {
    bool operator()(PlaneMonomial a, PlaneMonomial b) const {
        if (a.total() != b.total())
            return a.total() < b.total();
        return a.xdeg > b.xdeg;
    }
};

// Normal-ordered element of the quantum plane xy = q^-1 yx: a finite sum of
// monomials coeff * x^m * y^n with coefficients in Q(q), x-powers kept to the
// left of y-powers. No stored coefficient is zero; the element never
// simplifies across monomials beyond that.
class PlaneElement {
public:
    using TermMap = std::map<PlaneMonomial, RatFun, PlaneMonomialOrder>;

    PlaneElement() = default;

    static PlaneElement one() { return constant(RatFun(1)); }
    static PlaneElement x() { return monomial(RatFun(1), 1, 0); }
    static PlaneElement y() { return monomial(RatFun(1), 0, 1); }
    static PlaneElement constant(const RatFun& c) { return monomial(c, 0, 0); }
    static PlaneElement monomial(const RatFun& c, int xdeg, int ydeg);

    bool is_zero() const { return terms_.empty(); }
    // Highest total degree of a stored term; -1 for the zero element.
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.total(); }
    int max_xdeg() const;
    int max_ydeg() const;

    const TermMap& terms() const { return terms_; }
    RatFun coeff(int xdeg, int ydeg) const;
    RatFun constant_term() const { return coeff(0, 0); }

    PlaneElement& operator+=(const PlaneElement& o);
    PlaneElement& operator-=(const PlaneElement& o);
    PlaneElement& operator*=(const RatFun& c);
    friend PlaneElement operator+(PlaneElement a, const PlaneElement& b) { a += b; return a; }
    friend PlaneElement operator-(PlaneElement a, const PlaneElement& b) { a -= b; return a; }
    friend PlaneElement operator*(PlaneElement a, const RatFun& c) { a *= c; return a; }
    friend PlaneElement operator*(const RatFun& c, PlaneElement a) { a *= c; return a; }
    PlaneElement operator-() const;

    // Untruncated product; see mul() for the cutoff-aware form.
    friend PlaneElement operator*(const PlaneElement& a, const PlaneElement& b);

    PlaneElement truncated(TruncationOrder cutoff) const;

    friend bool operator==(const PlaneElement& a, const PlaneElement& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const PlaneElement& a, const PlaneElement& b) { return !(a == b); }

    // Canonical text: terms by total degree ascending then x-degree
    // descending, each "(coeff)*x^m*y^n" with unit powers and unit
    // coefficients elided.
    std::string to_string() const;

private:
    void add_to(PlaneMonomial mono, const RatFun& c);

    friend PlaneElement mul(const PlaneElement&, const PlaneElement&,
                            std::optional<TruncationOrder>);
    friend PlaneElement evaluate_coefficients(const PlaneElement&, const Rational&);
    friend PlaneElement q_derivative_x(const PlaneElement&);

    TermMap terms_;
};

// Normal-ordered product. Monomial rule, from y^a x^b = q^(ab) x^b y^a:
//   (x^m1 y^n1)(x^m2 y^n2) = q^(n1*m2) x^(m1+m2) y^(n1+n2).
// Terms of total degree beyond the cutoff are dropped when one is given.
PlaneElement mul(const PlaneElement& a, const PlaneElement& b,
                 std::optional<TruncationOrder> cutoff = std::nullopt);

// k-fold product with per-step truncation; a^0 = 1.
PlaneElement pow(const PlaneElement& a, int k,
                 std::optional<TruncationOrder> cutoff = std::nullopt);

// Truncated q-exponential sum_{k=0}^{N} arg^k / [k]!. The argument must have
// no constant term (throws std::domain_error otherwise); its minimum degree
// being >= 1 makes the degree-N result need only k <= N series terms.
PlaneElement q_exp(const PlaneElement& arg, TruncationOrder cutoff);

// Normal-orders a word over the alphabet {x, y}: a word with m x's, n y's
// and s inversions (y preceding x) equals q^s x^m y^n. Equals the fold of
// mul() over the letters; the empty word gives 1.
PlaneElement normal_order_word(std::string_view word);

// Every coefficient evaluated at q = q0, kept as a constant in Q(q).
// Throws std::domain_error if any coefficient has a pole at q0.
PlaneElement evaluate_coefficients(const PlaneElement& a, const Rational& q0);

// The q-difference operator in x on coefficients: c_(m,n) -> [m+1] c_(m+1,n).
PlaneElement q_derivative_x(const PlaneElement& a);

}  // namespace qplane
