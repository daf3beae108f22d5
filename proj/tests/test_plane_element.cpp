#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qplane/plane_element.hpp"
#include "qplane/qcombinatorics.hpp"

using qplane::LaurentPoly;
using qplane::PlaneElement;
using qplane::RatFun;
using qplane::Rational;
using qplane::TruncationOrder;
using qplane::gauss_binomial;
using qplane::normal_order_word;
using qplane::q_factorial;
using qplane::q_integer;
using namespace qplane::testing;

namespace {
PlaneElement qpow_monomial(long q_exponent, int xdeg, int ydeg) {
    return PlaneElement::monomial(RatFun(LaurentPoly::q_power(q_exponent)),
                                  xdeg, ydeg);
}
}  // namespace

TEST_SUITE("plane") {

TEST_CASE("products normal-order through the commutation rule") {
    PlaneElement x = PlaneElement::x(), y = PlaneElement::y();
    CHECK(y * x == qpow_monomial(1, 1, 1));  // y x = q * x y
    CHECK(x * y == qpow_monomial(0, 1, 1));
    // y^2 * x^3 picks up q^6: six adjacent swaps.
    CHECK(pow(y, 2) * pow(x, 3) == qpow_monomial(6, 3, 2));
    CHECK((x * PlaneElement::one()) == x);
    CHECK((x * PlaneElement()).is_zero());
}

TEST_CASE("word normal ordering equals exhaustive swap rewriting") {
    CHECK(normal_order_word("yx") == qpow_monomial(1, 1, 1));
    CHECK(normal_order_word("") == PlaneElement::one());
    CHECK(normal_order_word("yxyx") == qpow_monomial(3, 2, 2));
    CHECK_THROWS_AS(normal_order_word("xz"), std::invalid_argument);

    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> length(0, 12);
    for (int trial = 0; trial < 200; ++trial) {
        std::string word;
        int n = length(rng);
        for (int i = 0; i < n; ++i)
            word.push_back(rng() % 2 ? 'y' : 'x');
        auto [q_exponent, sorted] = swap_rewrite(word);
        auto xdeg = static_cast<int>(
            std::count(sorted.begin(), sorted.end(), 'x'));
        CHECK(normal_order_word(word) ==
              qpow_monomial(q_exponent, xdeg, n - xdeg));
    }
}

TEST_CASE("word normal ordering equals the fold of products") {
    std::mt19937 rng(20240818);
    for (int trial = 0; trial < 50; ++trial) {
        std::string word;
        int n = static_cast<int>(rng() % 10);
        PlaneElement fold = PlaneElement::one();
        for (int i = 0; i < n; ++i) {
            bool is_y = rng() % 2;
            word.push_back(is_y ? 'y' : 'x');
            fold = fold * (is_y ? PlaneElement::y() : PlaneElement::x());
        }
        CHECK(normal_order_word(word) == fold);
    }
}

TEST_CASE("binomial powers match hand expansion and word expansion") {
    PlaneElement xy = PlaneElement::x() + PlaneElement::y();
    PlaneElement sq = pow(xy, 2);
    CHECK(sq.coeff(2, 0) == RatFun(1));
    CHECK(sq.coeff(1, 1) == RatFun(q_integer(2)));  // x y + y x = (1+q) x y
    CHECK(sq.coeff(0, 2) == RatFun(1));

    CHECK(pow(xy, 3).coeff(1, 2) == gauss_binomial(3, 1));

    std::mt19937 rng(20240822);
    CHECK(pow(random_element(rng), 0) == PlaneElement::one());

    for (int n = 0; n <= 8; ++n) {
        auto by_words = binomial_expansion_by_words(n);
        PlaneElement p = pow(xy, n);
        for (int r = 0; r <= n; ++r)
            CHECK(p.coeff(r, n - r) == RatFun(by_words[static_cast<size_t>(r)]));
    }
}

TEST_CASE("multiplication is associative") {
    std::mt19937 rng(20240819);
    for (int trial = 0; trial < 60; ++trial) {
        PlaneElement a = random_element(rng);
        PlaneElement b = random_element(rng);
        PlaneElement c = random_element(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(mul(a, b + c) == mul(a, b) + mul(a, c));
    }
}

TEST_CASE("grading and truncation") {
    std::mt19937 rng(20240820);
    for (int trial = 0; trial < 60; ++trial) {
        PlaneElement a = random_element(rng);
        PlaneElement b = random_element(rng);
        PlaneElement full = mul(a, b);
        if (!full.is_zero())
            CHECK(full.degree() <= a.degree() + b.degree());
        // Truncated product = full product with high terms dropped.
        CHECK(mul(a, b, TruncationOrder(3)) == full.truncated(TruncationOrder(3)));
        // Computing at a higher cutoff and re-truncating changes nothing.
        CHECK(mul(a, b, TruncationOrder(5)).truncated(TruncationOrder(2)) ==
              mul(a, b, TruncationOrder(2)));
    }
}

TEST_CASE("q-exponential of x has inverse q-factorial coefficients") {
    PlaneElement e = q_exp(PlaneElement::x(), TruncationOrder(3));
    CHECK(e.coeff(0, 0) == RatFun(1));
    CHECK(e.coeff(1, 0) == RatFun(1));
    CHECK(e.coeff(2, 0) == RatFun(LaurentPoly(1), q_factorial(2)));
    CHECK(e.coeff(3, 0) == RatFun(LaurentPoly(1), q_factorial(3)));
    CHECK(e.degree() == 3);

    CHECK(q_exp(PlaneElement(), TruncationOrder(5)) == PlaneElement::one());
    CHECK_THROWS_AS(q_exp(PlaneElement::one() + PlaneElement::x(),
                          TruncationOrder(4)),
                    std::domain_error);
}

TEST_CASE("q-exponential is an eigenfunction of the q-difference operator") {
    for (int cutoff = 1; cutoff <= 7; ++cutoff) {
        PlaneElement e = q_exp(PlaneElement::x(), TruncationOrder(cutoff));
        CHECK(q_derivative_x(e) ==
              q_exp(PlaneElement::x(), TruncationOrder(cutoff - 1)));
    }
    // On a general element the rule acts coefficient-wise: c_(m,n) -> [m+1] c_(m+1,n).
    PlaneElement a = PlaneElement::monomial(RatFun(Rational(5)), 3, 2);
    CHECK(q_derivative_x(a) ==
          PlaneElement::monomial(RatFun(q_integer(3) * Rational(5)), 2, 2));
}

TEST_CASE("the q = 1 limit is the commutative classical picture") {
    std::mt19937 rng(20240821);
    Rational one(1);
    for (int trial = 0; trial < 40; ++trial) {
        PlaneElement a = random_element(rng);
        PlaneElement b = random_element(rng);
        CHECK(evaluate_coefficients(a * b, one) ==
              evaluate_coefficients(b * a, one));
    }
    // exp(x+y) at q = 1 has multinomial coefficients 1/(r!(k-r)!).
    PlaneElement e = evaluate_coefficients(
        q_exp(PlaneElement::x() + PlaneElement::y(), TruncationOrder(5)), one);
    for (int k = 0; k <= 5; ++k)
        for (int r = 0; r <= k; ++r) {
            Rational expected =
                (qplane::factorial(static_cast<unsigned long>(r)) *
                 qplane::factorial(static_cast<unsigned long>(k - r)))
                    .reciprocal();
            CHECK(e.coeff(r, k - r) == RatFun(expected));
        }
}

TEST_CASE("coefficient evaluation reports poles") {
    PlaneElement e = q_exp(PlaneElement::x(), TruncationOrder(2));
    // [2]! = 1 + q vanishes at q = -1.
    CHECK_THROWS_AS(evaluate_coefficients(e, Rational(-1)), std::domain_error);
}

TEST_CASE("rendering follows the canonical term order") {
    PlaneElement e = PlaneElement::y() + PlaneElement::x() +
                     qpow_monomial(1, 1, 1) + PlaneElement::one();
    CHECK(e.to_string() == "1 + x + y + (q)*x*y");
    CHECK(PlaneElement().to_string() == "0");
    CHECK(pow(PlaneElement::x(), 2).to_string() == "x^2");
    CHECK((PlaneElement::x() * RatFun(Rational(-2))).to_string() == "(-2)*x");
    CHECK((PlaneElement::y() * RatFun(LaurentPoly::q_power(-1))).to_string() ==
          "(qinv)*y");
}

}  // TEST_SUITE
