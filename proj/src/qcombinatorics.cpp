#include "qplane/qcombinatorics.hpp"

#include <stdexcept>

namespace qplane {

LaurentPoly q_integer(long n) {
    if (n < 0)
        throw std::invalid_argument("q_integer: negative index");
    LaurentPoly p;
    for (long k = 0; k < n; ++k)
        p += LaurentPoly::q_power(k);
    return p;
}

LaurentPoly q_factorial(long n) {
    if (n < 0)
        throw std::invalid_argument("q_factorial: negative index");
    LaurentPoly p(1);
    for (long k = 1; k <= n; ++k)
        p *= q_integer(k);
    return p;
}

RatFun gauss_binomial(long n, long r) {
    if (n < 0)
        throw std::invalid_argument("gauss_binomial: negative n");
    if (r < 0 || r > n)
        return RatFun();
    return RatFun(q_factorial(n), q_factorial(r) * q_factorial(n - r));
}

LaurentPoly q_shifted_product(long n, long r) {
    if (r < 0)
        throw std::invalid_argument("q_shifted_product: negative r");
    if (r > n)
        throw std::invalid_argument("q_shifted_product: r exceeds n");
    LaurentPoly p(1);
    for (long i = n - r + 1; i <= n; ++i)
        p *= LaurentPoly::q_power(i) - LaurentPoly(1);
    return p;
}

RatFun reordering_coefficient_sum(long m, long n) {
    if (m < 0 || n < 0)
        throw std::invalid_argument("reordering_coefficient_sum: negative index");
    const LaurentPoly q_minus_1 = LaurentPoly::q_power(1) - LaurentPoly(1);
    RatFun sum;
    for (long r = 0; r <= std::min(m, n); ++r) {
        const LaurentPoly numer =
            LaurentPoly::q_power(r * (r - 1) / 2 - m * n) * pow(q_minus_1, static_cast<unsigned long>(r));
        const LaurentPoly denom =
            q_factorial(m - r) * q_factorial(n - r) * q_factorial(r);
        sum += RatFun(numer, denom);
    }
    return sum;
}

}  // namespace qplane
