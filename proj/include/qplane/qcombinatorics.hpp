#pragma once

#include "qplane/rational_function.hpp"

namespace qplane {

// [n] = 1 + q + ... + q^(n-1); [0] = 0. Throws on n < 0.
LaurentPoly q_integer(long n);

// [n]! = [n][n-1]...[1]; [0]! = 1. Throws on n < 0.
LaurentPoly q_factorial(long n);

// [n]! / ([r]! [n-r]!) as a canonical RatFun. The quotient is always a
// polynomial, so the canonical denominator is 1. Out-of-range r (r < 0 or
// r > n) yields 0, which lets summation loops run over uniform ranges.
RatFun gauss_binomial(long n, long r);

// (q^(n-r+1) - 1)(q^(n-r+2) - 1) ... (q^n - 1); the empty product (r = 0)
// is 1. Throws if r < 0 or r > n.
LaurentPoly q_shifted_product(long n, long r);

// The coefficient sum produced by reordering a product of q-exponentials:
//   sum_{r=0}^{min(m,n)} q^(r(r-1)/2 - mn) (q-1)^r / ([m-r]! [n-r]! [r]!)
// evaluated exactly in Q(q). Collapses to 1/([m]![n]!).
RatFun reordering_coefficient_sum(long m, long n);

}  // namespace qplane
