#pragma once

// Closed-form evaluation: T_n(k), the rational prefactor c_n(k), the
// correction polynomials R_k(n), and P_n(k) at integer points.  This is the
// recursion-free route to the family; every value is assembled by at least
// two independent formulas that are required to agree exactly.

#include "polyseq/exact.hpp"

namespace polyseq {

// A closed-form value came out non-integral; must never fire for valid input.
class IntegralityViolation : public std::runtime_error {
 public:
  explicit IntegralityViolation(const std::string& msg) : std::runtime_error(msg) {}
};

// 2^e for e >= 0
ExactInt pow2(long e);

// T_n(k) = sum_{i=1..n} 2^{i-1} C(n+2k-i-1, k-1), n >= 0 (empty sum at n=0),
// k >= 1; the reversed indexing sum_{j=1..n} 2^{n-j} C(2k+j-2, k-1) is
// computed as well and both must agree.
ExactInt t_nk(long n, long k);

struct TValue {
  long n;
  long k;
  ExactInt value;
};
TValue t_value(long n, long k);  // t_nk plus the positivity invariant (n,k >= 1)

// Parity-split rational prefactor c_n(k); n >= 1, k >= 1.
ExactRat c_nk(long n, long k);

// P_n(k) for n >= 1, k >= 0 (k = 0 delegates to p_at_zero).  Assembled three
// ways -- the parity-split binomial-quotient form, the factorial over
// double-factorial form, and 2^{1-k} c_n(k) T_n(k) -- all required to agree
// and to be an integer.
ExactInt p_explicit(long n, long k);

struct RPoly {
  long k;
  Poly poly;  // polynomial in n, degree k-1, integer coefficients
};

// R_k via the defining polynomial recursion
//   R_1 = 1,  R_{k+1}(n) = 4k(R_k(n+1) - R_k(n)) + (4k+n)(n+2k-1)_{k-1}.
RPoly r_poly_rec(long k);

// R_k(n) by the summation closed form 2^n (k-1)! (4^{k-1} - sum 2^{-i} C(2k+i-2, k-1)),
// computed with the powers of two cleared so everything stays in ExactInt.
ExactInt r_closed(long k, long n);

// P_n(0) = 4^m m!, m = floor((n-1)/2); recomputed through the first-difference
// recursion from P_1(0) = 1 and required to agree.
ExactInt p_at_zero(long n);

// P_n(1) = (2^n - 1)((n-1)/2)! for odd n, (2^n - 1)(n/2)!/(n+1) for even n.
ExactInt p_at_one(long n);

}  // namespace polyseq
