#pragma once

// Exact arithmetic kernel: arbitrary-precision integers/rationals (GMP) plus
// dense univariate polynomials over the rationals, and the combinatorial
// functions everything else is built on.  All arithmetic is exact; there is
// no floating-point mode.

#include <gmpxx.h>

#include <climits>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyseq {

using ExactInt = mpz_class;
using ExactRat = mpq_class;

// num/den reduced to lowest terms, den > 0.
ExactRat make_rat(const ExactInt& num, const ExactInt& den);

inline bool is_integer(const ExactRat& q) { return q.get_den() == 1; }

// Numerator of an already-integral rational; throws if den != 1.
ExactInt to_int(const ExactRat& q);

// C(n,k) with the conventions C(n,0) = 1 and C(n,k) = 0 for k < 0 or k > n.
ExactInt binomial(const ExactInt& n, const ExactInt& k);
ExactInt binomial(long n, long k);

// n! for n >= -1; n = -1 and n = 0 give the empty product 1.
ExactInt factorial(long n);

// n!! for n >= -1; (-1)!! = 0!! = 1.
ExactInt double_factorial(long n);

// x(x-1)...(x-k+1); the empty product (k = 0) is 1.
ExactRat falling_factorial(const ExactRat& x, long k);
ExactInt falling_factorial(const ExactInt& x, long k);

// Stirling number of the second kind S(n,m).
ExactInt stirling2(long n, long m);

// Deterministic trial-division primality (desk scale).
bool is_prime(unsigned long n);

// Thrown by exact_div when den does not divide num exactly.
class NonZeroRemainder : public std::runtime_error {
 public:
  explicit NonZeroRemainder(const std::string& msg) : std::runtime_error(msg) {}
};

// Dense univariate polynomial over ExactRat in the power basis: coeffs()[i]
// is the coefficient of x^i.  No trailing zero is ever stored; the zero
// polynomial is the empty vector and reports the distinguished degree kNegInf.
class Poly {
 public:
  static constexpr int kNegInf = INT_MIN / 2;  // "degree" of the zero polynomial

  Poly() = default;
  Poly(long c) : Poly(ExactRat(c)) {}                      // constant
  Poly(const ExactInt& c) : Poly(ExactRat(c)) {}           // constant
  Poly(const ExactRat& c);                                 // constant
  explicit Poly(std::vector<ExactRat> coeffs);

  static Poly x();                                        // the monomial x
  static Poly linear(const ExactRat& a, const ExactRat& b);  // a*x + b

  int degree() const { return coeffs_.empty() ? kNegInf : int(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  ExactRat coeff(int i) const;             // 0 outside 0..degree
  const ExactRat& leading() const;         // requires nonzero
  const std::vector<ExactRat>& coeffs() const { return coeffs_; }

  ExactRat eval(const ExactRat& x) const;  // Horner, exact
  Poly shift(const ExactRat& delta) const; // q with q(x) = p(x + delta)

  bool is_integral() const;                // every denominator is 1
  ExactInt content() const;                // gcd of |coefficients|; integral nonzero p only

  std::string str() const;                 // descending-power text, e.g. "3x+4"

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const ExactRat& c, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void normalize();
  std::vector<ExactRat> coeffs_;
};

// Exact division: q with num = q*den; throws NonZeroRemainder otherwise.
Poly exact_div(const Poly& num, const Poly& den);

// (x + lo)(x + lo + 1)...(x + hi); the constant 1 when hi < lo.
Poly prod_linear(long lo, long hi);

}  // namespace polyseq
