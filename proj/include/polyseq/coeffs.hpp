#pragma once

// Coefficient analysis in the power and binomial bases: closed forms and
// homogeneous recursions for the coefficients, interpolated coefficient
// polynomials (split by parity), and the Stirling polynomials behind the
// binomial-basis route.

#include <string>
#include <utility>
#include <vector>

#include "polyseq/identities.hpp"
#include "polyseq/pseq.hpp"

namespace polyseq {

// Integer-valued polynomial in the binomial basis: b[i] multiplies C(x, m-i),
// highest order first.
struct BinomPoly {
  long m = 0;
  std::vector<ExactInt> b;  // size m+1

  Poly to_power() const;    // expand back into the power basis
  std::string str() const;  // e.g. "10C(x,2)+30C(x,1)+32"
};

// b_i = sum_{k=0..m-i} (-1)^{m-i-k} C(m-i, k) p(k); requires deg p <= m and
// integer values on 0..m.  The expansion is exact: to_power() reproduces p.
BinomPoly to_binomial(const Poly& p, long m);

// Both coefficient families of a sequence prefix, highest order first:
// a(n, i) is the power coefficient of x^{m-i}, b(n, i) the binomial-basis
// coefficient of C(x, m-i), with m = floor((n-1)/2).
class CoeffTable {
 public:
  explicit CoeffTable(const PSequence& seq);

  int max_n() const { return int(a_.size()) - 1; }
  long m_of(long n) const { return (n - 1) / 2; }
  const ExactInt& a(long n, long i) const;
  const ExactInt& b(long n, long i) const;

 private:
  std::vector<std::vector<ExactInt>> a_, b_;  // index [n][i], row 0 unused
};

// Closed forms 9.2/9.3 for the two leading power coefficients and the
// homogeneous recursions 9.11 (odd n) / 9.12 (even n, sign-corrected --
// see the catalog note in the implementation).
std::vector<IdentityCheck> check_a_formulas(const CoeffTable& tbl);

// Closed forms 12.5/12.6, the Stirling route 12.12, the cross-parity
// recursions 12.13/12.14, and the divisibility n | b_j(n) for odd n
// (id "12.div").
std::vector<IdentityCheck> check_b_formulas(const CoeffTable& tbl);

// Exact Lagrange interpolation through the given (x, y) nodes; the unique
// polynomial of degree < nodes.size().  Nodes must have distinct x.
Poly lagrange(const std::vector<std::pair<ExactRat, ExactRat>>& nodes);

enum class Parity { odd, even };
enum class CoeffBasis { power, binomial };

// The sequence prefix is too short to supply the interpolation nodes.
class InsufficientSamples : public std::runtime_error {
 public:
  explicit InsufficientSamples(const std::string& msg) : std::runtime_error(msg) {}
};

// Interpolates the degree-(2i+1) polynomial through the coefficient samples
// a_i(n) (power) or b_i(n)/(m-i)! (binomial) over one parity class, using
// the 2i+2 smallest admissible n; three further samples are held out and
// must lie on the fit exactly.
Poly fit_coeff_poly(long i, Parity parity, CoeffBasis basis, const PSequence& seq);

// Q_k as a genuine polynomial of degree 2k: Q_0 = 1 and Q_k(n) =
// sum_{i=1..n} i Q_{k-1}(i), summed symbolically via power-sum polynomials.
// At every integer n >= 0 it equals stirling2(n+k, n).
struct QPoly {
  long k = 0;
  Poly poly;
};
QPoly q_poly(long k);

// lcm of the coefficient denominators (1 for the zero polynomial)
ExactInt denominator_lcm(const Poly& p);

// prod over primes p of p^{sum_{j>=0} floor(k/((p-1)p^j))} -- the predicted
// denominator of Q_k
ExactInt q_denominator(long k);

}  // namespace polyseq
