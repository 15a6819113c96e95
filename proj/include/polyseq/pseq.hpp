#pragma once

// The defining recursion of the polynomial family P_n (OEIS A174531): the
// reference oracle every other generation route is validated against.  No
// closed-form shortcut is used anywhere in this module.

#include "polyseq/exact.hpp"

namespace polyseq {

// Generation failure, annotated with the index of the offending polynomial.
class SequenceError : public std::runtime_error {
 public:
  SequenceError(long n, const std::string& msg)
      : std::runtime_error("P_" + std::to_string(n) + ": " + msg), n_(n) {}
  long n() const { return n_; }

 private:
  long n_;
};

// l_n(x) = (x + (n-1)/2)(x + (n-3)/2)...(x+1) for odd n >= 1; l_1 = 1.
// Even or nonpositive subscripts are rejected: the recursion only ever uses
// odd ones, and an even n would call for half-integer factors.
Poly l_poly(long n);

// One recursion step: P_{n+1} from P_n.  For odd n the step divides by the
// linear polynomial 4(2x+n); exactness of that division is a theorem about
// the family and is enforced at runtime (NonZeroRemainder on violation).
Poly p_step(long n, const Poly& p_n);

// P_1..P_N with every entry validated: integer coefficients and degree
// exactly floor((n-1)/2).  Construction from a raw list runs the same
// validation, so alternative generation routes share it.
class PSequence {
 public:
  explicit PSequence(std::vector<Poly> polys);
  int max_n() const { return int(polys_.size()); }
  const Poly& at(int n) const;  // 1-based
  const std::vector<Poly>& polys() const { return polys_; }

 private:
  std::vector<Poly> polys_;
};

// Builds P_1..P_N by the defining recursion (initial values P_1 = P_2 = 1).
PSequence p_sequence(int max_n);

}  // namespace polyseq
