#pragma once

// Exhaustive verification of the catalogued kernel/value/polynomial
// relations, plus four alternative generators of the sequence used to
// cross-validate the base recursion.  Relation labels ("6.1", "8.13", ...)
// are the stable catalog ids used by the CLI and the reports.

#include <optional>
#include <string>
#include <vector>

#include "polyseq/closed_form.hpp"
#include "polyseq/pseq.hpp"

namespace polyseq {

// First grid point where a relation failed, with both sides rendered.
struct Counterexample {
  long n = 0;
  long k = 0;
  std::string lhs;
  std::string rhs;
};

// Result of sweeping one labelled relation over its admissible grid.
struct IdentityCheck {
  std::string id;
  long n_lo = 0, n_hi = 0;  // n bounds actually swept
  long k_lo = 0, k_hi = 0;  // k bounds; 0/0 when the relation has no k
  long cases = 0;           // grid points evaluated
  bool pass = true;
  std::optional<Counterexample> counterexample;
};

// Kernel recurrences for T_n(k) -- ids 6.1, 6.2, 7.1, 8.2, 8.4, 8.9 -- and
// the telescoping binomial identity 4.6, each swept over its own domain
// intersected with n <= n_max, k <= k_max.  T_0 = 0 (empty sum) makes the
// n-shifted relations start one step earlier than their printed ranges.
std::vector<IdentityCheck> check_t_identities(long n_max, long k_max);

// Single-parity two-step recursion: seeds P_1, P_2 plus P_3, P_4 taken from
// the base recursion, then steps by exact division; requires max_n >= 4.
PSequence p_via_bisection(int max_n);

// Division-free relations stepping odd n from n-1 and even n from n-2;
// seeds are the defining values P_1 = P_2 = 1 only.
PSequence p_via_shift(int max_n);

// Each P_n rebuilt independently from the closed-form values at k = 0..deg
// through forward differences (Newton interpolation on the integer grid).
PSequence p_via_explicit(int max_n);

// Each P_n solved from the homogeneous relation against P_{n-1}: a
// triangular linear system for even n, a difference equation anchored at
// the closed-form constant term for odd n.
PSequence p_via_homogeneous(int max_n);

// Value-level relations between neighbouring P's -- ids 8.1, 8.3, 8.7, 8.8,
// 8.11, 8.12 -- checked as coefficient-exact polynomial identities.
std::vector<IdentityCheck> check_p_relations(const PSequence& seq);

// Congruence families: 8.13 (P_n(k) = P_n(0) mod n for odd n, k up to
// max(deg + 2, k_max)), 8.14 (the exact partial-sum quotient form), and
// 9.10 (coefficient parity against the product-extraction polynomials).
std::vector<IdentityCheck> check_congruences(const PSequence& seq, long k_max = 0);

// Modular facts: 10.6 (T_n(k) = 0 mod p for every prime p = n+2k-1-2r in
// shape, even n), and 10.8 (the closing identity with negative powers of
// two, swept for k <= 30).
std::vector<IdentityCheck> check_modp(long n_max);

}  // namespace polyseq
