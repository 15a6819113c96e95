#include "polyseq/closed_form.hpp"

namespace polyseq {

namespace {

// internal consistency between formula variants; a failure is a bug, not data
void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("closed_form: formula disagreement in " + what);
}

}  // namespace

ExactInt pow2(long e) {
  if (e < 0) throw std::domain_error("pow2: negative exponent");
  ExactInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

ExactInt t_nk(long n, long k) {
  if (n < 0 || k < 1) throw std::domain_error("t_nk: need n >= 0, k >= 1");
  ExactInt forward(0), reversed(0);
  for (long i = 1; i <= n; ++i) forward += pow2(i - 1) * binomial(n + 2 * k - i - 1, k - 1);
  for (long j = 1; j <= n; ++j) reversed += pow2(n - j) * binomial(2 * k + j - 2, k - 1);
  require(forward == reversed, "t_nk indexings");
  return forward;
}

TValue t_value(long n, long k) {
  if (n < 1) throw std::domain_error("t_value: need n >= 1");
  TValue t{n, k, t_nk(n, k)};
  require(t.value > 0, "t_value positivity");
  return t;
}

ExactRat c_nk(long n, long k) {
  if (n < 1 || k < 1) throw std::domain_error("c_nk: need n >= 1, k >= 1");
  if (n % 2 == 1) {
    ExactRat c(factorial((n - 1) / 2));
    for (long i = 1; i <= k - 1; ++i) c *= make_rat(n + i, n + 2 * i);
    return c;
  }
  ExactRat c = make_rat(factorial(n / 2 - 1), 2);
  for (long i = 0; i <= k - 1; ++i) c *= make_rat(n + i, n + 2 * i + 1);
  return c;
}

ExactInt p_explicit(long n, long k) {
  if (n < 1 || k < 0) throw std::domain_error("p_explicit: need n >= 1, k >= 0");
  if (k == 0) return p_at_zero(n);
  const ExactInt t = t_nk(n, k);

  // parity-split binomial-quotient form
  ExactRat split;
  if (n % 2 == 1) {
    long h = (n - 1) / 2;
    split = make_rat(binomial(h + k - 1, k - 1), binomial(n + 2 * k - 2, k - 1)) *
            ExactRat(factorial(h) * t);
  } else {
    long h = n / 2;
    split = make_rat(binomial(h + k - 1, k), binomial(n + 2 * k - 1, k)) *
            ExactRat(factorial(h - 1) * t);
  }

  // factorial / double-factorial form with the explicit power of two
  long fl = n / 2;
  ExactRat dfact = make_rat(factorial(n + k - 1) * t,
                            pow2(fl + k - 1) * double_factorial(2 * fl + 2 * k - 1));

  // prefactor form 2^{1-k} c_n(k) T_n(k)
  ExactRat pref = make_rat(1, pow2(k - 1)) * c_nk(n, k) * ExactRat(t);

  require(split == dfact && dfact == pref, "p_explicit forms");
  if (!is_integer(split))
    throw IntegralityViolation("p_explicit(" + std::to_string(n) + "," + std::to_string(k) +
                               ") = " + split.get_str());
  return to_int(split);
}

RPoly r_poly_rec(long k) {
  if (k < 1) throw std::domain_error("r_poly_rec: need k >= 1");
  Poly r(1);  // R_1
  for (long j = 1; j < k; ++j) {
    // R_{j+1}(n) = 4j (R_j(n+1) - R_j(n)) + (4j+n)(n+2j-1)_{j-1}
    r = ExactRat(4 * j) * (r.shift(1) - r) +
        Poly::linear(1, ExactRat(4 * j)) * prod_linear(j + 1, 2 * j - 1);
  }
  require(r.degree() == int(k - 1) && r.is_integral(), "r_poly_rec shape");
  return RPoly{k, r};
}

ExactInt r_closed(long k, long n) {
  if (k < 1 || n < 1) throw std::domain_error("r_closed: need k >= 1, n >= 1");
  ExactInt sum(0);
  for (long i = 1; i <= n; ++i) sum += pow2(n - i) * binomial(2 * k + i - 2, k - 1);
  return factorial(k - 1) * (pow2(n + 2 * k - 2) - sum);
}

ExactInt p_at_zero(long n) {
  if (n < 1) throw std::domain_error("p_at_zero: need n >= 1");
  long m = (n - 1) / 2;
  ExactInt closed = pow2(2 * m) * factorial(m);

  // first-difference recursion from P_1(0) = 1:
  //   P_{i+1}(0) = (1/2) P_i(0) + 2^{i-2} ((i-1)/2)!   (odd i; 2^{-1} at i=1)
  //   P_{i+1}(0) =  i  P_i(0) + 2^{i-1} (i/2)!          (even i)
  ExactRat y(1);
  for (long i = 1; i < n; ++i) {
    if (i % 2 == 1)
      y = make_rat(1, 2) * y + make_rat(factorial((i - 1) / 2), 2) * ExactRat(pow2(i - 1));
    else
      y = ExactRat(i) * y + ExactRat(pow2(i - 1) * factorial(i / 2));
  }
  require(is_integer(y) && to_int(y) == closed, "p_at_zero recursion vs closed form");
  return closed;
}

ExactInt p_at_one(long n) {
  if (n < 1) throw std::domain_error("p_at_one: need n >= 1");
  ExactInt two_n_minus_1 = pow2(n) - 1;
  if (n % 2 == 1) return two_n_minus_1 * factorial((n - 1) / 2);
  ExactRat v = make_rat(two_n_minus_1 * factorial(n / 2), n + 1);
  if (!is_integer(v))
    throw IntegralityViolation("p_at_one(" + std::to_string(n) + ") = " + v.get_str());
  return to_int(v);
}

}  // namespace polyseq
