#include "polyseq/identities.hpp"

#include <algorithm>
#include <utility>

namespace polyseq {

namespace {

// Grid sweeper: counts every evaluated point, keeps the first mismatch, and
// never stops early so the recorded case count reflects the full grid.
class Sweep {
 public:
  Sweep(std::string id, long n_lo, long n_hi, long k_lo = 0, long k_hi = 0) {
    c_.id = std::move(id);
    c_.n_lo = n_lo;
    c_.n_hi = n_hi;
    c_.k_lo = k_lo;
    c_.k_hi = k_hi;
  }

  template <class A, class B>
  void add(long n, long k, const A& lhs, const B& rhs) {
    ++c_.cases;
    if (c_.pass && !(lhs == rhs)) {
      c_.pass = false;
      c_.counterexample = Counterexample{n, k, render(lhs), render(rhs)};
    }
  }

  // congruence flavor: pass iff lhs = rhs (mod m); sides recorded unreduced
  void add_mod(long n, long k, const ExactInt& lhs, const ExactInt& rhs, long mod) {
    ++c_.cases;
    if (c_.pass && ExactInt(abs(lhs - rhs)) % mod != 0) {
      c_.pass = false;
      c_.counterexample = Counterexample{n, k, lhs.get_str(), rhs.get_str()};
    }
  }

  IdentityCheck done() { return std::move(c_); }

 private:
  template <class T>
  static std::string render(const T& v) {
    if constexpr (std::is_convertible_v<T, ExactInt>)
      return ExactInt(v).get_str();
    else if constexpr (std::is_convertible_v<T, ExactRat>)
      return ExactRat(v).get_str();
    else
      return v.str();
  }

  IdentityCheck c_;
};

// x^j as a Poly
Poly monomial(long j) {
  std::vector<ExactRat> v(size_t(j) + 1, ExactRat(0));
  v[size_t(j)] = 1;
  return Poly(std::move(v));
}

}  // namespace

std::vector<IdentityCheck> check_t_identities(long n_max, long k_max) {
  if (n_max < 2 || k_max < 2) throw std::domain_error("check_t_identities: grid too small");

  // shared value table; the k-stepping relations reach one column past k_max
  std::vector<std::vector<ExactInt>> table(size_t(n_max) + 1);
  for (long n = 0; n <= n_max; ++n) {
    table[size_t(n)].resize(size_t(k_max) + 2);
    for (long k = 1; k <= k_max + 1; ++k) table[size_t(n)][size_t(k)] = t_nk(n, k);
  }
  auto t = [&table](long n, long k) -> const ExactInt& { return table[size_t(n)][size_t(k)]; };

  std::vector<IdentityCheck> out;

  {  // 6.1: T_n(k) - 2 T_{n-1}(k) = C(n+2k-2, k-1)
    Sweep s("6.1", 1, n_max, 1, k_max);
    for (long n = 1; n <= n_max; ++n)
      for (long k = 1; k <= k_max; ++k)
        s.add(n, k, ExactInt(t(n, k) - 2 * t(n - 1, k)), binomial(n + 2 * k - 2, k - 1));
    out.push_back(s.done());
  }
  {  // 6.2: T_n(k) - 4 T_{n-2}(k) = C(n+2k-2, k-1) + 2 C(n+2k-3, k-1)
    Sweep s("6.2", 2, n_max, 2, k_max);
    for (long n = 2; n <= n_max; ++n)
      for (long k = 2; k <= k_max; ++k)
        s.add(n, k, ExactInt(t(n, k) - 4 * t(n - 2, k)),
              ExactInt(binomial(n + 2 * k - 2, k - 1) + 2 * binomial(n + 2 * k - 3, k - 1)));
    out.push_back(s.done());
  }
  {  // 7.1: T_n(k) - T_{n-2}(k+1) = C(n+2k-1, k)
    Sweep s("7.1", 2, n_max, 1, k_max);
    for (long n = 2; n <= n_max; ++n)
      for (long k = 1; k <= k_max; ++k)
        s.add(n, k, ExactInt(t(n, k) - t(n - 2, k + 1)), binomial(n + 2 * k - 1, k));
    out.push_back(s.done());
  }
  {  // 8.2: T_n(k+1) = 4 T_n(k) - (n/k) C(n+2k-1, k-1)
    Sweep s("8.2", 1, n_max, 1, k_max);
    for (long n = 1; n <= n_max; ++n)
      for (long k = 1; k <= k_max; ++k)
        s.add(n, k, ExactRat(t(n, k + 1)),
              ExactRat(4 * t(n, k)) - make_rat(n, k) * ExactRat(binomial(n + 2 * k - 1, k - 1)));
    out.push_back(s.done());
  }
  {  // 8.4: (n+k-1)(T_n(k) - 4 T_n(k-1)) = n (T_{n-1}(k) - 2 T_n(k-1))
    Sweep s("8.4", 2, n_max, 2, k_max);
    for (long n = 2; n <= n_max; ++n)
      for (long k = 2; k <= k_max; ++k)
        s.add(n, k, ExactInt((n + k - 1) * (t(n, k) - 4 * t(n, k - 1))),
              ExactInt(n * (t(n - 1, k) - 2 * t(n, k - 1))));
    out.push_back(s.done());
  }
  {  // 8.9: 2 T_n(k) - T_{n-1}(k+1) = C(n+2k-1, k)
    Sweep s("8.9", 2, n_max, 2, k_max);
    for (long n = 2; n <= n_max; ++n)
      for (long k = 2; k <= k_max; ++k)
        s.add(n, k, ExactInt(2 * t(n, k) - t(n - 1, k + 1)), binomial(n + 2 * k - 1, k));
    out.push_back(s.done());
  }
  {  // 4.6: 4 sum 2^{-i} C(2k+i-2, k-1) - sum 2^{-i} C(2k+i, k)
    //        = n/(k 2^n) C(2k+n-1, k-1); the left side accumulates over n
    Sweep s("4.6", 0, n_max, 1, k_max);
    for (long k = 1; k <= k_max; ++k) {
      ExactRat lhs(0);
      for (long n = 0; n <= n_max; ++n) {
        if (n >= 1)
          lhs += make_rat(4 * binomial(2 * k + n - 2, k - 1) - binomial(2 * k + n, k), pow2(n));
        s.add(n, k, lhs, make_rat(n, k * pow2(n)) * ExactRat(binomial(2 * k + n - 1, k - 1)));
      }
    }
    out.push_back(s.done());
  }
  return out;
}

PSequence p_via_bisection(int max_n) {
  if (max_n < 4) throw std::domain_error("p_via_bisection: need max_n >= 4");
  PSequence base = p_sequence(4);
  std::vector<Poly> p{base.at(1), base.at(2), base.at(3), base.at(4)};
  p.reserve(size_t(max_n));
  for (int n = 5; n <= max_n; ++n) {
    Poly num = ExactRat(2) * (Poly::linear(1, n - 1) * Poly::linear(1, n - 2) * p[size_t(n) - 3]);
    if (n % 2 == 1) {
      num = num + Poly::linear(4, 3 * n - 4) * prod_linear(0, (n - 1) / 2 - 1);
      p.push_back(exact_div(num, Poly::linear(2, n - 2)));
    } else {
      num = num + make_rat(1, 2) * (Poly::linear(4, 3 * n - 4) * prod_linear(0, (n - 2) / 2 - 1));
      p.push_back(exact_div(num, Poly::linear(2, n - 1)));
    }
  }
  return PSequence(std::move(p));
}

PSequence p_via_shift(int max_n) {
  if (max_n < 1) throw std::domain_error("p_via_shift: need max_n >= 1");
  std::vector<Poly> p{Poly(1), Poly(1)};
  p.reserve(size_t(max_n));
  for (int n = 3; n <= max_n; ++n) {
    if (n % 2 == 1)
      p.push_back(ExactRat(2) * (Poly::linear(1, n - 1) * p[size_t(n) - 2]) +
                  prod_linear(0, (n - 1) / 2 - 1));
    else
      p.push_back(Poly::linear(1, n - 1) * p[size_t(n) - 3].shift(1) +
                  prod_linear(1, n / 2 - 1));
  }
  p.resize(size_t(max_n), Poly(1));  // max_n 1: drop the unused second seed
  return PSequence(std::move(p));
}

PSequence p_via_explicit(int max_n) {
  if (max_n < 1) throw std::domain_error("p_via_explicit: need max_n >= 1");
  std::vector<Poly> p;
  p.reserve(size_t(max_n));
  for (int n = 1; n <= max_n; ++n) {
    long m = (n - 1) / 2;
    // forward differences of the value grid 0..m, in place
    std::vector<ExactRat> d;
    d.reserve(size_t(m) + 1);
    for (long k = 0; k <= m; ++k) d.emplace_back(p_explicit(n, k));
    for (long lvl = 1; lvl <= m; ++lvl)
      for (long i = m; i >= lvl; --i) d[size_t(i)] -= d[size_t(i) - 1];
    Poly q;
    Poly fall(1);  // x(x-1)...(x-i+1), maintained incrementally
    for (long i = 0; i <= m; ++i) {
      q = q + (d[size_t(i)] / ExactRat(factorial(i))) * fall;
      fall = fall * Poly::linear(1, -i);
    }
    p.push_back(q);
  }
  return PSequence(std::move(p));
}

PSequence p_via_homogeneous(int max_n) {
  if (max_n < 1) throw std::domain_error("p_via_homogeneous: need max_n >= 1");
  std::vector<Poly> p{Poly(1), Poly(1)};
  for (int n = 3; n <= max_n; ++n) {
    const Poly& prev = p[size_t(n) - 2];
    long m = (n - 1) / 2;
    std::vector<ExactRat> c(size_t(m) + 1, ExactRat(0));
    Poly resid;
    if (n % 2 == 1) {
      // P(x) - P(x-1) = n P_{n-1}(x): each x^j contributes a degree-(j-1)
      // difference bracket with leading coefficient j; the constant term is
      // invisible to the operator and comes from the closed-form value at 0
      resid = ExactRat(n) * prev;
      for (long j = m; j >= 1; --j) {
        Poly bracket = monomial(j) - monomial(j).shift(-1);
        ExactRat cj = resid.coeff(int(j - 1)) / ExactRat(j);
        c[size_t(j)] = cj;
        resid = resid - cj * bracket;
      }
      if (!resid.is_zero()) throw SequenceError(n, "difference solve left a residual");
      c[0] = ExactRat(p_at_zero(n));
    } else {
      // (2x+n-1) P(x) - (2x+n-2) P(x-1) = (n/2) P_{n-1}(x): bracket of x^j
      // has degree j with leading coefficient 2j+1, so the system is
      // triangular and determined -- no anchor needed
      resid = make_rat(n, 2) * prev;
      for (long j = m; j >= 0; --j) {
        Poly bracket =
            Poly::linear(2, n - 1) * monomial(j) - Poly::linear(2, n - 2) * monomial(j).shift(-1);
        ExactRat cj = resid.coeff(int(j)) / ExactRat(2 * j + 1);
        c[size_t(j)] = cj;
        resid = resid - cj * bracket;
      }
      if (!resid.is_zero()) throw SequenceError(n, "triangular solve left a residual");
    }
    p.push_back(Poly(std::move(c)));
  }
  p.resize(size_t(max_n), Poly(1));
  return PSequence(std::move(p));
}

std::vector<IdentityCheck> check_p_relations(const PSequence& seq) {
  const int N = seq.max_n();
  std::vector<IdentityCheck> out;

  {  // 8.1: cross-parity step; even branch checked in multiplied-out form
    Sweep s("8.1", 3, N);
    for (int n = 3; n <= N; ++n) {
      const Poly& pn = seq.at(n);
      const Poly& pm = seq.at(n - 1);
      if (n % 2 == 1)
        s.add(n, 0, pn,
              ExactRat(2) * (Poly::linear(1, n - 1) * pm) + prod_linear(0, (n - 1) / 2 - 1));
      else
        s.add(n, 0, Poly::linear(2, n - 1) * pn,
              Poly::linear(1, n - 1) * pm + prod_linear(0, n / 2 - 1));
    }
    out.push_back(s.done());
  }
  {  // 8.3: one-step shift of the argument against a multiple of the value
    Sweep s("8.3", 3, N);
    for (int n = 3; n <= N; ++n) {
      const Poly& pn = seq.at(n);
      Poly lhs_mul = (n % 2 == 1) ? Poly::linear(2, n) : Poly::linear(2, n + 1);
      Poly rhs = ExactRat(2) * (Poly::linear(1, n) * pn);
      if (n % 2 == 1)
        rhs = rhs - ExactRat(n) * prod_linear(1, (n - 1) / 2);
      else
        rhs = rhs - make_rat(n, 2) * prod_linear(1, n / 2 - 1);
      s.add(n, 0, lhs_mul * pn.shift(1), rhs);
    }
    out.push_back(s.done());
  }
  {  // 8.7: homogeneous odd-n relation
    Sweep s("8.7", 3, N);
    for (int n = 3; n <= N; n += 2)
      s.add(n, 0, seq.at(n), seq.at(n).shift(-1) + ExactRat(n) * seq.at(n - 1));
    out.push_back(s.done());
  }
  {  // 8.8: homogeneous even-n relation
    Sweep s("8.8", 4, N);
    for (int n = 4; n <= N; n += 2)
      s.add(n, 0, Poly::linear(2, n - 1) * seq.at(n),
            Poly::linear(2, n - 2) * seq.at(n).shift(-1) + make_rat(n, 2) * seq.at(n - 1));
    out.push_back(s.done());
  }
  {  // 8.11: even n against the shifted predecessor
    Sweep s("8.11", 4, N);
    for (int n = 4; n <= N; n += 2)
      s.add(n, 0, ExactRat(2) * seq.at(n), seq.at(n - 1).shift(1) + prod_linear(1, n / 2 - 1));
    out.push_back(s.done());
  }
  {  // 8.12: odd n against the shifted predecessor
    Sweep s("8.12", 3, N);
    for (int n = 3; n <= N; n += 2)
      s.add(n, 0, seq.at(n),
            Poly::linear(2, n) * seq.at(n - 1).shift(1) + prod_linear(1, (n - 1) / 2));
    out.push_back(s.done());
  }
  return out;
}

std::vector<IdentityCheck> check_congruences(const PSequence& seq, long k_max) {
  const int N = seq.max_n();
  std::vector<IdentityCheck> out;

  long top_odd = (N % 2 == 1) ? N : N - 1;
  long k_hi = std::max((top_odd - 1) / 2 + 2, k_max);
  {  // 8.13 and 8.14 share the value grid: odd n, k up to max(deg + 2, k_max)
    Sweep s13("8.13", 3, N, 0, k_hi);
    Sweep s14("8.14", 3, N, 1, k_hi);
    for (int n = 3; n <= N; n += 2) {
      const Poly& pn = seq.at(n);
      const Poly& pm = seq.at(n - 1);
      ExactInt p0 = to_int(pn.eval(ExactRat(0)));
      long hi = std::max(long(pn.degree()) + 2, k_max);
      ExactRat partial(0);  // running sum of P_{n-1}(1..k)
      for (long k = 0; k <= hi; ++k) {
        ExactInt pk = to_int(pn.eval(ExactRat(k)));
        s13.add_mod(n, k, pk, p0, n);
        if (k >= 1) {
          partial += pm.eval(ExactRat(k));
          s14.add(n, k, partial, ExactRat(ExactInt(pk - p0)) / ExactRat(n));
        }
      }
    }
    out.push_back(s13.done());
    out.push_back(s14.done());
  }
  {  // 9.10: coefficient of x^{m-i} has the parity of the matching
    //  coefficient of (4x+3n-4) times the stacked linear product (halved
    //  for even n); the k slot of the grid carries i
    Sweep s("9.10", 3, N, 0, (top_odd - 1) / 2);
    for (int n = 3; n <= N; ++n) {
      const Poly& pn = seq.at(n);
      long m = (n - 1) / 2;
      Poly prod = Poly::linear(4, 3 * n - 4) *
                  prod_linear(0, (n % 2 == 0) ? (n - 4) / 2 : (n - 3) / 2);
      if (n % 2 == 0) prod = make_rat(1, 2) * prod;
      for (long i = 0; i <= m; ++i)
        s.add_mod(n, i, to_int(pn.coeff(int(m - i))), to_int(prod.coeff(int(m - i))), 2);
    }
    out.push_back(s.done());
  }
  return out;
}

std::vector<IdentityCheck> check_modp(long n_max) {
  std::vector<IdentityCheck> out;

  {  // 10.6: T_n(k) vanishes mod every prime p = n+2k-1-2r, r <= (k-1)/2,
    //  for even n; only prime-shaped triples are counted
    long n_even_top = (n_max % 2 == 0) ? n_max : n_max - 1;
    Sweep s("10.6", 4, n_max, 2, std::max((n_even_top - 1) / 2, 2L));
    for (long n = 4; n <= n_max; n += 2)
      for (long k = 2; k <= (n - 1) / 2; ++k) {
        ExactInt t = t_nk(n, k);
        for (long r = 0; r <= (k - 1) / 2; ++r) {
          long p = n + 2 * k - 1 - 2 * r;
          if (is_prime(static_cast<unsigned long>(p))) s.add_mod(n, k, t, ExactInt(0), p);
        }
      }
    out.push_back(s.done());
  }
  {  // 10.8: sum C(k+j-1, j) 2^{-j} = 2^{2k-2r-2} sum (-1)^j C(k-2r-1, j) 2^{-j};
    //  grid is (k, r), stored in the (n, k) slots
    Sweep s("10.8", 1, 30, 0, 14);
    for (long k = 1; k <= 30; ++k) {
      ExactRat lhs(0);
      for (long j = 0; j < k; ++j) lhs += make_rat(binomial(k + j - 1, j), pow2(j));
      for (long r = 0; r <= (k - 1) / 2; ++r) {
        ExactRat rhs(0);
        for (long j = 0; j < k; ++j) {
          ExactRat term = make_rat(binomial(k - 2 * r - 1, j), pow2(j));
          rhs += (j % 2 == 0) ? term : ExactRat(-term);
        }
        rhs *= ExactRat(pow2(2 * k - 2 * r - 2));
        s.add(k, r, lhs, rhs);
      }
    }
    out.push_back(s.done());
  }
  return out;
}

}  // namespace polyseq
