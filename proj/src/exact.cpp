#include "polyseq/exact.hpp"

#include <cassert>
#include <utility>

namespace polyseq {

ExactRat make_rat(const ExactInt& num, const ExactInt& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  ExactRat q(num, den);
  q.canonicalize();
  return q;
}

ExactInt to_int(const ExactRat& q) {
  if (!is_integer(q)) throw std::domain_error("to_int: " + q.get_str() + " is not an integer");
  return q.get_num();
}

ExactInt binomial(const ExactInt& n, const ExactInt& k) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  if (n < 0 || k > n) return 0;
  if (!k.fits_ulong_p()) throw std::overflow_error("binomial: k too large");
  ExactInt r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k.get_ui());
  return r;
}

ExactInt binomial(long n, long k) { return binomial(ExactInt(n), ExactInt(k)); }

ExactInt factorial(long n) {
  if (n < -1) throw std::domain_error("factorial: n < -1");
  if (n <= 0) return 1;
  ExactInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

ExactInt double_factorial(long n) {
  if (n < -1) throw std::domain_error("double_factorial: n < -1");
  if (n <= 0) return 1;
  ExactInt r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

ExactRat falling_factorial(const ExactRat& x, long k) {
  if (k < 0) throw std::domain_error("falling_factorial: k < 0");
  ExactRat r(1);
  for (long j = 0; j < k; ++j) r *= x - ExactRat(j);
  return r;
}

ExactInt falling_factorial(const ExactInt& x, long k) {
  if (k < 0) throw std::domain_error("falling_factorial: k < 0");
  ExactInt r(1);
  for (long j = 0; j < k; ++j) r *= x - j;
  return r;
}

ExactInt stirling2(long n, long m) {
  if (n < 0 || m < 0) throw std::domain_error("stirling2: negative argument");
  if (m > n) return 0;
  if (n == 0) return 1;  // S(0,0)
  if (m == 0) return 0;
  // row-by-row via S(r,c) = c*S(r-1,c) + S(r-1,c-1), keeping only columns <= m
  std::vector<ExactInt> row(static_cast<size_t>(m) + 1, 0);
  row[0] = 1;  // row for r = 0
  for (long r = 1; r <= n; ++r) {
    long hi = std::min(r, m);
    for (long c = hi; c >= 1; --c) row[c] = c * row[c] + row[c - 1];
    row[0] = 0;
  }
  return row[m];
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (unsigned long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Poly::Poly(const ExactRat& c) {
  if (c != 0) coeffs_.push_back(c);
}

Poly::Poly(std::vector<ExactRat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly Poly::x() { return Poly(std::vector<ExactRat>{ExactRat(0), ExactRat(1)}); }

Poly Poly::linear(const ExactRat& a, const ExactRat& b) {
  return Poly(std::vector<ExactRat>{b, a});
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ExactRat Poly::coeff(int i) const {
  if (i < 0 || i >= int(coeffs_.size())) return ExactRat(0);
  return coeffs_[static_cast<size_t>(i)];
}

const ExactRat& Poly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading: zero polynomial");
  return coeffs_.back();
}

ExactRat Poly::eval(const ExactRat& x) const {
  ExactRat acc(0);
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

Poly Poly::shift(const ExactRat& delta) const {
  // Horner in (x + delta): acc = acc*(x + delta) + c_i, highest first.
  std::vector<ExactRat> acc;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    acc.insert(acc.begin(), ExactRat(0));          // acc *= x
    for (size_t j = 0; j + 1 < acc.size(); ++j)    // acc += delta * (acc >> 1)
      acc[j] += delta * acc[j + 1];
    acc[0] += coeffs_[i];
  }
  return Poly(std::move(acc));
}

bool Poly::is_integral() const {
  for (const auto& c : coeffs_)
    if (!is_integer(c)) return false;
  return true;
}

ExactInt Poly::content() const {
  if (coeffs_.empty()) throw std::domain_error("content: zero polynomial");
  ExactInt g(0);
  for (const auto& c : coeffs_) {
    if (!is_integer(c)) throw std::domain_error("content: non-integral polynomial");
    g = gcd(g, c.get_num());
  }
  return abs(g);
}

std::string Poly::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    ExactRat c = coeff(i);
    if (c == 0) continue;
    std::string mag = ExactRat(abs(c)).get_str();
    if (out.empty())
      out += (c < 0) ? "-" : "";
    else
      out += (c < 0) ? "-" : "+";
    if (i == 0) {
      out += mag;
    } else {
      if (mag != "1") out += mag;
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<ExactRat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), ExactRat(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator-(const Poly& a) {
  std::vector<ExactRat> c(a.coeffs_);
  for (auto& ci : c) ci = -ci;
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<ExactRat> c(a.coeffs_.size() + b.coeffs_.size() - 1, ExactRat(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly(std::move(c));
}

Poly operator*(const ExactRat& c, const Poly& p) {
  if (c == 0) return Poly();
  std::vector<ExactRat> r(p.coeffs_);
  for (auto& ri : r) ri *= c;
  return Poly(std::move(r));
}

bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

Poly exact_div(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::invalid_argument("exact_div: zero divisor");
  if (num.is_zero()) return Poly();
  if (num.degree() < den.degree())
    throw NonZeroRemainder("exact_div: deg(" + num.str() + ") < deg(" + den.str() + ")");
  std::vector<ExactRat> rem(num.coeffs());
  std::vector<ExactRat> q(rem.size() - den.coeffs().size() + 1, ExactRat(0));
  const auto& d = den.coeffs();
  for (size_t i = q.size(); i-- > 0;) {
    ExactRat f = rem[i + d.size() - 1] / d.back();
    q[i] = f;
    if (f == 0) continue;
    for (size_t j = 0; j < d.size(); ++j) rem[i + j] -= f * d[j];
  }
  for (const auto& r : rem)
    if (r != 0)
      throw NonZeroRemainder("exact_div: " + den.str() + " does not divide " + num.str());
  return Poly(std::move(q));
}

Poly prod_linear(long lo, long hi) {
  Poly p(1);
  for (long j = lo; j <= hi; ++j) p = p * Poly::linear(ExactRat(1), ExactRat(j));
  return p;
}

}  // namespace polyseq
