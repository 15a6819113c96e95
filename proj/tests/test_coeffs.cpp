// Binomial-basis expansion, the coefficient table with its closed forms and
// recursions, the parity-split coefficient-polynomial fits, and the Stirling
// polynomials Q_k.

#include "polyseq/coeffs.hpp"

#include <map>

#include "golden.hpp"
#include "harness.hpp"

using namespace polyseq;
using golden::poly_desc;

static std::map<std::string, IdentityCheck> by_id(const std::vector<IdentityCheck>& list) {
  std::map<std::string, IdentityCheck> m;
  for (const IdentityCheck& c : list) m[c.id] = c;
  return m;
}

static void expect_pass(const std::map<std::string, IdentityCheck>& m, const std::string& id,
                        long cases) {
  auto it = m.find(id);
  CHECK(it != m.end());
  if (it == m.end()) return;
  CHECK(it->second.pass);
  CHECK(!it->second.counterexample.has_value());
  CHECK_EQ(it->second.cases, cases);
  if (!it->second.pass && it->second.counterexample) {
    const Counterexample& ce = *it->second.counterexample;
    std::printf("  %s first mismatch at n=%ld k=%ld: %s vs %s\n", id.c_str(), ce.n, ce.k,
                ce.lhs.c_str(), ce.rhs.c_str());
  }
}

static void test_binomial_basis() {
  const auto& pw = golden::p_power();
  const auto& rows = golden::p_binomial_rows();

  // the published binomial-basis rows for the first twelve polynomials
  for (size_t idx = 0; idx < rows.size(); ++idx) {
    long n = long(idx) + 1;
    long m = (n - 1) / 2;
    BinomPoly bp = to_binomial(pw[idx], m);
    CHECK_EQ(bp.m, m);
    CHECK_EQ(bp.b.size(), size_t(m) + 1);
    bool same = true;
    for (size_t i = 0; i < bp.b.size(); ++i)
      if (bp.b[i] != rows[idx][i]) same = false;
    CHECK(same);
    CHECK_EQ(bp.to_power(), pw[idx]);
  }

  // round trip over a longer prefix
  PSequence seq = p_sequence(60);
  long bad = 0;
  for (int n = 1; n <= 60; ++n)
    if (to_binomial(seq.at(n), (n - 1) / 2).to_power() != seq.at(n)) ++bad;
  CHECK_EQ(bad, 0L);

  // m larger than the degree just pads leading zeros
  BinomPoly one = to_binomial(Poly(1), 2);
  CHECK_EQ(one.b[0], ExactInt(0));
  CHECK_EQ(one.b[1], ExactInt(0));
  CHECK_EQ(one.b[2], ExactInt(1));
  CHECK_EQ(one.to_power(), Poly(1));

  // rendering
  CHECK_EQ(to_binomial(pw[4], 2).str(), std::string("10C(x,2)+30C(x,1)+32"));
  CHECK_EQ(to_binomial(pw[2], 1).str(), std::string("3C(x,1)+4"));
  CHECK_EQ(to_binomial(pw[0], 0).str(), std::string("1"));
  CHECK_EQ(to_binomial(poly_desc({1, -1}), 1).str(), std::string("C(x,1)-1"));
  CHECK_EQ(to_binomial(Poly(0), 0).str(), std::string("0"));

  CHECK_THROWS(std::domain_error, to_binomial(pw[4], 1));           // degree 2 > m
  CHECK_THROWS(std::domain_error, to_binomial(Poly(1), -1));        // negative m
  CHECK_THROWS(std::domain_error,
               to_binomial(make_rat(1, 2) * Poly::x(), 1));         // p(1) = 1/2
}

static void test_coeff_table(const CoeffTable& tbl) {
  CHECK_EQ(tbl.max_n(), 100);
  CHECK_EQ(tbl.m_of(7), 3L);
  CHECK_EQ(tbl.m_of(12), 5L);

  // spot values against the published listings
  CHECK_EQ(tbl.a(7, 0), ExactInt(7));
  CHECK_EQ(tbl.a(7, 1), ExactInt(77));
  CHECK_EQ(tbl.a(12, 1), ExactInt(200));
  CHECK_EQ(tbl.b(7, 0), ExactInt(42));
  CHECK_EQ(tbl.b(7, 1), ExactInt(196));
  CHECK_EQ(tbl.b(9, 1), ExactInt(1368));
  CHECK_EQ(tbl.b(5, 2), ExactInt(32));  // constant column equals the value at 0

  // full rows for every published n
  const auto& pw = golden::p_power();
  const auto& rows = golden::p_binomial_rows();
  long bad = 0;
  for (long n = 1; n <= 12; ++n) {
    long m = tbl.m_of(n);
    for (long i = 0; i <= m; ++i) {
      if (ExactRat(tbl.a(n, i)) != pw[size_t(n - 1)].coeff(int(m - i))) ++bad;
      if (tbl.b(n, i) != rows[size_t(n - 1)][size_t(i)]) ++bad;
    }
  }
  CHECK_EQ(bad, 0L);

  CHECK_THROWS(std::out_of_range, tbl.a(101, 0));
  CHECK_THROWS(std::out_of_range, tbl.a(3, 5));
  CHECK_THROWS(std::out_of_range, tbl.b(0, 0));
}

static void test_a_formulas(const CoeffTable& tbl) {
  // the odd-n recursion at n=7, i=1: 2*77 = 7*19 + C(3,1)*7
  CHECK_EQ(ExactInt(2 * tbl.a(7, 1)), ExactInt(7 * tbl.a(6, 1) + binomial(3, 1) * tbl.a(7, 0)));
  // the even-n recursion at n=6, i=1 carries a minus sign: 3*19 = 3*25 - 18
  CHECK_EQ(ExactInt(3 * tbl.a(6, 1)),
           ExactInt(3 * tbl.a(5, 1) - 2 * (2 * binomial(2, 1) - binomial(2, 0)) * tbl.a(6, 0)));

  auto m = by_id(check_a_formulas(tbl));
  CHECK_EQ(m.size(), size_t(4));
  expect_pass(m, "9.2", 100);
  expect_pass(m, "9.3", 98);
  expect_pass(m, "9.11", 1225);
  expect_pass(m, "9.12", 1274);
}

static void test_b_formulas(const CoeffTable& tbl) {
  // cross-parity steps read off the published rows
  CHECK_EQ(tbl.b(9, 1), ExactInt(9 * (tbl.b(8, 1) + tbl.b(8, 0))));              // 1368 = 9*152
  CHECK_EQ(ExactInt(2 * tbl.b(10, 1)),
           ExactInt(tbl.b(9, 1) + tbl.b(9, 0) + factorial(4) * binomial(4, 1)));  // 1680
  for (long j = 0; j + 1 <= tbl.m_of(9); ++j) CHECK_EQ(ExactInt(tbl.b(9, j) % 9), ExactInt(0));

  auto m = by_id(check_b_formulas(tbl));
  CHECK_EQ(m.size(), size_t(6));
  expect_pass(m, "12.5", 100);
  expect_pass(m, "12.6", 98);
  expect_pass(m, "12.12", 2550);
  expect_pass(m, "12.13", 1176);
  expect_pass(m, "12.14", 1176);
  expect_pass(m, "12.div", 1225);
}

static void test_lagrange() {
  // values 1, 3, 7 have second difference 2: the interpolant is x^2 + x + 1
  Poly q = lagrange({{ExactRat(0), ExactRat(1)}, {ExactRat(1), ExactRat(3)},
                     {ExactRat(2), ExactRat(7)}});
  CHECK_EQ(q, poly_desc({1, 1, 1}));
  CHECK_EQ(lagrange({{ExactRat(5), ExactRat(3)}}), Poly(3));
  CHECK_EQ(lagrange({{make_rat(1, 2), ExactRat(0)}, {ExactRat(1), ExactRat(1)}}),
           Poly::linear(2, -1));

  CHECK_THROWS(std::domain_error, lagrange({}));
  CHECK_THROWS(std::domain_error,
               lagrange({{ExactRat(1), ExactRat(1)}, {ExactRat(1), ExactRat(2)}}));
}

static void test_fits(const PSequence& seq) {
  const auto& u = golden::u_list();
  const auto& v = golden::v_list();
  const auto& y = golden::y_list();
  const auto& z = golden::z_list();
  for (long i = 0; i <= 3; ++i) {
    CHECK_EQ(fit_coeff_poly(i, Parity::odd, CoeffBasis::power, seq), u[size_t(i)]);
    CHECK_EQ(fit_coeff_poly(i, Parity::even, CoeffBasis::power, seq), v[size_t(i)]);
    CHECK_EQ(fit_coeff_poly(i, Parity::odd, CoeffBasis::binomial, seq), y[size_t(i)]);
    CHECK_EQ(fit_coeff_poly(i, Parity::even, CoeffBasis::binomial, seq), z[size_t(i)]);
  }

  // beyond the published range the fit still closes on its holdouts
  for (long i = 4; i <= 5; ++i)
    for (Parity par : {Parity::odd, Parity::even})
      for (CoeffBasis basis : {CoeffBasis::power, CoeffBasis::binomial})
        CHECK_EQ(fit_coeff_poly(i, par, basis, seq).degree(), int(2 * i + 1));

  CHECK_THROWS(InsufficientSamples,
               fit_coeff_poly(3, Parity::odd, CoeffBasis::power, p_sequence(12)));
  CHECK_THROWS(std::domain_error, fit_coeff_poly(-1, Parity::odd, CoeffBasis::power, seq));
}

static void test_q_polys() {
  const auto& q = golden::q_list();
  for (long k = 0; k <= 4; ++k) {
    QPoly qp = q_poly(k);
    CHECK_EQ(qp.k, k);
    CHECK_EQ(qp.poly, q[size_t(k)]);
  }

  // Q_k interpolates the Stirling numbers well past its degree
  long bad = 0;
  for (long k = 0; k <= 8; ++k) {
    Poly qk = q_poly(k).poly;
    for (long j = 0; j <= 2 * k + 3; ++j)
      if (qk.eval(ExactRat(j)) != ExactRat(stirling2(j + k, j))) ++bad;
  }
  CHECK_EQ(bad, 0L);

  // denominators match the predicted prime-power product
  const long dens[5] = {1, 2, 24, 48, 5760};
  for (long k = 0; k <= 4; ++k) CHECK_EQ(q_denominator(k), ExactInt(dens[k]));
  for (long k = 0; k <= 8; ++k) CHECK_EQ(denominator_lcm(q_poly(k).poly), q_denominator(k));

  // the same polynomial falls out of plain interpolation through 2k+1 nodes
  for (long k = 0; k <= 6; ++k) {
    std::vector<std::pair<ExactRat, ExactRat>> nodes;
    for (long j = 0; j <= 2 * k; ++j) nodes.emplace_back(ExactRat(j), ExactRat(stirling2(j + k, j)));
    CHECK_EQ(lagrange(nodes), q_poly(k).poly);
  }

  CHECK_EQ(denominator_lcm(Poly(0)), ExactInt(1));
  CHECK_EQ(denominator_lcm(poly_desc({3, 4})), ExactInt(1));
  CHECK_THROWS(std::domain_error, q_poly(-1));
  CHECK_THROWS(std::domain_error, q_denominator(-1));
}

int main() {
  test_binomial_basis();
  test_lagrange();
  test_q_polys();

  PSequence seq = p_sequence(100);
  CoeffTable tbl(seq);
  test_coeff_table(tbl);
  test_a_formulas(tbl);
  test_b_formulas(tbl);
  test_fits(seq);

  return harness::summary("coeffs");
}
