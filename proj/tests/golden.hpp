#pragma once

// Frozen reference data for the A174531 polynomial family: the published
// first-twelve listings in both bases, the R_k list, the coefficient
// polynomials U_i/V_i (power basis) and Y_i/Z_i (binomial basis), and the
// Stirling polynomials Q_k.  Everything here was transcribed once and is
// treated as the fixed point the computed results must hit exactly.

#include "polyseq/exact.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace golden {

using polyseq::ExactRat;
using polyseq::Poly;

inline ExactRat frac(long num, long den) { return polyseq::make_rat(num, den); }

// polynomial from descending-power integer coefficients, e.g. {3,4} -> 3x+4
inline Poly poly_desc(std::initializer_list<long> desc) {
  std::vector<ExactRat> asc;
  for (auto it = std::rbegin(desc); it != std::rend(desc); ++it) asc.emplace_back(*it);
  return Poly(std::move(asc));
}

// P_1..P_12, power basis (index 0 = P_1)
inline const std::vector<Poly>& p_power() {
  static const std::vector<Poly> v = {
      poly_desc({1}),
      poly_desc({1}),
      poly_desc({3, 4}),
      poly_desc({2, 4}),
      poly_desc({5, 25, 32}),
      poly_desc({3, 19, 32}),
      poly_desc({7, 77, 294, 384}),
      poly_desc({4, 52, 240, 384}),
      poly_desc({9, 174, 1323, 4614, 6144}),
      poly_desc({5, 110, 967, 3934, 6144}),
      poly_desc({11, 330, 4169, 27258, 90992, 122880}),
      poly_desc({6, 200, 2842, 21040, 79832, 122880}),
  };
  return v;
}

// P_1..P_12, binomial-basis rows, highest order first: row i multiplies C(x, m-i)
inline const std::vector<std::vector<long>>& p_binomial_rows() {
  static const std::vector<std::vector<long>> v = {
      {1},
      {1},
      {3, 4},
      {2, 4},
      {10, 30, 32},
      {6, 22, 32},
      {42, 196, 378, 384},
      {24, 128, 296, 384},
      {216, 1368, 3816, 6120, 6144},
      {120, 840, 2664, 5016, 6144},
      {1320, 10560, 38544, 84480, 122760, 122880},
      // the published row for n=12 starts with 760, but that contradicts both
      // closed forms for the top coefficient -- (n/2)! = 6! = 720 and
      // a_0 * m! = 6 * 5! -- and the expansion of the power-basis listing, so
      // the consistent value 720 is frozen here
      {720, 6240, 25152, 62112, 103920, 122880},
  };
  return v;
}

// R_1..R_6 as polynomials in n (index 0 = R_1)
inline const std::vector<Poly>& r_list() {
  static const std::vector<Poly> v = {
      poly_desc({1}),
      poly_desc({1, 4}),
      poly_desc({1, 11, 32}),
      poly_desc({1, 21, 152, 384}),
      poly_desc({1, 34, 443, 2642, 6144}),
      poly_desc({1, 50, 1015, 10510, 55864, 122880}),
  };
  return v;
}

// power-basis coefficient polynomials a_i(n): U_i for odd n, V_i for even n
inline const std::vector<Poly>& u_list() {
  static const std::vector<Poly> v = [] {
    Poly n = Poly::x();
    std::vector<Poly> u;
    u.push_back(n);
    u.push_back(frac(1, 24) * (poly_desc({1, -1}) * n * poly_desc({7, -5})));
    u.push_back(frac(1, 640) *
                (poly_desc({1, -3}) * poly_desc({1, -1}) * n * poly_desc({29, -44, 7})));
    u.push_back(frac(1, 322560) * (poly_desc({1, -5}) * poly_desc({1, -3}) *
                                   poly_desc({1, -1}) * n *
                                   poly_desc({1581, -3775, 1587, 223})));
    return u;
  }();
  return v;
}

inline const std::vector<Poly>& v_list() {
  static const std::vector<Poly> v = [] {
    Poly n = Poly::x();
    std::vector<Poly> w;
    w.push_back(frac(1, 2) * n);
    w.push_back(frac(1, 48) * (poly_desc({1, -2}) * n * poly_desc({7, -4})));
    w.push_back(frac(1, 3840) *
                (poly_desc({1, -4}) * poly_desc({1, -2}) * n * poly_desc({87, -98, 16})));
    w.push_back(frac(1, 645120) * (poly_desc({1, -6}) * poly_desc({1, -4}) *
                                   poly_desc({1, -2}) * n *
                                   poly_desc({1581, -2686, 936, 64})));
    return w;
  }();
  return v;
}

// binomial-basis coefficient polynomials b_i(n)/(m-i)!: Y_i odd, Z_i even
inline const std::vector<Poly>& y_list() {
  static const std::vector<Poly> v = [] {
    Poly n = Poly::x();
    std::vector<Poly> y;
    y.push_back(n);
    y.push_back(frac(1, 12) * (poly_desc({1, -1}) * n * poly_desc({5, -7})));
    y.push_back(frac(1, 480) *
                (poly_desc({1, -3}) * poly_desc({1, -1}) * n * poly_desc({43, -168, 149})));
    y.push_back(frac(1, 13440) * (poly_desc({1, -5}) * poly_desc({1, -3}) *
                                  poly_desc({1, -1}) * n *
                                  poly_desc({177, -1319, 3063, -2161})));
    return y;
  }();
  return v;
}

inline const std::vector<Poly>& z_list() {
  static const std::vector<Poly> v = [] {
    Poly n = Poly::x();
    std::vector<Poly> z;
    z.push_back(frac(1, 2) * n);
    z.push_back(frac(1, 24) * (poly_desc({1, -2}) * n * poly_desc({5, -8})));
    z.push_back(frac(1, 960) *
                (poly_desc({1, -4}) * poly_desc({1, -2}) * n * poly_desc({43, -182, 184})));
    z.push_back(frac(1, 26880) * (poly_desc({1, -6}) * poly_desc({1, -4}) *
                                  poly_desc({1, -2}) * n * poly_desc({3, -8}) *
                                  poly_desc({59, -306, 352})));
    return z;
  }();
  return v;
}

// Stirling polynomials Q_0..Q_4, Q_k(n) = S(n+k, n)
inline const std::vector<Poly>& q_list() {
  static const std::vector<Poly> v = [] {
    Poly n = Poly::x();
    std::vector<Poly> q;
    q.push_back(Poly(1));
    q.push_back(frac(1, 2) * (n * poly_desc({1, 1})));
    q.push_back(frac(1, 24) * (n * poly_desc({1, 1}) * poly_desc({1, 2}) * poly_desc({3, 1})));
    q.push_back(frac(1, 48) * (n * n * poly_desc({1, 1}) * poly_desc({1, 1}) *
                               poly_desc({1, 2}) * poly_desc({1, 3})));
    q.push_back(frac(1, 5760) * (n * poly_desc({1, 1}) * poly_desc({1, 2}) *
                                 poly_desc({1, 3}) * poly_desc({1, 4}) *
                                 poly_desc({15, 30, 5, -2})));
    return q;
  }();
  return v;
}

}  // namespace golden
