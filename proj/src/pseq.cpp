#include "polyseq/pseq.hpp"

namespace polyseq {

Poly l_poly(long n) {
  if (n < 1 || n % 2 == 0) throw std::domain_error("l_poly: subscript must be odd and >= 1");
  return prod_linear(1, (n - 1) / 2);
}

Poly p_step(long n, const Poly& p_n) {
  if (n < 1) throw std::domain_error("p_step: n must be >= 1");
  const ExactRat nr(n);
  const Poly shifted = p_n.shift(1);
  if (n % 2 == 1) {
    // 4(2x+n) P_{n+1} = 2(x+n) P_n(x) + (2x+n) P_n(x+1) + (4x+n) l_n(x)
    Poly num = ExactRat(2) * (Poly::linear(1, nr) * p_n) +
               Poly::linear(2, nr) * shifted + Poly::linear(4, nr) * l_poly(n);
    return exact_div(num, ExactRat(4) * Poly::linear(2, nr));
  }
  // 4 P_{n+1} = 4(x+n) P_n(x) + 2(2x+n+1) P_n(x+1) + (4x+n) l_{n-1}(x)
  Poly num = ExactRat(4) * (Poly::linear(1, nr) * p_n) +
             ExactRat(2) * (Poly::linear(2, nr + 1) * shifted) +
             Poly::linear(4, nr) * l_poly(n - 1);
  return make_rat(1, 4) * num;
}

PSequence::PSequence(std::vector<Poly> polys) : polys_(std::move(polys)) {
  for (size_t i = 0; i < polys_.size(); ++i) {
    long n = long(i) + 1;
    const Poly& p = polys_[i];
    if (!p.is_integral())
      throw SequenceError(n, "non-integer coefficient in " + p.str());
    if (p.degree() != (n - 1) / 2)
      throw SequenceError(n, "degree " + std::to_string(p.degree()) + " != floor((n-1)/2)");
  }
}

const Poly& PSequence::at(int n) const {
  if (n < 1 || n > max_n()) throw std::out_of_range("PSequence::at: index " + std::to_string(n));
  return polys_[size_t(n) - 1];
}

PSequence p_sequence(int max_n) {
  if (max_n < 1) throw std::domain_error("p_sequence: N must be >= 1");
  std::vector<Poly> polys{Poly(1)};
  if (max_n >= 2) polys.push_back(Poly(1));
  for (long n = 2; n < max_n; ++n) {
    try {
      polys.push_back(p_step(n, polys.back()));
    } catch (const std::exception& e) {
      throw SequenceError(n + 1, e.what());
    }
  }
  return PSequence(std::move(polys));
}

}  // namespace polyseq
