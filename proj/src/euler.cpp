#include "brauer/euler.hpp"

namespace brauer {

NumericalPolynomial::NumericalPolynomial(std::vector<Rat> coeffs)
    : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.size() > kMaxDegree + 1) {
    throw std::invalid_argument("NumericalPolynomial: degree exceeds " +
                                std::to_string(kMaxDegree));
  }
}

Rat NumericalPolynomial::eval(const Int& m) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * Rat(m) + *it;
  }
  return acc;
}

std::vector<Rat> NumericalPolynomial::binomial_basis() const {
  int t = degree();
  if (t < 0) return {};
  // Forward-difference table at 0: after pass j, vals[k] holds
  // (Delta^j chi)(k - j) for k >= j, so vals[j] = (Delta^j chi)(0).
  std::vector<Rat> vals;
  vals.reserve(t + 1);
  for (int s = 0; s <= t; ++s) vals.push_back(eval(s));
  std::vector<Rat> out;
  out.reserve(t + 1);
  out.push_back(vals[0]);
  for (int j = 1; j <= t; ++j) {
    for (int k = t; k >= j; --k) vals[k] -= vals[k - 1];
    out.push_back(vals[j]);
  }
  return out;
}

bool NumericalPolynomial::is_integer_valued() const {
  for (const Rat& c : binomial_basis()) {
    if (denominator(c) != 1) return false;
  }
  return true;
}

RRInput::RRInput(Int deg_, Int rank_, Int genus_)
    : deg(std::move(deg_)), rank(std::move(rank_)), genus(std::move(genus_)) {
  if (rank < 1) throw std::invalid_argument("RRInput: rank must be positive");
  if (genus < 0) {
    throw std::invalid_argument("RRInput: genus must be non-negative");
  }
}

Int twisted_euler_char(const RRInput& input) {
  return input.deg + input.rank * (1 - input.genus);
}

Rat alternating_binomial_sum(const NumericalPolynomial& chi, unsigned t,
                             const Int& m) {
  if (t < 1 || t > NumericalPolynomial::kMaxDegree) {
    throw std::invalid_argument(
        "alternating_binomial_sum: t must be in [1, " +
        std::to_string(NumericalPolynomial::kMaxDegree) + "]");
  }
  Rat acc = 0;
  for (unsigned j = 0; j <= t; ++j) {
    Rat term = Rat(binomial(t, j)) * chi.eval(m + Int(t - j));
    acc += j % 2 == 0 ? term : -term;
  }
  return acc;
}

Rat leading_coefficient_times_factorial(const NumericalPolynomial& chi,
                                        unsigned t) {
  if (chi.degree() != static_cast<int>(t)) {
    throw std::invalid_argument(
        "leading_coefficient_times_factorial: polynomial has degree " +
        std::to_string(chi.degree()) + ", not " + std::to_string(t));
  }
  return Rat(factorial(t)) * chi.lead();
}

Int fm_twisted_rank(unsigned g, const Int& n) {
  if (g < 1) throw std::invalid_argument("fm_twisted_rank: g must be positive");
  if (n < 1) throw std::invalid_argument("fm_twisted_rank: n must be positive");
  Int rank = pow_int(n, g);
  // The transform's square Euler form counts the n-torsion of the abelian
  // variety, so rank^2 must be n^{2g}; anything else is a logic error.
  if (rank * rank != pow_int(n, 2 * g)) {
    throw std::logic_error("fm_twisted_rank: rank^2 != n^(2g)");
  }
  return rank;
}

bool period_index_bound_check(const Int& per, const Int& ind, unsigned g,
                              bool odd_order) {
  (void)odd_order;  // bookkeeping only; the bound has the same shape
  if (per < 1 || ind < 1) {
    throw std::invalid_argument(
        "period_index_bound_check: per and ind must be positive");
  }
  if (g < 1) {
    throw std::invalid_argument("period_index_bound_check: g must be positive");
  }
  return pow_int(per, g) % ind == 0;
}

}  // namespace brauer
