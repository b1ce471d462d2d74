#pragma once

// Twisted Riemann-Roch arithmetic on curves and the numerical-polynomial
// identities behind index bounds on higher-dimensional twisted sheaves:
// Euler characteristics chi = deg + rank(1 - g), alternating binomial sums
// extracting t! times the leading coefficient of a degree-t Hilbert
// polynomial, twisted Fourier-Mukai ranks n^g on g-dimensional abelian
// varieties, and the period-index bound ind | per^g.

#include "brauer/numeric.hpp"

#include <vector>

namespace brauer {

// Exact-rational polynomial in one variable, monomial basis, degree <= 12.
// "Numerical" polynomials (integer-valued on all integers) are exactly the
// Z-span of the binomial coefficients C(m, j); is_integer_valued() decides
// membership exactly via the finite-difference (binomial basis) expansion.
class NumericalPolynomial {
 public:
  static constexpr unsigned kMaxDegree = 12;

  NumericalPolynomial() = default;
  // Coefficients ascending: coeffs[j] multiplies m^j.
  explicit NumericalPolynomial(std::vector<Rat> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat lead() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

  Rat eval(const Int& m) const;

  // c[j] = (Delta^j chi)(0), the coordinates of chi in the binomial basis:
  // chi(m) = sum_j c[j] * C(m, j).
  std::vector<Rat> binomial_basis() const;

  bool is_integer_valued() const;

  friend bool operator==(const NumericalPolynomial&,
                         const NumericalPolynomial&) = default;

 private:
  std::vector<Rat> coeffs_;  // trailing zeros trimmed; empty == zero
};

// A twisted sheaf on a smooth projective curve of genus g, reduced to the
// three numbers Riemann-Roch needs.
struct RRInput {
  Int deg;
  Int rank;   // >= 1
  Int genus;  // >= 0

  RRInput(Int deg, Int rank, Int genus);
};

// chi(F) = deg(F) + rank(F) * (1 - g).
Int twisted_euler_char(const RRInput& input);

// sum_{j=0}^{t} (-1)^j C(t, j) chi(m + t - j): the t-th finite difference of
// chi at m.  Equals t! * lead(chi) for every m when deg(chi) = t, and 0 when
// deg(chi) < t.  Requires 1 <= t <= kMaxDegree.
Rat alternating_binomial_sum(const NumericalPolynomial& chi, unsigned t,
                             const Int& m);

// t! * leading coefficient; requires deg(chi) == t (std::invalid_argument
// otherwise, so callers cannot silently extract the wrong normalization).
Rat leading_coefficient_times_factorial(const NumericalPolynomial& chi,
                                        unsigned t);

// Rank of the twisted Fourier-Mukai transform of a 1-dimensional twisted
// sheaf on a g-dimensional abelian variety with n-torsion period: n^g
// (its square n^{2g} counts the n-torsion points).
Int fm_twisted_rank(unsigned g, const Int& n);

// Whether ind | per^g.  odd_order records which period the caller measured
// (the odd-order refinement has the same shape); it does not change the
// arithmetic.
bool period_index_bound_check(const Int& per, const Int& ind, unsigned g,
                              bool odd_order);

}  // namespace brauer
