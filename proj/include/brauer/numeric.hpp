#pragma once

// Shared exact-arithmetic carriers and small integer helpers.  Everything in
// the library computes on arbitrary-precision integers/rationals; there is no
// floating point anywhere.

#include <boost/integer/mod_inverse.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

namespace brauer {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::denominator;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::numerator;

inline Int pow_int(const Int& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

// Deterministic trial division; all primes this library meets are tiny.
inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Int d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

// v_p(x): multiplicity of the prime p in x.  Requires x != 0.
inline unsigned valuation(Int x, const Int& p) {
  if (x == 0) throw std::invalid_argument("valuation: x must be nonzero");
  if (x < 0) x = -x;
  unsigned v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

// Inverse of a modulo m for coprime a, m (m >= 1).
inline Int mod_inverse(const Int& a, const Int& m) {
  Int inv = boost::integer::mod_inverse(a, m);
  if (inv == 0 && m != 1) {
    throw std::invalid_argument("mod_inverse: arguments are not coprime");
  }
  return inv;
}

inline std::vector<Int> sorted_divisors(const Int& n) {
  if (n < 1) throw std::invalid_argument("sorted_divisors: n must be positive");
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline Int factorial(unsigned n) {
  Int f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

inline Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int c = 1;
  for (unsigned j = 1; j <= k; ++j) {
    c *= n - k + j;
    c /= j;  // exact: c is always a binomial coefficient here
  }
  return c;
}

}  // namespace brauer
