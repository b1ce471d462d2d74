#pragma once

// Elements of Q/Z in canonical form, with the group and divisibility
// operations the rest of the library is built on.  For a local field k the
// invariant map identifies Br(k) with Q/Z, and the index of a class equals
// the order of its invariant, so all local Brauer arithmetic reduces to the
// operations in this header.

#include "brauer/numeric.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace brauer {

// num/den with 0 <= num < den and gcd(num, den) = 1; the zero class is 0/1.
// Construction normalizes any integer pair (negative values wrap mod 1).
class Invariant {
 public:
  Invariant() : num_(0), den_(1) {}
  Invariant(Int num, Int den);

  // Accepts "num/den" or a bare integer (which is 0 in Q/Z).
  static Invariant parse(std::string_view text);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  // Canonical form, always "num/den" (the zero class prints as "0/1").
  std::string str() const;

  friend bool operator==(const Invariant&, const Invariant&) = default;
  friend bool operator<(const Invariant& a, const Invariant& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }

 private:
  Int num_;
  Int den_;
};

std::ostream& operator<<(std::ostream& os, const Invariant& a);

Invariant add(const Invariant& a, const Invariant& b);
Invariant negate(const Invariant& a);

// n-fold sum a + ... + a; n may be zero or negative.
Invariant scale(const Invariant& a, const Int& n);

// Order of a in Q/Z.  For a local Brauer class this is the index (= period).
Int order(const Invariant& a);

// Whether a and b generate the same cyclic subgroup of Q/Z.  Q/Z has exactly
// one subgroup of each finite order, and a canonical num/den generates the
// full order-den subgroup, so this is an order comparison.
bool same_cyclic_subgroup(const Invariant& a, const Invariant& b);

// p-primary component of a: the unique x/p^e (e = v_p(den)) with
// a = x/p^e + (prime-to-p part).  Summing over primes dividing den
// reconstructs a.  Throws std::domain_error if p is not prime.
Invariant primary_part(const Invariant& a, const Int& p);

// A cyclic subgroup of Q/Z named by a generator; descriptors compare equal
// exactly when they describe the same subgroup.
struct CyclicSubgroupDescriptor {
  Invariant generator;

  Int subgroup_order() const { return order(generator); }

  friend bool operator==(const CyclicSubgroupDescriptor& a,
                         const CyclicSubgroupDescriptor& b) {
    return same_cyclic_subgroup(a.generator, b.generator);
  }
};

}  // namespace brauer
