#include "brauer/qz.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <random>
#include <set>

using namespace brauer;

namespace {

// Every canonical invariant with denominator <= max_den, zero included.
std::vector<Invariant> all_invariants_up_to(long long max_den) {
  std::vector<Invariant> out;
  out.emplace_back();
  for (long long den = 2; den <= max_den; ++den) {
    for (long long num = 1; num < den; ++num) {
      if (std::gcd(num, den) == 1) out.emplace_back(num, den);
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("qz") {

TEST_CASE("construction normalizes to lowest terms in [0, 1)") {
  CHECK(Invariant(1, 2).str() == "1/2");
  CHECK(Invariant(2, 4).str() == "1/2");
  CHECK(Invariant(7, 4).str() == "3/4");
  CHECK(Invariant(-1, 4).str() == "3/4");
  CHECK(Invariant(2, -4).str() == "1/2");
  CHECK(Invariant(0, 7).str() == "0/1");
  CHECK(Invariant(12, 3).str() == "0/1");
  CHECK(Invariant().is_zero());
  CHECK_THROWS_AS(Invariant(1, 0), std::invalid_argument);
}

TEST_CASE("parse accepts num/den and bare integers") {
  CHECK(Invariant::parse("1/2") == Invariant(1, 2));
  CHECK(Invariant::parse("0/1") == Invariant());
  CHECK(Invariant::parse(" 5/6 ") == Invariant(5, 6));
  CHECK(Invariant::parse("-1/4") == Invariant(3, 4));
  CHECK(Invariant::parse("3") == Invariant());
  CHECK_THROWS_AS(Invariant::parse("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(Invariant::parse("a/2"), std::invalid_argument);
  CHECK_THROWS_AS(Invariant::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Invariant::parse("1/0"), std::invalid_argument);
}

TEST_CASE("str/parse round-trips") {
  for (const Invariant& a : all_invariants_up_to(30)) {
    CHECK(Invariant::parse(a.str()) == a);
  }
}

TEST_CASE("add on known values") {
  CHECK(add(Invariant(1, 2), Invariant(1, 2)) == Invariant());
  CHECK(add(Invariant(1, 3), Invariant(1, 2)) == Invariant(5, 6));
  CHECK(add(Invariant(2, 3), Invariant(2, 3)) == Invariant(1, 3));
  CHECK(add(Invariant(), Invariant(3, 7)) == Invariant(3, 7));
}

TEST_CASE("group laws, exhaustive for denominators <= 24") {
  const std::vector<Invariant> elems = all_invariants_up_to(24);
  const Invariant zero;
  for (const Invariant& a : elems) {
    CHECK(add(a, zero) == a);
    CHECK(add(a, negate(a)) == zero);
  }
  for (const Invariant& a : elems) {
    for (const Invariant& b : elems) {
      CHECK(add(a, b) == add(b, a));
    }
  }
  // Associativity over all triples.
  size_t bad = 0;
  for (const Invariant& a : elems) {
    for (const Invariant& b : elems) {
      const Invariant ab = add(a, b);
      for (const Invariant& c : elems) {
        if (add(ab, c) != add(a, add(b, c))) ++bad;
      }
    }
  }
  CHECK(bad == 0);
}

TEST_CASE("scale on known values, with repeated-add oracle") {
  CHECK(scale(Invariant(1, 4), 2) == Invariant(1, 2));
  CHECK(scale(Invariant(1, 4), 4) == Invariant());
  CHECK(scale(Invariant(3, 8), 6) == Invariant(1, 4));
  CHECK(scale(Invariant(3, 8), 6) == oracle::add_n_times(Invariant(3, 8), 6));
  CHECK(scale(Invariant(1, 3), -1) == Invariant(2, 3));
  CHECK(scale(Invariant(2, 5), 0) == Invariant());
  for (const Invariant& a : all_invariants_up_to(12)) {
    for (long long n = -15; n <= 15; ++n) {
      CHECK(scale(a, n) == oracle::add_n_times(a, n));
    }
  }
}

TEST_CASE("order on known values") {
  CHECK(order(Invariant()) == 1);
  CHECK(order(Invariant(1, 4)) == 4);
  CHECK(order(Invariant(5, 6)) == 6);
  CHECK(order(Invariant(2, 6)) == 3);
}

TEST_CASE("order of a scaled invariant drops by exactly the gcd") {
  // Exhaustive in a small box, then random samples across the full range.
  for (const Invariant& a : all_invariants_up_to(60)) {
    long long d = a.den().convert_to<long long>();
    for (long long n = 1; n <= 60; ++n) {
      CHECK(order(scale(a, n)) == d / std::gcd(d, n));
    }
  }
  std::mt19937_64 rng(20260816);
  std::uniform_int_distribution<long long> dist(1, 1000);
  for (int k = 0; k < 20000; ++k) {
    long long den = dist(rng);
    long long num = std::uniform_int_distribution<long long>(0, den - 1)(rng);
    long long n = dist(rng);
    Invariant a(num, den);
    long long d = a.den().convert_to<long long>();
    CHECK(order(scale(a, n)) == d / std::gcd(d, n));
  }
}

TEST_CASE("same_cyclic_subgroup on known values") {
  CHECK(same_cyclic_subgroup(Invariant(1, 5), Invariant(2, 5)));
  CHECK_FALSE(same_cyclic_subgroup(Invariant(1, 4), Invariant(1, 2)));
  CHECK(same_cyclic_subgroup(Invariant(3, 8), Invariant(5, 8)));
  CHECK(same_cyclic_subgroup(Invariant(), Invariant()));
  CHECK_FALSE(same_cyclic_subgroup(Invariant(), Invariant(1, 2)));
}

TEST_CASE("same_cyclic_subgroup matches subgroup enumeration, n <= 24") {
  // Brute force inside Z/n: <x> as an explicit element set.
  for (long long n = 1; n <= 24; ++n) {
    for (long long x = 0; x < n; ++x) {
      auto sx = oracle::cyclic_elements(x, n);
      for (long long y = 0; y < n; ++y) {
        bool expected = sx == oracle::cyclic_elements(y, n);
        CHECK(same_cyclic_subgroup(Invariant(x, n), Invariant(y, n)) ==
              expected);
      }
    }
  }
}

TEST_CASE("same_cyclic_subgroup is an equivalence relation") {
  const std::vector<Invariant> elems = all_invariants_up_to(16);
  for (const Invariant& a : elems) CHECK(same_cyclic_subgroup(a, a));
  for (const Invariant& a : elems) {
    for (const Invariant& b : elems) {
      CHECK(same_cyclic_subgroup(a, b) == same_cyclic_subgroup(b, a));
    }
  }
}

TEST_CASE("cyclic subgroup descriptors compare by subgroup") {
  CyclicSubgroupDescriptor a{Invariant(1, 6)};
  CyclicSubgroupDescriptor b{Invariant(5, 6)};
  CyclicSubgroupDescriptor c{Invariant(1, 3)};
  CHECK(a == b);
  CHECK_FALSE(a == c);
  CHECK(a.subgroup_order() == 6);
  CHECK(c.subgroup_order() == 3);
}

TEST_CASE("primary_part on known values") {
  CHECK(primary_part(Invariant(1, 6), 2) == Invariant(1, 2));
  CHECK(primary_part(Invariant(1, 6), 3) == Invariant(2, 3));
  CHECK(primary_part(Invariant(1, 6), 5) == Invariant());
  CHECK(primary_part(Invariant(), 3) == Invariant());
  // 1/6 = 1/2 + 2/3 in Q/Z.
  CHECK(add(primary_part(Invariant(1, 6), 2), primary_part(Invariant(1, 6), 3)) ==
        Invariant(1, 6));
}

TEST_CASE("primary_part rejects non-primes") {
  CHECK_THROWS_AS(primary_part(Invariant(1, 6), 4), std::domain_error);
  CHECK_THROWS_AS(primary_part(Invariant(1, 6), 1), std::domain_error);
  CHECK_THROWS_AS(primary_part(Invariant(1, 6), 6), std::domain_error);
  CHECK_THROWS_AS(primary_part(Invariant(1, 6), 0), std::domain_error);
}

TEST_CASE("primary parts sum back to the invariant") {
  auto primes_of = [](Int n) {
    std::vector<Int> ps;
    for (Int p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        ps.push_back(p);
        while (n % p == 0) n /= p;
      }
    }
    if (n > 1) ps.push_back(n);
    return ps;
  };
  auto check_reconstruction = [&](const Invariant& a) {
    Invariant sum;
    for (const Int& p : primes_of(a.den())) {
      Invariant part = primary_part(a, p);
      // Each part lives in the p-primary component, with full p-multiplicity.
      CHECK(part.den() == pow_int(p, valuation(a.den(), p)));
      sum = add(sum, part);
    }
    CHECK(sum == a);
  };
  for (const Invariant& a : all_invariants_up_to(120)) check_reconstruction(a);
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<long long> dist(1, 1000);
  for (int k = 0; k < 2000; ++k) {
    long long den = dist(rng);
    long long num = std::uniform_int_distribution<long long>(0, den - 1)(rng);
    check_reconstruction(Invariant(num, den));
  }
}

TEST_CASE("value ordering is total on canonical forms") {
  std::set<Invariant> s;
  for (const Invariant& a : all_invariants_up_to(12)) s.insert(a);
  s.insert(Invariant(1, 2));  // duplicate
  CHECK(s.size() == all_invariants_up_to(12).size());
}

}  // TEST_SUITE("qz")
