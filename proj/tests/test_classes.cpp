#include "brauer/classes.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace brauer;

TEST_SUITE("classes") {

TEST_CASE("local index is the order of the invariant") {
  CHECK(local_index(LocalClass{Invariant(1, 4)}) == 4);
  CHECK(local_index(LocalClass{Invariant(2, 6)}) == 3);
  CHECK(local_index(LocalClass{Invariant()}) == 1);
}

TEST_CASE("local extensions validate their shape") {
  CHECK(LocalExtension(Int(3)).degree() == 3);
  CHECK_FALSE(LocalExtension(Int(3)).ramification().has_value());
  LocalExtension ext(6, 2, 3);
  REQUIRE(ext.ramification().has_value());
  CHECK(ext.ramification()->first == 2);
  CHECK(ext.ramification()->second == 3);
  CHECK_THROWS_AS(LocalExtension(Int(0)), std::invalid_argument);
  CHECK_THROWS_AS(LocalExtension(6, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(LocalExtension(6, 0, 6), std::invalid_argument);
}

TEST_CASE("restrict_local scales the invariant by the degree") {
  LocalClass a{Invariant(1, 4)};
  CHECK(restrict_local(a, LocalExtension(Int(2))).inv == Invariant(1, 2));
  CHECK(restrict_local(a, LocalExtension(Int(4))).inv == Invariant());
  CHECK(restrict_local(LocalClass{Invariant(1, 6)}, LocalExtension(Int(4))).inv ==
        Invariant(2, 3));
  // (e, f) metadata does not change restriction.
  CHECK(restrict_local(a, LocalExtension(2, 2, 1)).inv == Invariant(1, 2));
}

TEST_CASE("restricted index follows ind/gcd(ind, degree), den, deg <= 50") {
  for (long long den = 1; den <= 50; ++den) {
    for (long long num = 0; num < den; ++num) {
      if (std::gcd(num, den) != 1 && !(num == 0 && den == 1)) continue;
      LocalClass a{Invariant(num, den)};
      long long ind = local_index(a).convert_to<long long>();
      for (long long deg = 1; deg <= 50; ++deg) {
        Int restricted = local_index(restrict_local(a, LocalExtension(deg)));
        CHECK(restricted == ind / std::gcd(ind, deg));
      }
    }
  }
}

TEST_CASE("restriction composes: degree d then d' equals degree d*d'") {
  size_t bad = 0;
  for (long long den = 1; den <= 50; ++den) {
    for (long long num = den == 1 ? 0 : 1; num < std::max<long long>(den, 1);
         ++num) {
      if (den > 1 && std::gcd(num, den) != 1) continue;
      LocalClass a{Invariant(num, den)};
      for (long long d = 1; d <= 50; ++d) {
        LocalClass once = restrict_local(a, LocalExtension(d));
        for (long long d2 = 1; d2 <= 50; ++d2) {
          if (restrict_local(once, LocalExtension(d2)).inv !=
              restrict_local(a, LocalExtension(d * d2)).inv) {
            ++bad;
          }
        }
      }
    }
  }
  CHECK(bad == 0);
}

TEST_CASE("global classes enforce reciprocity at construction") {
  CHECK_NOTHROW(GlobalClass({{"v1", Invariant(1, 2)}, {"v2", Invariant(1, 2)}}));
  CHECK_NOTHROW(GlobalClass(std::map<std::string, Invariant>{}));
  CHECK_NOTHROW(GlobalClass({{"v1", Invariant()}}));
  CHECK_THROWS_AS(GlobalClass({{"v1", Invariant(1, 3)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(GlobalClass({{"v1", Invariant(1, 2)}, {"v2", Invariant(1, 3)}}),
                  std::invalid_argument);
}

TEST_CASE("global index is the lcm of local indices") {
  CHECK(global_index(GlobalClass{}) == 1);
  CHECK(global_index(GlobalClass(
            {{"v1", Invariant(1, 2)}, {"v2", Invariant(1, 2)}})) == 2);
  CHECK(global_index(GlobalClass({{"v1", Invariant(1, 3)},
                                  {"v2", Invariant(1, 2)},
                                  {"v3", Invariant(1, 6)}})) == 6);
}

TEST_CASE("extension profiles validate per-place degree sums") {
  CHECK_NOTHROW(GlobalExtensionProfile(2, {{"v1", {2}}, {"v2", {1, 1}}}));
  CHECK_THROWS_AS(GlobalExtensionProfile(2, {{"v1", {1}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(GlobalExtensionProfile(2, {{"v1", {}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(GlobalExtensionProfile(0, {}), std::invalid_argument);
}

TEST_CASE("restrict_global kills 2-torsion along a degree-2 profile") {
  GlobalClass a({{"v1", Invariant(1, 2)}, {"v2", Invariant(1, 2)}});
  GlobalExtensionProfile profile(2, {{"v1", {2}}, {"v2", {2}}});
  GlobalClass restricted = restrict_global(a, profile);
  CHECK(global_index(restricted) == 1);
  CHECK(restricted.places().at("v1#1") == Invariant());
  CHECK(restricted.places().at("v2#1") == Invariant());
}

TEST_CASE("restrict_global with split places and mixed decompositions") {
  GlobalClass a({{"v1", Invariant(1, 4)}, {"v2", Invariant(3, 4)}});
  GlobalExtensionProfile profile(2, {{"v1", {1, 1}}, {"v2", {2}}});
  GlobalClass restricted = restrict_global(a, profile);
  CHECK(restricted.places().size() == 3);
  CHECK(restricted.places().at("v1#1") == Invariant(1, 4));
  CHECK(restricted.places().at("v1#2") == Invariant(1, 4));
  CHECK(restricted.places().at("v2#1") == Invariant(1, 2));
  CHECK(global_index(restricted) == 4);
}

TEST_CASE("restrict_global drops zero places the profile does not cover") {
  GlobalClass a({{"v1", Invariant(1, 2)},
                 {"v2", Invariant(1, 2)},
                 {"v3", Invariant()}});
  GlobalExtensionProfile profile(3, {{"v1", {3}}, {"v2", {1, 2}}});
  GlobalClass restricted = restrict_global(a, profile);
  // v3 was split anyway; v1 stays 2-torsion (odd degree), v2 splits one of
  // its factors and keeps the other.
  CHECK(restricted.places().count("v3#1") == 0);
  CHECK(restricted.places().at("v1#1") == Invariant(1, 2));
  CHECK(restricted.places().at("v2#1") == Invariant(1, 2));
  CHECK(restricted.places().at("v2#2") == Invariant());
  CHECK(global_index(restricted) == 2);
}

TEST_CASE("restrict_global rejects an uncovered nonzero place") {
  GlobalClass a({{"v1", Invariant(1, 2)}, {"v2", Invariant(1, 2)}});
  GlobalExtensionProfile profile(2, {{"v1", {2}}});
  CHECK_THROWS_AS(restrict_global(a, profile), std::invalid_argument);
}

TEST_CASE("restricted global index always divides the original") {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<long long> den_dist(1, 40);
  std::uniform_int_distribution<int> count_dist(1, 4);
  std::uniform_int_distribution<long long> deg_dist(1, 5);
  for (int iter = 0; iter < 300; ++iter) {
    // Random class: pick invariants for n places, then add a closing place
    // carrying the negated sum so reciprocity holds by construction.
    int n = count_dist(rng);
    std::map<std::string, Invariant> places;
    Invariant sum;
    for (int k = 0; k < n; ++k) {
      long long den = den_dist(rng);
      long long num =
          std::uniform_int_distribution<long long>(0, den - 1)(rng);
      Invariant inv(num, den);
      places["v" + std::to_string(k)] = inv;
      sum = add(sum, inv);
    }
    places["closing"] = negate(sum);
    GlobalClass a(std::move(places));

    // Random profile covering every place with a common total degree.
    long long total = deg_dist(rng);
    std::map<std::string, std::vector<Int>> degs;
    for (const auto& [place, inv] : a.places()) {
      std::vector<Int> parts;
      long long left = total;
      while (left > 0) {
        long long part =
            std::uniform_int_distribution<long long>(1, left)(rng);
        parts.emplace_back(part);
        left -= part;
      }
      degs[place] = std::move(parts);
    }
    GlobalExtensionProfile profile(total, std::move(degs));

    GlobalClass restricted = restrict_global(a, profile);  // asserts reciprocity
    CHECK(global_index(a) % global_index(restricted) == 0);
  }
}

}  // TEST_SUITE("classes")
