#include "brauer/curves.hpp"

#include "doctest.h"

using namespace brauer;

TEST_SUITE("curves") {

TEST_CASE("capacity model: points appear exactly above the capacity") {
  CapacityCurveModel c(2, 0);
  CHECK_FALSE(c.has_point(1));
  CHECK(c.has_point(2));
  CHECK_FALSE(c.has_point(3));
  CHECK(c.has_point(6));

  CapacityCurveModel deep(2, 1);
  CHECK_FALSE(deep.has_point(2));
  CHECK(deep.has_point(4));
  CHECK(deep.has_point(12));
  CHECK_FALSE(deep.has_point(6));
}

TEST_CASE("capacity model requires a prime index") {
  CHECK_NOTHROW(CapacityCurveModel(7, 3));
  CHECK_THROWS_AS(CapacityCurveModel(4, 0), std::domain_error);
  CHECK_THROWS_AS(CapacityCurveModel(1, 0), std::domain_error);
}

TEST_CASE("curve index after extension, capacity model") {
  CHECK(curve_index_after_extension(CapacityCurveModel(2, 0),
                                    LocalExtension(Int(2))) == 1);
  CHECK(curve_index_after_extension(CapacityCurveModel(2, 1),
                                    LocalExtension(Int(2))) == 2);
  CHECK(curve_index_after_extension(CapacityCurveModel(3, 0),
                                    LocalExtension(Int(5))) == 3);
  CHECK(curve_index_after_extension(CapacityCurveModel(3, 0),
                                    LocalExtension(Int(6))) == 1);
}

TEST_CASE("curve index after extension, tabulated model") {
  TabulatedCurveModel split({{Int(1), Int(1)}}, 1);
  CHECK(curve_index_after_extension(split, LocalExtension(Int(1))) == 1);
  CHECK(curve_index_after_extension(split, LocalExtension(Int(7))) == 1);

  TabulatedCurveModel t({{Int(1), Int(2)}, {Int(2), Int(1)}}, 2);
  CHECK(curve_index_after_extension(t, LocalExtension(Int(1))) == 2);
  CHECK(curve_index_after_extension(t, LocalExtension(Int(2))) == 1);
  CHECK(curve_index_after_extension(t, LocalExtension(Int(3))) == 2);
}

TEST_CASE("tabulated model validates entries") {
  CHECK_THROWS_AS(TabulatedCurveModel({{Int(0), Int(1)}}, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(TabulatedCurveModel({{Int(1), Int(0)}}, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(TabulatedCurveModel({}, 0), std::invalid_argument);
}

TEST_CASE("degree must be positive when asking for a curve index") {
  CHECK_THROWS_AS(curve_index_at_degree(CapacityCurveModel(2, 0), 0),
                  std::invalid_argument);
}

TEST_CASE("capacity_of recovers the capacity from the predicate") {
  CHECK(capacity_of(CapacityCurveModel(3, 2), 100) == 2);
  CHECK(capacity_of(CapacityCurveModel(2, 0), 16) == 0);
  CHECK_FALSE(capacity_of(TabulatedCurveModel({{Int(1), Int(1)}}, 1), 10)
                  .has_value());
  CHECK_THROWS_AS(capacity_of(CapacityCurveModel(2, 0), 0),
                  std::invalid_argument);
}

TEST_CASE("capacity_of at bound p^(cpc+2) is exact for p in {2,3,5}") {
  for (Int p : {2, 3, 5}) {
    for (unsigned cpc = 0; cpc <= 5; ++cpc) {
      CurveModel model = CapacityCurveModel(p, cpc);
      CHECK(capacity_of(model, pow_int(p, cpc + 2)) == cpc);
    }
  }
}

TEST_CASE("capacity_of on a tabulated curve of prime index") {
  // Index 3 over k, points exactly at degrees divisible by 9: capacity 1.
  std::map<Int, Int> table;
  for (long long d = 1; d <= 200; ++d) {
    table[Int(d)] = d % 9 == 0 ? 1 : 3;
  }
  TabulatedCurveModel t(std::move(table), 3);
  CHECK(capacity_of(t, 200) == 1);

  TabulatedCurveModel composite({{Int(1), Int(6)}}, 6);
  CHECK_THROWS_AS(capacity_of(composite, 10), std::domain_error);
}

TEST_CASE("has_point is monotone under degree divisibility, up to 1000") {
  size_t bad = 0;
  for (Int p : {2, 3}) {
    for (unsigned cpc = 0; cpc <= 3; ++cpc) {
      CapacityCurveModel c(p, cpc);
      for (long long d = 1; d <= 1000; ++d) {
        if (!c.has_point(d)) continue;
        for (long long kd = 2 * d; kd <= 1000; kd += d) {
          if (!c.has_point(kd)) ++bad;
        }
      }
    }
  }
  CHECK(bad == 0);
}

}  // TEST_SUITE("curves")
