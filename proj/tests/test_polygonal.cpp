#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "polysum/polygonal.hpp"

using namespace polysum;

TEST_CASE("polygonal: fixed values") {
  CHECK(polygonal(3, 3) == 6);  // triangular
  for (u64 k = 0; k <= 100; ++k) CHECK(polygonal(3, k) == k * (k + 1) / 2);
  CHECK(polygonal(4, 7) == 49);  // squares
  CHECK(polygonal(5, 3) == 12);
  for (u32 s = 3; s <= 60; ++s) {
    CHECK(polygonal(s, 0) == 0);
    CHECK(polygonal(s, 1) == 1);
    CHECK(polygonal(s, 2) == s);  // second s-gonal number equals s
  }
  CHECK_THROWS_AS(polygonal(2, 5), std::invalid_argument);
}

TEST_CASE("gonal_index: fixed values") {
  CHECK(gonal_index(9, 24) == 3);  // P_9(3) = 7*3 + 3
  for (u32 s = 3; s <= 40; ++s) {
    CHECK(gonal_index(s, 0) == 0);
    CHECK(gonal_index(s, 1) == 1);
  }
  CHECK_FALSE(gonal_index(5, 4).has_value());  // pentagonals: 0, 1, 5, 12
  CHECK_FALSE(gonal_index(3, 2).has_value());
}

TEST_CASE("gonal_index round trips polygonal for s in [3,50], k up to 10^4") {
  for (u32 s = 3; s <= 50; ++s) {
    for (u64 k = 0; k <= 10000; ++k) {
      auto idx = gonal_index(s, polygonal(s, k));
      REQUIRE(idx.has_value());
      CHECK(*idx == k);
    }
  }
}

TEST_CASE("gonal_index rejects off-by-one neighbours") {
  for (u32 s = 5; s <= 20; ++s) {
    for (u64 k = 2; k <= 200; ++k) {
      u64 v = polygonal(s, k);
      CHECK_FALSE(gonal_index(s, v - 1).has_value());
      CHECK_FALSE(gonal_index(s, v + 1).has_value());
    }
  }
}

TEST_CASE("gonal_values_upto") {
  CHECK(gonal_values_upto(6, 50) == std::vector<u64>{0, 1, 6, 15, 28, 45});
  CHECK(gonal_values_upto(7, 0) == std::vector<u64>{0});
  CHECK(gonal_values_upto(12, 12) == std::vector<u64>{0, 1, 12});
  auto v = gonal_values_upto(5, 100000);
  for (std::size_t i = 1; i < v.size(); ++i) CHECK(v[i - 1] < v[i]);
}

TEST_CASE("triangular_from_odd") {
  TriangularValue a = triangular_from_odd(1);
  CHECK(a.t == 0);
  CHECK(a.k == 0);
  TriangularValue b = triangular_from_odd(7);
  CHECK(b.t == 6);
  CHECK(b.k == 3);
  TriangularValue c = triangular_from_odd(9);
  CHECK(c.t == 10);
  CHECK(c.k == 4);
  CHECK_THROWS_AS(triangular_from_odd(8), std::invalid_argument);
  for (u64 x = 1; x <= 9999; x += 2) {
    TriangularValue t = triangular_from_odd(x);
    CHECK(t.t == t.k * (t.k + 1) / 2);
    CHECK(8 * t.t + 1 == x * x);
  }
}

TEST_CASE("square-completion identity: 8(s-2)P_s(x) = (2(s-2)x-(s-4))^2 - (s-4)^2") {
  for (u32 s = 4; s <= 30; ++s) {
    for (u64 x = 0; x <= 1000; ++x) {
      i128 lhs = i128{8} * (s - 2) * static_cast<i128>(polygonal_u128(s, x));
      i128 t = i128{2} * (s - 2) * x - (i128{s} - 4);
      i128 rhs = t * t - (i128{s} - 4) * (i128{s} - 4);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("polygonal overflow is reported") {
  CHECK_THROWS_AS(polygonal(40, u64{1} << 62), std::overflow_error);
}
