#include <doctest.h>

#include "lrsda/error.hpp"
#include "lrsda/sensor_array.hpp"

using namespace lrsda;

TEST_CASE("positions must be non-negative and strictly increasing") {
  CHECK_NOTHROW(SensorArray({0, 1, 5, 8}));
  CHECK_THROWS_AS(SensorArray({0, 1, 1}), ParameterError);
  CHECK_THROWS_AS(SensorArray({3, 1}), ParameterError);
  CHECK_THROWS_AS(SensorArray({-1, 2}), ParameterError);
}

TEST_CASE("accessors") {
  const SensorArray s({0, 1, 5, 8}, "demo");
  CHECK(s.size() == 4);
  CHECK(s.aperture() == 8);
  CHECK(s.label() == "demo");
  CHECK(s.d_over_lambda() == Rational(1, 2));
  CHECK(s.to_string() == "{0,1,5,8}");
  CHECK_FALSE(s.has_subarrays());
}

TEST_CASE("parse_positions sorts and rejects junk") {
  CHECK(parse_positions("8,0,5,1").positions() == std::vector<Position>{0, 1, 5, 8});
  CHECK(parse_positions(" 1, 2 ").positions() == std::vector<Position>{1, 2});
  CHECK_THROWS_AS(parse_positions("1,x"), ParameterError);
  CHECK_THROWS_AS(parse_positions(""), ParameterError);
  CHECK_THROWS_AS(parse_positions("1,1"), ParameterError);
}

TEST_CASE("shifted keeps subarray tags") {
  SensorArray s({1, 2, 4});
  s.set_subarrays({1, 2, 3});
  const SensorArray t = s.shifted(3);
  CHECK(t.positions() == std::vector<Position>{4, 5, 7});
  CHECK(t.subarray() == std::vector<int>{1, 2, 3});
  CHECK_THROWS_AS(s.shifted(-2), ParameterError);
  CHECK_THROWS_AS(s.set_subarrays({1, 2}), ParameterError);
}
