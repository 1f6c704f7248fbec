#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace lrsda {

using Position = std::int64_t;
using Rational = boost::rational<std::int64_t>;

/// Physical sparse linear array. Positions are non-negative integers in
/// units of the inter-element spacing d and are kept strictly increasing.
///
/// `subarray` is optional metadata (one tag per sensor, 1..3) filled in by
/// the LR-SDA builder; it enables the weight-function decomposition.
class SensorArray {
public:
  SensorArray() = default;
  explicit SensorArray(std::vector<Position> positions, std::string label = "custom",
                       Rational d_over_lambda = Rational(1, 2));

  const std::vector<Position>& positions() const noexcept { return positions_; }
  std::size_t size() const noexcept { return positions_.size(); }
  bool empty() const noexcept { return positions_.empty(); }
  Position aperture() const noexcept { return empty() ? 0 : positions_.back(); }

  const std::string& label() const noexcept { return label_; }
  Rational d_over_lambda() const noexcept { return d_over_lambda_; }

  const std::vector<int>& subarray() const noexcept { return subarray_; }
  bool has_subarrays() const noexcept { return !subarray_.empty(); }
  void set_subarrays(std::vector<int> tags);

  /// Same geometry translated by `offset` (must keep positions >= 0).
  SensorArray shifted(Position offset) const;

  std::string to_string() const;

private:
  std::vector<Position> positions_;
  std::string label_ = "custom";
  Rational d_over_lambda_{1, 2};
  std::vector<int> subarray_;
};

/// Parses "0,1,5,8" into an array; throws ParameterError on bad input.
SensorArray parse_positions(const std::string& csv, std::string label = "custom");

}  // namespace lrsda
