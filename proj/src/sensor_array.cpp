#include "lrsda/sensor_array.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "lrsda/error.hpp"

namespace lrsda {

SensorArray::SensorArray(std::vector<Position> positions, std::string label,
                         Rational d_over_lambda)
    : positions_(std::move(positions)), label_(std::move(label)),
      d_over_lambda_(d_over_lambda) {
  if (d_over_lambda_ <= 0) throw ParameterError("d/lambda must be positive");
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    if (positions_[i] < 0) throw ParameterError("sensor positions must be >= 0");
    if (i > 0 && positions_[i] <= positions_[i - 1])
      throw ParameterError("sensor positions must be strictly increasing");
  }
}

void SensorArray::set_subarrays(std::vector<int> tags) {
  if (!tags.empty() && tags.size() != positions_.size())
    throw ParameterError("one sub-array tag per sensor is required");
  subarray_ = std::move(tags);
}

SensorArray SensorArray::shifted(Position offset) const {
  std::vector<Position> p(positions_);
  for (auto& x : p) x += offset;
  SensorArray out(std::move(p), label_, d_over_lambda_);
  out.subarray_ = subarray_;
  return out;
}

std::string SensorArray::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < positions_.size(); ++i) os << (i ? "," : "") << positions_[i];
  os << '}';
  return os.str();
}

SensorArray parse_positions(const std::string& csv, std::string label) {
  std::vector<Position> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    auto end = csv.find(',', start);
    if (end == std::string::npos) end = csv.size();
    std::string tok = csv.substr(start, end - start);
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) throw ParameterError("empty entry in position list '" + csv + "'");
    Position v{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParameterError("bad sensor position '" + tok + "'");
    out.push_back(v);
    start = end + 1;
  }
  std::sort(out.begin(), out.end());
  return SensorArray(std::move(out), std::move(label));
}

}  // namespace lrsda
