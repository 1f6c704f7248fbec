#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "lrsda/sensor_array.hpp"

namespace lrsda {

using Lag = std::int64_t;

/// Multiset of co-array lags: lag -> multiplicity (always >= 1).
class LagMultiset {
public:
  LagMultiset() = default;
  LagMultiset(std::map<Lag, std::int64_t> counts, std::size_t source_size);

  const std::map<Lag, std::int64_t>& counts() const noexcept { return counts_; }
  std::size_t source_size() const noexcept { return source_size_; }

  std::int64_t multiplicity(Lag z) const;
  std::int64_t total() const;
  std::vector<Lag> unique_lags() const;
  bool contains(Lag z) const { return counts_.count(z) != 0; }

  LagMultiset negated() const;
  LagMultiset& operator+=(const LagMultiset& other);

  friend bool operator==(const LagMultiset&, const LagMultiset&) = default;

private:
  std::map<Lag, std::int64_t> counts_;
  std::size_t source_size_ = 0;
};

/// Consecutive-segment summary of a (symmetric) co-array.
struct CoArraySummary {
  std::vector<Lag> unique_lags;  // sorted
  Lag u = 0;                     // largest U with [-U, U] inside unique_lags
  std::vector<Lag> holes;        // missing non-negative lags below the max lag
  Lag dof = 1;                   // 2U + 1
};

/// Second-order cumulant case: which sign pattern pairs two sensors.
///   1: p1 + p2   2: p1 - p2   3: -p1 + p2   4: -p1 - p2
enum class SocCase : int { kSum = 1, kDiff = 2, kRevDiff = 3, kNegSum = 4 };

constexpr Lag case_lag(SocCase c, Position a, Position b) noexcept {
  switch (c) {
    case SocCase::kSum: return a + b;
    case SocCase::kDiff: return a - b;
    case SocCase::kRevDiff: return -a + b;
    case SocCase::kNegSum: return -a - b;
  }
  return 0;
}

SocCase soc_case_from_int(int j);

std::set<Lag> cross_sum(const SensorArray& s, const SensorArray& s_prime);

LagMultiset sca(const SensorArray& s);
LagMultiset dca(const SensorArray& s);
LagMultiset soca(const SensorArray& s, SocCase c);

/// Summary of an arbitrary lag set (not necessarily symmetric).
CoArraySummary summarize(const std::vector<Lag>& sorted_unique_lags);

struct SoEca {
  LagMultiset multiset;
  CoArraySummary summary;
};

/// SO-ECA: bag sum of the four SOCA multisets plus its summary.
SoEca so_eca(const SensorArray& s);

/// One-sided consecutive extent U of the SO-ECA without building the map.
/// Used in parameter searches; agrees with so_eca(s).summary.u.
Lag soeca_extent(const SensorArray& s);

/// Weight function split by LR-SDA sub-array pair type. S1 is sub-array 1,
/// S23 is sub-arrays 2 and 3 together.
struct WeightDecomposition {
  std::map<Lag, std::int64_t> inter_ula_1;   // both sensors in S1
  std::map<Lag, std::int64_t> inter_ula_2;   // both sensors in S23
  std::map<Lag, std::int64_t> inter_ula_12;  // one in each, both orders
};

std::map<Lag, std::int64_t> weight_function(const SensorArray& s);

/// Requires sub-array tags on `s`; throws ParameterError otherwise.
WeightDecomposition weight_decomposition(const SensorArray& s);

/// Redundancy value where U = 0 maps to infinity.
struct Redundancy {
  Rational value{0};
  bool infinite = false;
  double as_double() const;
};

Rational redundancy_sum(std::int64_t n);
Rational redundancy_diff(std::int64_t n, std::int64_t aperture_l);
Redundancy redundancy_soeca(const SensorArray& s);

/// Lower bound on SO-ECA redundancy, (1 + 2/(3 pi)) * 2N^2 / (N^2 + N).
double redundancy_lower_bound(std::int64_t n);

/// Upper bound on the two-sided consecutive segment size, 1 + 2N^2 / L2(N).
double asymptotic_u_bound(std::int64_t n);

}  // namespace lrsda
