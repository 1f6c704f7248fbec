#include "lrsda/coarray.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "lrsda/error.hpp"
#include "lrsda/kernels.hpp"

namespace lrsda {

LagMultiset::LagMultiset(std::map<Lag, std::int64_t> counts, std::size_t source_size)
    : counts_(std::move(counts)), source_size_(source_size) {
  for (const auto& [z, m] : counts_)
    if (m < 1) throw ParameterError("lag multiplicities must be >= 1");
}

std::int64_t LagMultiset::multiplicity(Lag z) const {
  auto it = counts_.find(z);
  return it == counts_.end() ? 0 : it->second;
}

std::int64_t LagMultiset::total() const {
  std::int64_t t = 0;
  for (const auto& [z, m] : counts_) t += m;
  return t;
}

std::vector<Lag> LagMultiset::unique_lags() const {
  std::vector<Lag> out;
  out.reserve(counts_.size());
  for (const auto& [z, m] : counts_) out.push_back(z);
  return out;
}

LagMultiset LagMultiset::negated() const {
  std::map<Lag, std::int64_t> out;
  for (auto it = counts_.rbegin(); it != counts_.rend(); ++it) out.emplace_hint(out.end(), -it->first, it->second);
  return LagMultiset(std::move(out), source_size_);
}

LagMultiset& LagMultiset::operator+=(const LagMultiset& other) {
  for (const auto& [z, m] : other.counts_) counts_[z] += m;
  source_size_ = std::max(source_size_, other.source_size_);
  return *this;
}

SocCase soc_case_from_int(int j) {
  if (j < 1 || j > 4) throw ParameterError("cumulant case must be 1..4");
  return static_cast<SocCase>(j);
}

std::set<Lag> cross_sum(const SensorArray& s, const SensorArray& s_prime) {
  std::set<Lag> out;
  for (Position a : s.positions())
    for (Position b : s_prime.positions()) out.insert(a + b);
  return out;
}

LagMultiset soca(const SensorArray& s, SocCase c) {
  std::vector<Lag> lags;
  lags.reserve(s.size() * s.size());
  for (Position a : s.positions())
    for (Position b : s.positions()) lags.push_back(case_lag(c, a, b));
  std::sort(lags.begin(), lags.end());
  std::map<Lag, std::int64_t> m;
  for (std::size_t i = 0; i < lags.size();) {
    std::size_t j = i;
    while (j < lags.size() && lags[j] == lags[i]) ++j;
    m.emplace_hint(m.end(), lags[i], static_cast<std::int64_t>(j - i));
    i = j;
  }
  return LagMultiset(std::move(m), s.size());
}

LagMultiset sca(const SensorArray& s) { return soca(s, SocCase::kSum); }
LagMultiset dca(const SensorArray& s) { return soca(s, SocCase::kDiff); }

CoArraySummary summarize(const std::vector<Lag>& lags) {
  CoArraySummary out;
  out.unique_lags = lags;
  if (lags.empty()) {
    out.dof = 0;
    return out;
  }
  const auto has = [&](Lag z) { return std::binary_search(lags.begin(), lags.end(), z); };
  if (has(0)) {
    Lag u = 0;
    while (has(u + 1) && has(-(u + 1))) ++u;
    out.u = u;
    out.dof = 2 * u + 1;
  } else {
    out.u = 0;
    out.dof = 0;
  }
  const Lag max_lag = lags.back();
  for (Lag z = 0; z < max_lag; ++z)
    if (!has(z)) out.holes.push_back(z);
  return out;
}

SoEca so_eca(const SensorArray& s) {
  if (s.empty()) throw ParameterError("SO-ECA needs at least one sensor");
  const auto h = kernels::soeca_histogram_omp(s.positions());
  std::map<Lag, std::int64_t> m;
  for (std::size_t i = 0; i < h.counts.size(); ++i)
    if (h.counts[i] > 0) m.emplace_hint(m.end(), static_cast<Lag>(i) - h.offset, h.counts[i]);
  SoEca out{LagMultiset(std::move(m), s.size()), {}};
  out.summary = summarize(out.multiset.unique_lags());
  return out;
}

Lag soeca_extent(const SensorArray& s) {
  if (s.empty()) return 0;
  // The SO-ECA is symmetric, so only the non-negative side is scanned.
  const auto& p = s.positions();
  const Position pmax = p.back();
  std::vector<char> present(static_cast<std::size_t>(2 * pmax + 1), 0);
  for (Position a : p)
    for (Position b : p) {
      present[a + b] = 1;
      present[a > b ? a - b : b - a] = 1;
    }
  Lag u = 0;
  while (u + 1 <= 2 * pmax && present[u + 1]) ++u;
  return u;
}

std::map<Lag, std::int64_t> weight_function(const SensorArray& s) {
  return so_eca(s).multiset.counts();
}

WeightDecomposition weight_decomposition(const SensorArray& s) {
  if (!s.has_subarrays())
    throw ParameterError("weight decomposition needs LR-SDA sub-array metadata");
  WeightDecomposition out;
  const auto& p = s.positions();
  const auto& tag = s.subarray();
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t k = 0; k < p.size(); ++k) {
      const bool i1 = tag[i] == 1;
      const bool k1 = tag[k] == 1;
      auto& dst = (i1 && k1) ? out.inter_ula_1 : (!i1 && !k1) ? out.inter_ula_2 : out.inter_ula_12;
      for (int j = 1; j <= 4; ++j) ++dst[case_lag(static_cast<SocCase>(j), p[i], p[k])];
    }
  return out;
}

double Redundancy::as_double() const {
  if (infinite) return std::numeric_limits<double>::infinity();
  return boost::rational_cast<double>(value);
}

Rational redundancy_sum(std::int64_t n) {
  if (n < 1) throw ParameterError("sensor count must be >= 1");
  return Rational(n * (n + 1) / 2, 2 * n + 1);
}

Rational redundancy_diff(std::int64_t n, std::int64_t aperture_l) {
  if (n < 1) throw ParameterError("sensor count must be >= 1");
  if (aperture_l < 1) throw ParameterError("aperture must be >= 1");
  return Rational(n * (n - 1) / 2, aperture_l);
}

Redundancy redundancy_soeca(const SensorArray& s) {
  const auto n = static_cast<std::int64_t>(s.size());
  const Lag u = soeca_extent(s);
  if (u == 0) return Redundancy{Rational(0), true};
  return Redundancy{Rational(n * n, u), false};
}

double redundancy_lower_bound(std::int64_t n) {
  if (n < 1) throw ParameterError("sensor count must be >= 1");
  const double nn = static_cast<double>(n);
  return (1.0 + 2.0 / (3.0 * std::numbers::pi)) * 2.0 * nn * nn / (nn * nn + nn);
}

double asymptotic_u_bound(std::int64_t n) {
  const double nn = static_cast<double>(n);
  return 1.0 + 2.0 * nn * nn / redundancy_lower_bound(n);
}

}  // namespace lrsda
