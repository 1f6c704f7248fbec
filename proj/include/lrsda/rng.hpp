#pragma once

#include <cstdint>
#include <random>

namespace lrsda {

/// splitmix64 finalizer; used to derive independent per-trial seeds.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed for trial `index` under `master`. Independent of evaluation order.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept;

/// mt19937_64 with portable uniform/normal transforms (the standard
/// distributions are implementation-defined, these are not).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in (0, 1), 53-bit resolution.
  double uniform();

  /// Standard normal via Box-Muller; caches the second variate.
  double normal();

private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace lrsda
