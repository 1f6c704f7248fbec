#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lrsda/coarray.hpp"
#include "lrsda/sensor_array.hpp"

namespace lrsda {

/// LR-SDA sizing: n1 sensors in the sparse sub-array, n2 - eta in the first
/// dense sub-array, eta in the second; delta shifts the whole array right.
struct LrSdaParams {
  int n1 = 1;
  int n2 = 1;
  int eta = 0;
  int delta = 0;

  int sensor_count() const noexcept { return n1 + n2; }
  friend bool operator==(const LrSdaParams&, const LrSdaParams&) = default;
};

/// ceil(n2 / 2) - 1
int default_eta(int n2);

/// floor((n2 + 1) / 2); upper end of the delta search range.
int max_delta(int n2);

/// Throws ParameterError naming the first violated constraint.
void validate(const LrSdaParams& params);

SensorArray build_lr_sda(const LrSdaParams& params);

struct DeltaChoice {
  int delta = 0;
  Lag u = 0;
};

/// Exhaustive delta in [0, max_delta(n2)] maximizing the SO-ECA extent U;
/// ties go to the larger delta.
DeltaChoice select_delta(int n1, int n2, int eta);

/// Convenience: params with the searched delta filled in.
LrSdaParams with_best_delta(LrSdaParams params);

enum class SplitBranch { kEtaOne, kEtaAtLeastTwo };

struct SplitCandidate {
  SplitBranch branch;
  LrSdaParams params;     // delta left at 0; resolve with select_delta
  bool eta_fallback = false;  // branch eta was illegal for this n2
};

/// Closed-form sub-array sizing for n sensors, one candidate per eta branch.
/// n2 is round-half-up((n-1)/2) for eta = 1 and round-half-up((2n-1)/4) for
/// eta >= 2 (eta = max(2, default_eta(n2))). When the branch eta does not
/// fit (eta > n2 - 1) the candidate falls back to default_eta(n2).
std::vector<SplitCandidate> optimal_split(int n);

enum class EtaBranch { kOne, kAtLeastTwo };

/// Relaxed (real) optimum N1* for a target one-sided aperture e.
double min_sensors_for_aperture(double e, EtaBranch branch, double delta);

enum class DofFormula { kTheorem1, kEta1, kEtaGe2, kTableF };

/// Closed-form ("claimed") DOF; the enumerated value is authoritative.
std::int64_t claimed_dof(const LrSdaParams& params, DofFormula formula);

enum class Comparator { kTsEna, kGenams, kNadis, kTnaI, kTnaII };

Comparator comparator_from_string(const std::string& name);
std::string to_string(Comparator c);
std::string to_string(DofFormula f);

/// Sizing for comparator DOF formulas. TS-ENA, TNA-I and TNA-II read
/// (n1, n2); NADiS and GENAMS read n.
struct ComparatorSizing {
  int n = 0;
  int n1 = 0;
  int n2 = 0;
};

std::int64_t comparator_dof(Comparator kind, const ComparatorSizing& sizing);

}  // namespace lrsda
