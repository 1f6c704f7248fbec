#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "lrsda/coarray.hpp"
#include "lrsda/signalsim.hpp"

namespace lrsda {

inline constexpr double kDefaultGridStepDeg = 0.05;
inline constexpr double kGridLimitDeg = 89.9;

/// Co-array measurement on the consecutive segment [-U, U]; each lag is the
/// plain mean of every cumulant entry mapping to it.
struct VirtualMeasurement {
  std::vector<cd> values;                   // index z + U
  Lag u = 0;
  std::vector<std::int64_t> averaging_counts;  // W(z) on the segment

  cd at(Lag z) const { return values[static_cast<std::size_t>(z + u)]; }
};

VirtualMeasurement lag_average(const CombinedCumulantVector& c, const SensorArray& s);

/// (U+1) x (U+1) average of z_i z_i^H over the U+1 windows of length U+1.
Eigen::MatrixXcd spatial_smoothing(const VirtualMeasurement& z);

struct MusicSpectrum {
  std::vector<double> grid_deg;
  std::vector<double> values;
};

/// Grid over [-89.9, 89.9] in `grid_step_deg` steps. `d_over_lambda` sets
/// the virtual ULA spacing (1/2 by default).
MusicSpectrum music(const Eigen::MatrixXcd& r_ss, int d, double grid_step_deg = kDefaultGridStepDeg,
                    double d_over_lambda = 0.5);

/// The d largest strict interior local maxima, refined by a three-point
/// parabola on the log spectrum, sorted ascending. Throws UnderResolvedError.
std::vector<double> find_peaks(const MusicSpectrum& spec, int d);

struct RmseResult {
  double rmse = 0.0;  // degrees; NaN when every trial was excluded
  long used = 0;
  long excluded = 0;
};

/// nullopt entries are under-resolved trials; they are excluded and counted.
/// Estimates and truth are paired in sorted order.
RmseResult rmse(const std::vector<std::optional<std::vector<double>>>& estimates,
                const std::vector<double>& truth);

struct DoaOutcome {
  MusicSpectrum spectrum;
  std::optional<std::vector<double>> estimates;  // nullopt when under-resolved
  std::size_t peaks_found = 0;
  Lag u = 0;
};

/// lag_average -> spatial_smoothing -> music -> find_peaks.
DoaOutcome estimate_doa(const SensorArray& s, const SocSet& soc, int d,
                        double grid_step_deg = kDefaultGridStepDeg);

}  // namespace lrsda
