#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "lrsda/coarray.hpp"
#include "lrsda/sensor_array.hpp"

namespace lrsda {

using cd = std::complex<double>;

/// Far-field source scenario. Sources are real zero-mean Gaussian amplitudes
/// (maximally non-circular); noise is circular complex Gaussian.
struct Scenario {
  std::vector<double> angles_deg;  // strictly increasing, inside (-90, 90)
  double snr_db = 0.0;             // per source; +inf means noiseless
  long snapshots = 1;
  std::uint64_t seed = 0;
  double source_power = 1.0;

  void validate() const;
  double noise_variance() const;
};

/// `count` angles evenly spaced over [lo, hi] (midpoint when count == 1).
std::vector<double> uniform_angles(int count, double lo_deg = -60.0, double hi_deg = 60.0);

struct SnapshotMatrix {
  Eigen::MatrixXcd values;  // N x K
  SensorArray array;
};

/// R1 = E[x x^T], R2 = E[x x^H], R3 = E[x* x^T], R4 = E[x* x^H].
struct SocSet {
  Eigen::MatrixXcd r[4];

  const Eigen::MatrixXcd& r1() const { return r[0]; }
  const Eigen::MatrixXcd& r2() const { return r[1]; }
  const Eigen::MatrixXcd& r3() const { return r[2]; }
  const Eigen::MatrixXcd& r4() const { return r[3]; }
};

/// Column-stacked cumulants, length 4N^2, segment j-1 holding vec(R_j).
struct CombinedCumulantVector {
  Eigen::VectorXcd values;
  Eigen::Index n = 0;

  Eigen::Ref<const Eigen::VectorXcd> segment(int case_j) const {
    return values.segment((case_j - 1) * n * n, n * n);
  }
};

/// a_n = exp(j 2 pi p_n (d/lambda) sin(theta)).
Eigen::VectorXcd steering_vector(const SensorArray& s, double theta_deg);

SnapshotMatrix simulate(const SensorArray& s, const Scenario& scenario);

SocSet estimate_soc(const SnapshotMatrix& x);

/// Expected cumulants for uncorrelated real-amplitude sources with the given
/// powers plus circular noise of variance noise_var (enters R2 and R3 only).
SocSet analytic_soc(const SensorArray& s, const std::vector<double>& angles_deg,
                    const std::vector<double>& powers, double noise_var = 0.0);

CombinedCumulantVector combine_cumulants(const SocSet& soc);

/// Reshape segment j of `c` back into the N x N matrix R_j.
Eigen::MatrixXcd uncombine(const CombinedCumulantVector& c, int case_j);

/// Lag carried by R_j(row, col).
Lag entry_lag(const SensorArray& s, SocCase c, Eigen::Index row, Eigen::Index col);

/// vec of the noiseless R_j for a unit-power source at theta: entry
/// N*col + row has phase (2 pi d / lambda) * entry_lag(row, col) * sin(theta).
/// Case 1 equals a (x) a and case 4 its conjugate.
Eigen::VectorXcd virtual_steering(const SensorArray& s, double theta_deg, SocCase c);

}  // namespace lrsda
