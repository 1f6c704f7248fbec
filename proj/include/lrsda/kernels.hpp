#pragma once

// Hot loops of the pipeline. Each kernel has a serial reference and an
// OpenMP variant; the two must produce identical results (the OpenMP
// versions partition work so that every output element is reduced in the
// same order as the serial loop). Tests compare them, bench_kernels times
// them.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "lrsda/sensor_array.hpp"

namespace lrsda::kernels {

using cd = std::complex<double>;

/// Dense SO-ECA histogram. Entry i counts lag (i - offset), offset = 2*max.
struct DenseHistogram {
  std::int64_t offset = 0;
  std::vector<std::int64_t> counts;
};

DenseHistogram soeca_histogram_serial(std::span<const Position> p);
DenseHistogram soeca_histogram_omp(std::span<const Position> p);

/// Sample second-order cumulants of the N x K snapshot matrix x.
/// out[0..3] = (1/K) sum x x^T, x x^H, x* x^T, x* x^H.
void soc_serial(const Eigen::MatrixXcd& x, Eigen::MatrixXcd out[4]);
void soc_omp(const Eigen::MatrixXcd& x, Eigen::MatrixXcd out[4]);

/// MUSIC pseudo-spectrum 1 / ||En^H v(u)||^2 for each u = sin(theta) in `sines`,
/// with v_k(u) = exp(j*pi*k*u), k = 0..M-1 and En the M x (M-D) noise basis.
std::vector<double> music_scan_serial(const Eigen::MatrixXcd& noise_basis,
                                      std::span<const double> sines);
std::vector<double> music_scan_omp(const Eigen::MatrixXcd& noise_basis,
                                   std::span<const double> sines);

}  // namespace lrsda::kernels
