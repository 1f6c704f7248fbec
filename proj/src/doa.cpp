#include "lrsda/doa.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lrsda/error.hpp"
#include "lrsda/kernels.hpp"

namespace lrsda {

VirtualMeasurement lag_average(const CombinedCumulantVector& c, const SensorArray& s) {
  const auto n = static_cast<Eigen::Index>(s.size());
  if (c.n != n) throw ParameterError("cumulant vector does not match the array size");
  const Lag u = soeca_extent(s);
  if (u < 1) throw DegenerateArrayError("SO-ECA has no consecutive lags beyond 0");

  VirtualMeasurement out;
  out.u = u;
  out.values.assign(static_cast<std::size_t>(2 * u + 1), cd{});
  out.averaging_counts.assign(static_cast<std::size_t>(2 * u + 1), 0);
  for (int j = 1; j <= 4; ++j) {
    const SocCase sc = static_cast<SocCase>(j);
    const auto seg = c.segment(j);
    for (Eigen::Index col = 0; col < n; ++col)
      for (Eigen::Index row = 0; row < n; ++row) {
        const Lag z = entry_lag(s, sc, row, col);
        if (z < -u || z > u) continue;
        const auto idx = static_cast<std::size_t>(z + u);
        out.values[idx] += seg(n * col + row);
        ++out.averaging_counts[idx];
      }
  }
  for (std::size_t i = 0; i < out.values.size(); ++i)
    out.values[i] /= static_cast<double>(out.averaging_counts[i]);
  return out;
}

Eigen::MatrixXcd spatial_smoothing(const VirtualMeasurement& z) {
  const Lag u = z.u;
  const Eigen::Index m = u + 1;
  if (static_cast<Lag>(z.values.size()) != 2 * u + 1)
    throw ParameterError("virtual measurement length must be 2U + 1");
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(m, m);
  Eigen::VectorXcd w(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index k = 0; k < m; ++k) w(k) = z.values[static_cast<std::size_t>(i + k)];
    r.noalias() += w * w.adjoint();
  }
  r /= static_cast<double>(m);
  return r;
}

MusicSpectrum music(const Eigen::MatrixXcd& r_ss, int d, double grid_step_deg,
                    double d_over_lambda) {
  const Eigen::Index m = r_ss.rows();
  if (d < 1) throw ParameterError("source count must be >= 1");
  if (d >= m) throw IdentifiabilityError("need fewer sources than the smoothed dimension U + 1");
  if (!(grid_step_deg > 0.0)) throw ParameterError("grid step must be positive");

  const Eigen::MatrixXcd herm = 0.5 * (r_ss + r_ss.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(herm);
  if (eig.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  // Eigenvalues ascend: the first m - d vectors span the noise subspace.
  const Eigen::MatrixXcd noise = eig.eigenvectors().leftCols(m - d);

  MusicSpectrum spec;
  const auto steps = static_cast<long>(std::floor(2.0 * kGridLimitDeg / grid_step_deg + 1e-9));
  spec.grid_deg.reserve(steps + 1);
  for (long i = 0; i <= steps; ++i) spec.grid_deg.push_back(-kGridLimitDeg + i * grid_step_deg);
  std::vector<double> sines(spec.grid_deg.size());
  for (std::size_t i = 0; i < sines.size(); ++i)
    sines[i] = 2.0 * d_over_lambda * std::sin(spec.grid_deg[i] * std::numbers::pi / 180.0);
  spec.values = kernels::music_scan_omp(noise, sines);
  return spec;
}

std::vector<double> find_peaks(const MusicSpectrum& spec, int d) {
  const auto& v = spec.values;
  std::vector<std::size_t> peaks;
  for (std::size_t i = 1; i + 1 < v.size(); ++i)
    if (v[i] > v[i - 1] && v[i] > v[i + 1]) peaks.push_back(i);
  if (peaks.size() < static_cast<std::size_t>(d)) throw UnderResolvedError(peaks.size(), d);

  std::partial_sort(peaks.begin(), peaks.begin() + d, peaks.end(),
                    [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  peaks.resize(d);

  std::vector<double> out;
  out.reserve(d);
  for (std::size_t i : peaks) {
    const double ym = std::log(v[i - 1]);
    const double y0 = std::log(v[i]);
    const double yp = std::log(v[i + 1]);
    const double denom = ym - 2.0 * y0 + yp;
    double shift = denom < 0.0 ? 0.5 * (ym - yp) / denom : 0.0;
    shift = std::clamp(shift, -0.5, 0.5);
    const double step = spec.grid_deg[i + 1] - spec.grid_deg[i];
    out.push_back(spec.grid_deg[i] + shift * step);
  }
  std::sort(out.begin(), out.end());
  return out;
}

RmseResult rmse(const std::vector<std::optional<std::vector<double>>>& estimates,
                const std::vector<double>& truth) {
  std::vector<double> t(truth);
  std::sort(t.begin(), t.end());
  RmseResult r;
  double sq = 0.0;
  for (const auto& e : estimates) {
    if (!e) {
      ++r.excluded;
      continue;
    }
    if (e->size() != t.size()) throw ParameterError("estimate count must equal source count");
    std::vector<double> s(*e);
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < t.size(); ++i) sq += (s[i] - t[i]) * (s[i] - t[i]);
    ++r.used;
  }
  r.rmse = r.used == 0 ? std::nan("")
                       : std::sqrt(sq / (static_cast<double>(r.used) * static_cast<double>(t.size())));
  return r;
}

DoaOutcome estimate_doa(const SensorArray& s, const SocSet& soc, int d, double grid_step_deg) {
  const VirtualMeasurement z = lag_average(combine_cumulants(soc), s);
  DoaOutcome out;
  out.u = z.u;
  out.spectrum = music(spatial_smoothing(z), d, grid_step_deg,
                       boost::rational_cast<double>(s.d_over_lambda()));
  try {
    out.estimates = find_peaks(out.spectrum, d);
    out.peaks_found = static_cast<std::size_t>(d);
  } catch (const UnderResolvedError& e) {
    out.peaks_found = e.found();
  }
  return out;
}

}  // namespace lrsda
