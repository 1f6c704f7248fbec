#include "lrsda/signalsim.hpp"

#include <cmath>
#include <numbers>

#include "lrsda/error.hpp"
#include "lrsda/kernels.hpp"
#include "lrsda/rng.hpp"

namespace lrsda {

namespace {

double deg2rad(double deg) { return deg * std::numbers::pi / 180.0; }

double phase_scale(const SensorArray& s) {
  return 2.0 * std::numbers::pi * boost::rational_cast<double>(s.d_over_lambda());
}

}  // namespace

void Scenario::validate() const {
  if (angles_deg.empty()) throw ParameterError("scenario needs at least one source");
  for (std::size_t i = 0; i < angles_deg.size(); ++i) {
    if (!(angles_deg[i] > -90.0 && angles_deg[i] < 90.0))
      throw ParameterError("source angles must lie in (-90, 90) degrees");
    if (i > 0 && angles_deg[i] <= angles_deg[i - 1])
      throw ParameterError("source angles must be strictly increasing");
  }
  if (snapshots < 1) throw ParameterError("snapshot count must be >= 1");
  if (!(source_power > 0.0)) throw ParameterError("source power must be positive");
}

double Scenario::noise_variance() const {
  if (std::isinf(snr_db) && snr_db > 0) return 0.0;
  return source_power / std::pow(10.0, snr_db / 10.0);
}

std::vector<double> uniform_angles(int count, double lo_deg, double hi_deg) {
  if (count < 1) throw ParameterError("source count must be >= 1");
  if (count == 1) return {0.5 * (lo_deg + hi_deg)};
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) out[i] = lo_deg + (hi_deg - lo_deg) * i / (count - 1);
  return out;
}

Eigen::VectorXcd steering_vector(const SensorArray& s, double theta_deg) {
  const double k = phase_scale(s) * std::sin(deg2rad(theta_deg));
  Eigen::VectorXcd a(static_cast<Eigen::Index>(s.size()));
  for (std::size_t n = 0; n < s.size(); ++n)
    a(n) = std::polar(1.0, k * static_cast<double>(s.positions()[n]));
  return a;
}

SnapshotMatrix simulate(const SensorArray& s, const Scenario& sc) {
  sc.validate();
  const auto n = static_cast<Eigen::Index>(s.size());
  const auto d = static_cast<Eigen::Index>(sc.angles_deg.size());
  Eigen::MatrixXcd a(n, d);
  for (Eigen::Index i = 0; i < d; ++i) a.col(i) = steering_vector(s, sc.angles_deg[i]);

  const double amp = std::sqrt(sc.source_power);
  const double noise_sd = std::sqrt(sc.noise_variance() / 2.0);
  Rng rng(sc.seed);
  Eigen::MatrixXcd x(n, sc.snapshots);
  Eigen::VectorXd src(d);
  // Draw order per snapshot: D source amplitudes, then N complex noise samples.
  for (long k = 0; k < sc.snapshots; ++k) {
    for (Eigen::Index i = 0; i < d; ++i) src(i) = amp * rng.normal();
    const Eigen::VectorXcd y = a * src.cast<cd>();
    for (Eigen::Index r = 0; r < n; ++r) {
      cd v = y(r);
      if (noise_sd > 0.0) {
        const double re = rng.normal();
        const double im = rng.normal();
        v += cd(noise_sd * re, noise_sd * im);
      }
      x(r, k) = v;
    }
  }
  return SnapshotMatrix{std::move(x), s};
}

SocSet estimate_soc(const SnapshotMatrix& x) {
  if (x.values.cols() < 1) throw ParameterError("need at least one snapshot");
  SocSet out;
  kernels::soc_omp(x.values, out.r);
  return out;
}

SocSet analytic_soc(const SensorArray& s, const std::vector<double>& angles_deg,
                    const std::vector<double>& powers, double noise_var) {
  if (angles_deg.size() != powers.size())
    throw ParameterError("one power per source angle is required");
  const auto n = static_cast<Eigen::Index>(s.size());
  SocSet out;
  for (auto& m : out.r) m = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t i = 0; i < angles_deg.size(); ++i) {
    const Eigen::VectorXcd a = steering_vector(s, angles_deg[i]);
    const Eigen::VectorXcd ac = a.conjugate();
    out.r[0] += powers[i] * a * a.transpose();
    out.r[1] += powers[i] * a * ac.transpose();
    out.r[2] += powers[i] * ac * a.transpose();
    out.r[3] += powers[i] * ac * ac.transpose();
  }
  out.r[1] += noise_var * Eigen::MatrixXcd::Identity(n, n);
  out.r[2] += noise_var * Eigen::MatrixXcd::Identity(n, n);
  return out;
}

CombinedCumulantVector combine_cumulants(const SocSet& soc) {
  const Eigen::Index n = soc.r[0].rows();
  CombinedCumulantVector c;
  c.n = n;
  c.values.resize(4 * n * n);
  for (int j = 0; j < 4; ++j)
    c.values.segment(j * n * n, n * n) = Eigen::Map<const Eigen::VectorXcd>(soc.r[j].data(), n * n);
  return c;
}

Eigen::MatrixXcd uncombine(const CombinedCumulantVector& c, int case_j) {
  soc_case_from_int(case_j);
  const Eigen::VectorXcd seg = c.segment(case_j);
  return Eigen::Map<const Eigen::MatrixXcd>(seg.data(), c.n, c.n);
}

Lag entry_lag(const SensorArray& s, SocCase c, Eigen::Index row, Eigen::Index col) {
  return case_lag(c, s.positions()[row], s.positions()[col]);
}

Eigen::VectorXcd virtual_steering(const SensorArray& s, double theta_deg, SocCase c) {
  const auto n = static_cast<Eigen::Index>(s.size());
  const double k = phase_scale(s) * std::sin(deg2rad(theta_deg));
  Eigen::VectorXcd b(n * n);
  for (Eigen::Index col = 0; col < n; ++col)
    for (Eigen::Index row = 0; row < n; ++row)
      b(n * col + row) = std::polar(1.0, k * static_cast<double>(entry_lag(s, c, row, col)));
  return b;
}

}  // namespace lrsda
