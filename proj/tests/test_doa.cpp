#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "lrsda/doa.hpp"
#include "lrsda/error.hpp"
#include "lrsda/geometry.hpp"
#include "lrsda/harness.hpp"

using namespace lrsda;

namespace {

VirtualMeasurement injected(const SensorArray& s, const std::vector<double>& th, double noise = 0.0) {
  return lag_average(combine_cumulants(analytic_soc(s, th, std::vector<double>(th.size(), 1.0), noise)), s);
}

std::vector<double> eigenvalues(const Eigen::MatrixXcd& r) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(r);
  std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(v.rbegin(), v.rend());
  return v;
}

double argmax_deg(const MusicSpectrum& s) {
  return s.grid_deg[std::max_element(s.values.begin(), s.values.end()) - s.values.begin()];
}

}  // namespace

TEST_CASE("lag averaging needs a non-trivial segment") {
  const SensorArray one({1});
  const SocSet soc = analytic_soc(one, {10.0}, {1.0});
  CHECK_THROWS_AS(lag_average(combine_cumulants(soc), one), DegenerateArrayError);
  CHECK(weight_function(one).at(0) == 2);
  const SensorArray two({1, 2});
  CHECK_THROWS_AS(lag_average(combine_cumulants(soc), two), ParameterError);
}

TEST_CASE("averaging counts are the weight function on the segment") {
  const SensorArray s = build_lr_sda({5, 4, 1, 1});
  const VirtualMeasurement z = injected(s, {5.0});
  REQUIRE(z.u == 52);
  REQUIRE(z.values.size() == 105);
  const auto w = weight_function(s);
  std::int64_t total = 0;
  for (const auto& [lag, m] : w) {
    total += m;
    if (lag >= -z.u && lag <= z.u) CHECK(z.averaging_counts[lag + z.u] == m);
  }
  CHECK(total == 4 * 81);
}

TEST_CASE("exact single source gives the lag phase") {
  const SensorArray s = build_lr_sda({5, 4, 1, 1});
  for (double th : {-47.0, 0.0, 12.5, 71.0}) {
    const VirtualMeasurement z = injected(s, {th});
    const double k = std::numbers::pi * std::sin(th * std::numbers::pi / 180.0);
    for (Lag lag = -z.u; lag <= z.u; ++lag) REQUIRE(std::abs(z.at(lag) - std::polar(1.0, k * lag)) < 1e-10);
  }
}

TEST_CASE("smoothed matrix is Hermitian PSD with the right rank") {
  std::mt19937_64 gen(3);
  std::normal_distribution<double> g;
  VirtualMeasurement z;
  z.u = 9;
  for (int i = 0; i < 19; ++i) z.values.emplace_back(g(gen), g(gen));
  const auto r = spatial_smoothing(z);
  CHECK(r.rows() == 10);
  CHECK((r - r.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(eigenvalues(r).back() > -1e-10);

  const SensorArray s = build_lr_sda({3, 3, 1, 2});
  auto ev = eigenvalues(spatial_smoothing(injected(s, {20.0})));
  CHECK(ev[1] < 1e-8 * ev[0]);
  ev = eigenvalues(spatial_smoothing(injected(s, {-40.0, 5.0, 33.0})));
  CHECK(ev[2] > 1e-6 * ev[0]);
  CHECK(ev[3] < 1e-8 * ev[0]);
}

TEST_CASE("music on exact cumulants") {
  const SensorArray s = build_lr_sda({3, 3, 1, 2});
  const auto r1 = spatial_smoothing(injected(s, {0.0}));
  const auto spec = music(r1, 1);
  CHECK(spec.grid_deg.front() == doctest::Approx(-89.9));
  CHECK(spec.grid_deg.back() == doctest::Approx(89.9));
  CHECK(spec.grid_deg.size() == spec.values.size());
  CHECK(std::abs(argmax_deg(spec)) <= kDefaultGridStepDeg);
  CHECK(argmax_deg(music(5.0 * r1, 1)) == argmax_deg(spec));
  for (double v : spec.values) REQUIRE(std::isfinite(v));

  const auto two = find_peaks(music(spatial_smoothing(injected(s, {-10.0, 10.0})), 2), 2);
  CHECK(std::abs(two[0] + 10.0) <= kDefaultGridStepDeg);
  CHECK(std::abs(two[1] - 10.0) <= kDefaultGridStepDeg);

  CHECK_THROWS_AS(music(r1, static_cast<int>(r1.rows())), IdentifiabilityError);
  CHECK_THROWS_AS(music(r1, 1, 0.0), ParameterError);
}

TEST_CASE("peak picking") {
  MusicSpectrum mono;
  for (int i = 0; i < 50; ++i) {
    mono.grid_deg.push_back(i);
    mono.values.push_back(1.0 + i);
  }
  try {
    find_peaks(mono, 1);
    FAIL("expected under-resolution");
  } catch (const UnderResolvedError& e) {
    CHECK(e.found() == 0);
    CHECK(e.wanted() == 1);
  }

  MusicSpectrum sym;
  for (int i = -100; i <= 100; ++i) {
    const double x = i * 0.1;
    sym.grid_deg.push_back(x);
    sym.values.push_back(std::exp(-(x - 3.03) * (x - 3.03)) + std::exp(-(x + 3.03) * (x + 3.03)));
  }
  const auto p = find_peaks(sym, 2);
  CHECK(p[0] == doctest::Approx(-p[1]).epsilon(1e-9));
  CHECK(std::abs(p[1] - 3.03) < 0.02);
  CHECK_THROWS_AS(find_peaks(sym, 3), UnderResolvedError);
}

TEST_CASE("rmse") {
  CHECK(rmse({std::vector<double>{1.0, 2.0}}, {1.0, 2.0}).rmse == 0.0);
  CHECK(rmse({std::vector<double>{1.0}}, {0.0}).rmse == 1.0);
  CHECK(rmse({std::vector<double>{0.0}, std::vector<double>{2.0}}, {0.0}).rmse ==
        doctest::Approx(std::sqrt(2.0)));
  const auto r = rmse({std::nullopt, std::vector<double>{3.0, 1.0}}, {1.0, 3.0});
  CHECK(r.rmse == 0.0);
  CHECK(r.excluded == 1);
  CHECK(r.used == 1);
  CHECK(std::isnan(rmse({std::nullopt}, {0.0}).rmse));
  CHECK_THROWS_AS(rmse({std::vector<double>{1.0}}, {0.0, 1.0}), ParameterError);
}

TEST_CASE("exact cumulants: random scenarios with up to U sources are recovered") {
  std::mt19937_64 gen(77);
  const SensorArray s = build_lr_sda(harness::best_lr_sda(6));
  const Lag u = soeca_extent(s);
  REQUIRE(u >= 10);
  std::uniform_int_distribution<int> count(1, static_cast<int>(u));
  std::uniform_real_distribution<double> angle(-60.0, 60.0);
  for (int it = 0; it < 20; ++it) {
    const int d = count(gen);
    std::vector<double> th;
    while (static_cast<int>(th.size()) < d) {
      const double a = angle(gen);
      bool far = true;
      for (double b : th) far = far && std::abs(a - b) > 2.0;
      if (far) th.push_back(a);
    }
    std::sort(th.begin(), th.end());
    const auto out = estimate_doa(s, analytic_soc(s, th, std::vector<double>(d, 1.0)), d);
    REQUIRE(out.estimates.has_value());
    for (int i = 0; i < d; ++i) REQUIRE(std::abs((*out.estimates)[i] - th[i]) <= kDefaultGridStepDeg);
  }
}

TEST_CASE("more sources than sensors") {
  const SensorArray s = build_lr_sda(harness::best_lr_sda(11));
  REQUIRE(s.size() == 11);
  const auto th = uniform_angles(20);
  const auto out = estimate_doa(s, analytic_soc(s, th, std::vector<double>(20, 1.0)), 20);
  REQUIRE(out.estimates.has_value());
  CHECK(out.peaks_found == 20);
  for (int i = 0; i < 20; ++i) CHECK(std::abs((*out.estimates)[i] - th[i]) <= kDefaultGridStepDeg);
}

TEST_CASE("single source at high SNR") {
  const SensorArray s = build_lr_sda(harness::best_lr_sda(11));
  Scenario sc;
  sc.angles_deg = {0.0};
  sc.snr_db = 20.0;
  sc.snapshots = 10000;
  sc.seed = 4;
  const auto out = estimate_doa(s, estimate_soc(simulate(s, sc)), 1);
  REQUIRE(out.estimates.has_value());
  CHECK(std::abs(out.estimates->front()) < 0.1);
}
