// Serial vs OpenMP timings for the hot kernels.
//
//   bench_kernels [repeats]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>

#include <omp.h>

#include "lrsda/geometry.hpp"
#include "lrsda/harness.hpp"
#include "lrsda/kernels.hpp"
#include "lrsda/rng.hpp"

using namespace lrsda;
using Clock = std::chrono::steady_clock;

namespace {

double best_of(int repeats, const std::function<void()>& f) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = Clock::now();
    f();
    best = std::min(best, std::chrono::duration<double, std::milli>(Clock::now() - t0).count());
  }
  return best;
}

void row(const char* name, double serial_ms, double omp_ms) {
  std::printf("%-28s %12.3f %12.3f %8.2fx\n", name, serial_ms, omp_ms, serial_ms / omp_ms);
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::max(1, std::atoi(argv[1])) : 5;
  std::printf("threads=%d repeats=%d\n", omp_get_max_threads(), repeats);
  std::printf("%-28s %12s %12s %9s\n", "kernel", "serial_ms", "omp_ms", "speedup");

  const SensorArray big = build_lr_sda(harness::best_lr_sda(400));
  row("soeca_histogram N=400",
      best_of(repeats, [&] { kernels::soeca_histogram_serial(big.positions()); }),
      best_of(repeats, [&] { kernels::soeca_histogram_omp(big.positions()); }));

  Rng rng(7);
  Eigen::MatrixXcd x(11, 10000);
  for (Eigen::Index j = 0; j < x.cols(); ++j)
    for (Eigen::Index i = 0; i < x.rows(); ++i) x(i, j) = {rng.normal(), rng.normal()};
  Eigen::MatrixXcd out[4];
  row("soc N=11 K=10000", best_of(repeats, [&] { kernels::soc_serial(x, out); }),
      best_of(repeats, [&] { kernels::soc_omp(x, out); }));

  const Eigen::Index m = 60;
  Eigen::MatrixXcd basis(m, m - 20);
  for (Eigen::Index j = 0; j < basis.cols(); ++j)
    for (Eigen::Index i = 0; i < m; ++i) basis(i, j) = {rng.normal(), rng.normal()};
  std::vector<double> sines;
  for (double t = -kGridLimitDeg; t <= kGridLimitDeg + 1e-9; t += kDefaultGridStepDeg)
    sines.push_back(std::sin(t * std::numbers::pi / 180.0));
  row("music_scan M=60 grid=0.05", best_of(repeats, [&] { kernels::music_scan_serial(basis, sines); }),
      best_of(repeats, [&] { kernels::music_scan_omp(basis, sines); }));

  const SensorArray s = build_lr_sda(harness::best_lr_sda(11));
  Scenario sc;
  sc.angles_deg = uniform_angles(20);
  sc.snapshots = 10000;
  sc.seed = 3;
  const int trials = 4;
  row("doa trials x4 (N=11, D=20)",
      best_of(1, [&] { harness::run_trials_serial(s, sc, trials, kDefaultGridStepDeg); }),
      best_of(1, [&] { harness::run_trials(s, sc, trials, kDefaultGridStepDeg); }));
  return 0;
}
