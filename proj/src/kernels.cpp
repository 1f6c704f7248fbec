#include "lrsda/kernels.hpp"

#include <cmath>
#include <numbers>

#include <omp.h>

namespace lrsda::kernels {

namespace {

DenseHistogram make_histogram(std::span<const Position> p) {
  DenseHistogram h;
  const std::int64_t pmax = p.empty() ? 0 : p.back();
  h.offset = 2 * pmax;
  h.counts.assign(static_cast<std::size_t>(4 * pmax + 1), 0);
  return h;
}

// Adds the 4N contributions of row a (paired with every b) to `counts`.
inline void add_row(std::span<const Position> p, std::size_t a, std::int64_t offset,
                    std::int64_t* counts) {
  const Position pa = p[a];
  for (const Position pb : p) {
    ++counts[offset + pa + pb];
    ++counts[offset + pa - pb];
    ++counts[offset - pa + pb];
    ++counts[offset - pa - pb];
  }
}

}  // namespace

DenseHistogram soeca_histogram_serial(std::span<const Position> p) {
  DenseHistogram h = make_histogram(p);
  for (std::size_t a = 0; a < p.size(); ++a) add_row(p, a, h.offset, h.counts.data());
  return h;
}

DenseHistogram soeca_histogram_omp(std::span<const Position> p) {
  DenseHistogram h = make_histogram(p);
  const auto n = static_cast<std::int64_t>(p.size());
  if (n * n < 4096) {
    for (std::int64_t a = 0; a < n; ++a) add_row(p, a, h.offset, h.counts.data());
    return h;
  }
  const std::size_t len = h.counts.size();
#pragma omp parallel
  {
    std::vector<std::int64_t> local(len, 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t a = 0; a < n; ++a) add_row(p, a, h.offset, local.data());
#pragma omp critical
    for (std::size_t i = 0; i < len; ++i) h.counts[i] += local[i];
  }
  return h;
}

namespace {

// Column c of all four cumulant matrices, accumulated over snapshots in
// order k = 0..K-1 so serial and parallel results match bit for bit.
inline void soc_column(const Eigen::MatrixXcd& x, Eigen::Index c, Eigen::MatrixXcd out[4]) {
  const Eigen::Index n = x.rows();
  const Eigen::Index k_count = x.cols();
  const double inv_k = 1.0 / static_cast<double>(k_count);
  for (Eigen::Index r = 0; r < n; ++r) {
    cd s1{}, s2{}, s3{}, s4{};
    for (Eigen::Index k = 0; k < k_count; ++k) {
      const cd xr = x(r, k);
      const cd xc = x(c, k);
      const cd xr_c = std::conj(xr);
      const cd xc_c = std::conj(xc);
      s1 += xr * xc;
      s2 += xr * xc_c;
      s3 += xr_c * xc;
      s4 += xr_c * xc_c;
    }
    out[0](r, c) = s1 * inv_k;
    out[1](r, c) = s2 * inv_k;
    out[2](r, c) = s3 * inv_k;
    out[3](r, c) = s4 * inv_k;
  }
}

void resize_out(Eigen::Index n, Eigen::MatrixXcd out[4]) {
  for (int j = 0; j < 4; ++j) out[j].resize(n, n);
}

}  // namespace

void soc_serial(const Eigen::MatrixXcd& x, Eigen::MatrixXcd out[4]) {
  resize_out(x.rows(), out);
  for (Eigen::Index c = 0; c < x.rows(); ++c) soc_column(x, c, out);
}

void soc_omp(const Eigen::MatrixXcd& x, Eigen::MatrixXcd out[4]) {
  resize_out(x.rows(), out);
  const Eigen::Index n = x.rows();
#pragma omp parallel for schedule(dynamic)
  for (Eigen::Index c = 0; c < n; ++c) soc_column(x, c, out);
}

namespace {

inline double music_point(const Eigen::MatrixXcd& en, double u) {
  const Eigen::Index m = en.rows();
  const Eigen::Index q = en.cols();
  Eigen::VectorXcd v(m);
  for (Eigen::Index k = 0; k < m; ++k)
    v(k) = std::polar(1.0, std::numbers::pi * static_cast<double>(k) * u);
  double acc = 0.0;
  for (Eigen::Index j = 0; j < q; ++j) {
    const cd proj = en.col(j).dot(v);  // conj(en_j) . v
    acc += std::norm(proj);
  }
  return 1.0 / std::max(acc, 1e-300);
}

}  // namespace

std::vector<double> music_scan_serial(const Eigen::MatrixXcd& noise_basis,
                                      std::span<const double> sines) {
  std::vector<double> out(sines.size());
  for (std::size_t i = 0; i < sines.size(); ++i) out[i] = music_point(noise_basis, sines[i]);
  return out;
}

std::vector<double> music_scan_omp(const Eigen::MatrixXcd& noise_basis,
                                   std::span<const double> sines) {
  std::vector<double> out(sines.size());
  const auto n = static_cast<std::int64_t>(sines.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) out[i] = music_point(noise_basis, sines[i]);
  return out;
}

}  // namespace lrsda::kernels
