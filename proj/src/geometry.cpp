#include "lrsda/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "lrsda/error.hpp"

namespace lrsda {

int default_eta(int n2) { return (n2 + 1) / 2 - 1; }

int max_delta(int n2) { return (n2 + 1) / 2; }

void validate(const LrSdaParams& p) {
  if (p.n1 < 1) throw ParameterError("n1 must be >= 1");
  if (p.n2 < 1) throw ParameterError("n2 must be >= 1");
  if (p.eta < 0) throw ParameterError("eta must be >= 0");
  if (p.eta > p.n2 - 1) throw ParameterError("eta must be <= n2 - 1");
  if (p.delta < 0) throw ParameterError("delta must be >= 0");
  if (p.delta > max_delta(p.n2)) throw ParameterError("delta must be <= floor((n2 + 1) / 2)");
}

SensorArray build_lr_sda(const LrSdaParams& p) {
  validate(p);
  const Position n1 = p.n1, n2 = p.n2, eta = p.eta, delta = p.delta;
  const Position step = n2 + 1;
  const Position base = (n1 - 1) * step;
  std::vector<Position> pos;
  std::vector<int> tag;
  pos.reserve(p.sensor_count());
  for (Position i = 0; i < n1; ++i) {
    pos.push_back(delta + i * step);
    tag.push_back(1);
  }
  for (Position x = base + eta + 1 + delta; x <= base + n2 + delta; ++x) {
    pos.push_back(x);
    tag.push_back(2);
  }
  for (Position x = n1 * step + 1 + delta; x <= n1 * step + eta + delta; ++x) {
    pos.push_back(x);
    tag.push_back(3);
  }
  SensorArray s(std::move(pos), "lr-sda");
  s.set_subarrays(std::move(tag));
  return s;
}

DeltaChoice select_delta(int n1, int n2, int eta) {
  validate(LrSdaParams{n1, n2, eta, 0});
  DeltaChoice best{0, -1};
  for (int d = 0; d <= max_delta(n2); ++d) {
    const Lag u = soeca_extent(build_lr_sda(LrSdaParams{n1, n2, eta, d}));
    if (u >= best.u) best = DeltaChoice{d, u};
  }
  return best;
}

LrSdaParams with_best_delta(LrSdaParams params) {
  params.delta = select_delta(params.n1, params.n2, params.eta).delta;
  return params;
}

namespace {

// round-half-up(num / den) for positive den
int round_half_up(int num, int den) { return static_cast<int>(std::floor((2.0 * num + den) / (2.0 * den))); }

SplitCandidate make_candidate(int n, int n2, int eta, SplitBranch branch) {
  n2 = std::clamp(n2, 1, n - 1);
  SplitCandidate c{branch, LrSdaParams{n - n2, n2, eta, 0}, false};
  if (eta > n2 - 1) {
    c.params.eta = default_eta(n2);
    c.eta_fallback = true;
  }
  return c;
}

}  // namespace

std::vector<SplitCandidate> optimal_split(int n) {
  if (n < 2) throw ParameterError("optimal_split needs n >= 2");
  std::vector<SplitCandidate> out;
  const int n2_one = round_half_up(n - 1, 2);
  out.push_back(make_candidate(n, n2_one, 1, SplitBranch::kEtaOne));
  const int n2_two = round_half_up(2 * n - 1, 4);
  out.push_back(make_candidate(n, n2_two, std::max(2, default_eta(std::max(n2_two, 1))),
                               SplitBranch::kEtaAtLeastTwo));
  return out;
}

double min_sensors_for_aperture(double e, EtaBranch branch, double delta) {
  if (branch == EtaBranch::kOne) {
    if (e < 2.0 * delta) throw ParameterError("aperture target requires e >= 2*delta");
    return std::sqrt(2.0) * std::sqrt(e - 2.0 * delta) / 2.0;
  }
  if (e + 3.0 - 2.0 * delta < 0.0)
    throw ParameterError("aperture target requires e >= 2*delta - 3");
  return (-1.0 + std::sqrt(2.0) * std::sqrt(e + 3.0 - 2.0 * delta)) / 2.0;
}

std::int64_t claimed_dof(const LrSdaParams& p, DofFormula formula) {
  const std::int64_t n1 = p.n1, n2 = p.n2, eta = p.eta, delta = p.delta;
  const std::int64_t n = n1 + n2;
  switch (formula) {
    case DofFormula::kTheorem1: return 4 * n1 * (n2 + 1) + 4 * eta + 4 * delta + 1;
    case DofFormula::kEta1: return 4 * n1 * n2 + 4 * n1 + 4 * delta + 1;
    case DofFormula::kEtaGe2: return 4 * n1 * n2 + 4 * n1 + 4 * eta + 4 * delta + 1;
    case DofFormula::kTableF: return -4 * n2 * n2 + (4 * n - 4) * n2 + 4 * n + 4 * delta + 1;
  }
  return 0;
}

Comparator comparator_from_string(const std::string& name) {
  std::string k;
  for (char ch : name)
    if (std::isalnum(static_cast<unsigned char>(ch))) k += static_cast<char>(std::tolower(ch));
  if (k == "tsena") return Comparator::kTsEna;
  if (k == "genams") return Comparator::kGenams;
  if (k == "nadis") return Comparator::kNadis;
  if (k == "tnai") return Comparator::kTnaI;
  if (k == "tnaii") return Comparator::kTnaII;
  throw ParameterError("unknown comparator array '" + name + "'");
}

std::string to_string(Comparator c) {
  switch (c) {
    case Comparator::kTsEna: return "TS-ENA";
    case Comparator::kGenams: return "GENAMS";
    case Comparator::kNadis: return "NADiS";
    case Comparator::kTnaI: return "TNA-I";
    case Comparator::kTnaII: return "TNA-II";
  }
  return "?";
}

std::string to_string(DofFormula f) {
  switch (f) {
    case DofFormula::kTheorem1: return "theorem1";
    case DofFormula::kEta1: return "eta1";
    case DofFormula::kEtaGe2: return "etaGe2";
    case DofFormula::kTableF: return "tableF";
  }
  return "?";
}

std::int64_t comparator_dof(Comparator kind, const ComparatorSizing& s) {
  const std::int64_t n = s.n, n1 = s.n1, n2 = s.n2;
  auto need_pair = [&] {
    if (n1 < 1 || n2 < 1) throw ParameterError(to_string(kind) + " needs n1, n2 >= 1");
  };
  auto need_n = [&] {
    if (n < 1) throw ParameterError(to_string(kind) + " needs n >= 1");
  };
  switch (kind) {
    case Comparator::kTsEna: need_pair(); return 2 * (n1 + 1) * n2 + 7 * n1 + 1;
    case Comparator::kNadis: need_n(); return n * n + n - 1;
    case Comparator::kTnaI: need_pair(); return 4 * n1 * n2 + 4 * n1 - 3;
    case Comparator::kTnaII: need_pair(); return 4 * n1 * n2 + 4 * n1 + 2 * n2 - 3;
    case Comparator::kGenams: {
      need_n();
      // Evaluated as printed in rationals; truncated once at the end.
      const std::int64_t p3 = 4 * ((n + 5) / 6);
      const Rational q = Rational(p3 + 1, 4);
      const Rational h = Rational(p3 - 1, 2);
      const Rational inner = 4 * q + 2 * h * q + Rational(p3 * (n - p3)) - 2 - h;
      const Rational total = 2 * inner;
      return total.numerator() / total.denominator();
    }
  }
  throw ParameterError("unknown comparator");
}

}  // namespace lrsda
