#include <doctest.h>

#include <random>

#include "lrsda/coarray.hpp"
#include "lrsda/error.hpp"
#include "lrsda/geometry.hpp"
#include "oracles.hpp"

using namespace lrsda;

namespace {

std::map<Lag, std::int64_t> ms(std::initializer_list<std::pair<const Lag, std::int64_t>> l) {
  return std::map<Lag, std::int64_t>(l);
}

std::vector<Lag> nonneg(const std::vector<Lag>& v) {
  std::vector<Lag> out;
  for (Lag z : v)
    if (z >= 0) out.push_back(z);
  return out;
}

// Every subset of {0..max} with at most k elements, visited in order.
template <typename F>
void for_each_array(int max_pos, int k, F&& f) {
  std::vector<Position> cur;
  auto rec = [&](auto&& self, Position next) -> void {
    if (!cur.empty()) f(cur);
    if (static_cast<int>(cur.size()) == k) return;
    for (Position p = next; p <= max_pos; ++p) {
      cur.push_back(p);
      self(self, p + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

TEST_CASE("cross sum") {
  CHECK(cross_sum(SensorArray({0, 1}), SensorArray({0, 1})) == std::set<Lag>{0, 1, 2});
  const SensorArray s1({2, 7, 12, 17, 22});
  CHECK(cross_sum(s1, s1) == std::set<Lag>{4, 9, 14, 19, 24, 29, 34, 39, 44});
  CHECK(cross_sum(SensorArray({5}), SensorArray()).empty());
}

TEST_CASE("sum and difference co-arrays") {
  CHECK(sca(SensorArray({0, 1})).counts() == ms({{0, 1}, {1, 2}, {2, 1}}));
  CHECK(sca(SensorArray({0})).counts() == ms({{0, 1}}));
  CHECK(sca(SensorArray({0, 1, 5, 8})).unique_lags() ==
        std::vector<Lag>{0, 1, 2, 5, 6, 8, 9, 10, 13, 16});
  CHECK(dca(SensorArray({0, 1})).counts() == ms({{-1, 1}, {0, 2}, {1, 1}}));
  CHECK(dca(SensorArray({7})).counts() == ms({{0, 1}}));
  CHECK(dca(SensorArray({0, 1, 5, 8})).unique_lags() ==
        std::vector<Lag>{-8, -7, -5, -4, -3, -1, 0, 1, 3, 4, 5, 7, 8});
}

TEST_CASE("cumulant cases") {
  CHECK(soca(SensorArray({0, 1}), SocCase::kNegSum).counts() == ms({{0, 1}, {-1, 2}, {-2, 1}}));
  CHECK(soca(SensorArray({2, 7}), SocCase::kSum).counts() == ms({{4, 1}, {9, 2}, {14, 1}}));
  const SensorArray s({0, 1, 5, 8});
  CHECK(soca(s, SocCase::kRevDiff) == soca(s, SocCase::kDiff).negated());
  CHECK_THROWS_AS(soc_case_from_int(5), ParameterError);
  CHECK(soc_case_from_int(3) == SocCase::kRevDiff);
}

TEST_CASE("SO-ECA of {0,1,5,8}") {
  const SoEca e = so_eca(SensorArray({0, 1, 5, 8}));
  CHECK(nonneg(e.summary.unique_lags) == std::vector<Lag>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 13, 16});
  CHECK(e.summary.holes == std::vector<Lag>{11, 12, 14, 15});
  CHECK(e.summary.u == 10);
  CHECK(e.summary.dof == 21);
  CHECK(e.multiset.total() == 64);
}

TEST_CASE("SO-ECA of LR-SDA (5,4)") {
  const SoEca d2 = so_eca(SensorArray({2, 7, 12, 17, 22, 24, 25, 26, 28}));
  CHECK(d2.summary.u == 24);
  CHECK_FALSE(d2.multiset.contains(25));
  const SoEca d1 = so_eca(SensorArray({1, 6, 11, 16, 21, 23, 24, 25, 27}));
  CHECK(d1.summary.u == 52);
  CHECK(d1.summary.dof == 105);
  CHECK(soeca_extent(SensorArray({1, 6, 11, 16, 21, 23, 24, 25, 27})) == 52);
}

TEST_CASE("summary edge cases") {
  CoArraySummary s = summarize({-2, 0, 2});
  CHECK(s.u == 0);
  CHECK(s.dof == 1);
  CHECK(s.holes == std::vector<Lag>{1});
  s = summarize({-3, -1, 1, 3});
  CHECK(s.dof == 0);
  s = summarize({});
  CHECK(s.dof == 0);
  CHECK(s.holes.empty());
}

TEST_CASE("weight function") {
  CHECK(weight_function(SensorArray({0, 1})) == ms({{-2, 1}, {-1, 4}, {0, 6}, {1, 4}, {2, 1}}));
  CHECK(weight_function(SensorArray({3})) == ms({{-6, 1}, {0, 2}, {6, 1}}));
  CHECK_THROWS_AS(weight_decomposition(SensorArray({0, 1})), ParameterError);
}

TEST_CASE("weight decomposition partitions the ordered pairs") {
  for (const LrSdaParams p : {LrSdaParams{5, 4, 1, 2}, LrSdaParams{5, 4, 1, 1}, LrSdaParams{4, 5, 2, 3},
                              LrSdaParams{3, 1, 0, 1}}) {
    const SensorArray s = build_lr_sda(p);
    const auto w = weight_function(s);
    const WeightDecomposition d = weight_decomposition(s);
    std::map<Lag, std::int64_t> sum;
    for (const auto* part : {&d.inter_ula_1, &d.inter_ula_2, &d.inter_ula_12})
      for (const auto& [z, m] : *part) sum[z] += m;
    CHECK(sum == w);
  }
}

TEST_CASE("redundancy measures") {
  CHECK(redundancy_sum(5) == Rational(15, 11));
  CHECK(redundancy_sum(2) == Rational(3, 5));
  CHECK(redundancy_sum(10) == Rational(55, 21));
  CHECK(redundancy_diff(4, 6) == Rational(1));
  CHECK(redundancy_diff(2, 1) == Rational(1));
  CHECK(redundancy_diff(5, 9) == Rational(10, 9));
  CHECK_THROWS_AS(redundancy_diff(3, 0), ParameterError);

  const Redundancy r = redundancy_soeca(SensorArray({1, 6, 11, 16, 21, 23, 24, 25, 27}));
  CHECK_FALSE(r.infinite);
  CHECK(r.value == Rational(81, 52));
  CHECK(redundancy_soeca(SensorArray({1, 2})).value == Rational(1));
  CHECK(redundancy_soeca(build_lr_sda({2, 1, 0, 1})).value == Rational(9, 8));
  CHECK(redundancy_soeca(build_lr_sda({2, 2, 1, 0})).infinite);
}

TEST_CASE("redundancy lower bound and extent bound") {
  CHECK(redundancy_lower_bound(1) == doctest::Approx(1.2122).epsilon(1e-4));
  CHECK(redundancy_lower_bound(2) == doctest::Approx(1.6163).epsilon(1e-4));
  CHECK(redundancy_lower_bound(1000000) == doctest::Approx(2.4244).epsilon(1e-4));
  CHECK(asymptotic_u_bound(1) == doctest::Approx(2.650).epsilon(1e-3));
  CHECK(asymptotic_u_bound(10) == doctest::Approx(1 + 200 / redundancy_lower_bound(10)));
  CHECK(asymptotic_u_bound(10) == doctest::Approx(91.74).epsilon(1e-3));
}

TEST_CASE("oracle equivalence over all small arrays") {
  long checked = 0;
  for_each_array(30, 3, [&](const std::vector<Position>& p) {
    const SensorArray s(p);
    const auto naive = oracle::soeca_weights({p.begin(), p.end()});
    const SoEca e = so_eca(s);
    REQUIRE(e.multiset.counts() == naive);
    REQUIRE(e.summary.u == oracle::consecutive_extent(oracle::keys(naive)));
    REQUIRE(soeca_extent(s) == e.summary.u);
    ++checked;
  });
  CHECK(checked > 4000);
}

TEST_CASE("property suite on random arrays") {
  std::mt19937_64 gen(20261016);
  std::uniform_int_distribution<int> size(1, 6);
  std::uniform_int_distribution<int> pos(0, 30);
  std::uniform_int_distribution<int> shift(0, 40);
  for (int it = 0; it < 3000; ++it) {
    std::set<Position> ps;
    const int n = size(gen);
    while (static_cast<int>(ps.size()) < n) ps.insert(pos(gen));
    const SensorArray s(std::vector<Position>(ps.begin(), ps.end()));
    const auto w = weight_function(s);

    std::int64_t total = 0;
    for (const auto& [z, m] : w) {
      total += m;
      REQUIRE(w.count(-z));
      REQUIRE(w.at(-z) == m);
    }
    REQUIRE(total == 4 * n * n);

    REQUIRE(soca(s, SocCase::kRevDiff) == soca(s, SocCase::kDiff).negated());
    REQUIRE(soca(s, SocCase::kNegSum) == soca(s, SocCase::kSum).negated());

    std::set<Lag> joined;
    for (Lag z : dca(s).unique_lags()) joined.insert(z);
    for (Lag z : sca(s).unique_lags()) {
      joined.insert(z);
      joined.insert(-z);
    }
    const auto u = so_eca(s).summary.unique_lags;
    REQUIRE(std::vector<Lag>(joined.begin(), joined.end()) == u);

    const Position c = shift(gen);
    const SensorArray t = s.shifted(c);
    REQUIRE(dca(t) == dca(s));
    const LagMultiset sums = sca(s);
    std::map<Lag, std::int64_t> moved;
    for (const auto& [z, m] : sums.counts()) moved[z + 2 * c] = m;
    REQUIRE(sca(t).counts() == moved);

    const CoArraySummary sum = so_eca(s).summary;
    for (Lag z = -sum.u; z <= sum.u; ++z) REQUIRE(std::binary_search(u.begin(), u.end(), z));
    if (sum.u < u.back()) REQUIRE_FALSE(std::binary_search(u.begin(), u.end(), sum.u + 1));
    REQUIRE(sum.holes.empty() == (static_cast<Lag>(u.size()) == u.back() - u.front() + 1));
  }
}
