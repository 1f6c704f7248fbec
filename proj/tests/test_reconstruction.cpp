#include <doctest.h>

#include <numeric>

#include "collision.hpp"
#include "lrsda/error.hpp"
#include "lrsda/geometry.hpp"
#include "lrsda/reconstruction.hpp"
#include "oracles.hpp"

using namespace lrsda;

TEST_CASE("lcm of an arithmetic sequence") {
  CHECK(lcm_arith_sequence(2, 3, 3) == 40);
  CHECK(lcm_arith_sequence(1, 1, 1) == 1);
  CHECK_THROWS_AS(lcm_arith_sequence(3, 0, 2), ParameterError);
  CHECK_THROWS_AS(lcm_arith_sequence(0, 1, 2), ParameterError);
  CHECK_THROWS_AS(lcm_arith_sequence(1, 1, 0), ParameterError);
  CHECK(lcm_arith_sequence(1, 1, 30) == BigInt("2329089562800"));
}

TEST_CASE("arithmetic-sequence lcm agrees with trial multiples") {
  for (int b1 = 1; b1 <= 12; ++b1)
    for (int b2 = 1; b2 <= 12; ++b2)
      for (int n = 1; n <= 6; ++n) {
        std::vector<oracle::Int> seq;
        for (int i = 0; i < n; ++i) seq.push_back(b1 + i * b2);
        REQUIRE(lcm_arith_sequence(b1, b2, n) == oracle::lcm_by_trial(seq));
      }
}

TEST_CASE("lcm of rationals") {
  CHECK(lcm_of_rationals({BigRational(2), BigRational(1)}) == 2);
  CHECK(lcm_of_rationals({BigRational(2, 3), BigRational(1, 2)}) == 2);
  CHECK(lcm_of_rationals({BigRational(1)}) == 1);
  CHECK(lcm_of_rationals({BigRational(3, 4), BigRational(5, 6)}) == BigRational(15, 2));
  CHECK_THROWS_AS(lcm_of_rationals({BigRational(0)}), ParameterError);
  CHECK_THROWS_AS(lcm_of_rationals({BigRational(-1, 2)}), ParameterError);
  CHECK_THROWS_AS(lcm_of_rationals({}), ParameterError);
}

TEST_CASE("rational lcm is the smallest common multiple") {
  const std::vector<std::pair<int, int>> pool = {{1, 1}, {2, 1}, {2, 3}, {1, 2}, {3, 4},
                                                 {5, 6}, {4, 9}, {6, 5}, {7, 3}, {2, 5}};
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i; j < pool.size(); ++j)
      for (std::size_t k = j; k < pool.size(); ++k) {
        std::vector<BigRational> v;
        std::vector<oracle::Int> num, den;
        for (auto idx : {i, j, k}) {
          v.emplace_back(pool[idx].first, pool[idx].second);
          num.push_back(pool[idx].first);
          den.push_back(pool[idx].second);
        }
        const BigRational got = lcm_of_rationals(v);
        for (const auto& x : v) {
          const BigRational q = got / x;
          REQUIRE(boost::multiprecision::denominator(q) == 1);
        }
        const auto [a, q] = oracle::rational_lcm_by_trial(num, den, 300, 60);
        REQUIRE(got == BigRational(a, q));
      }
}

TEST_CASE("reconstruction condition on small arrays") {
  auto r = check_reconstruction(SensorArray({1, 2}));
  CHECK(r.lcm_value == 2);
  CHECK(r.passes);
  r = check_reconstruction(SensorArray({2}));
  CHECK(r.lcm_value == 1);
  CHECK_FALSE(r.passes);
  r = check_reconstruction(SensorArray({1}));
  CHECK(r.lcm_value == 2);
  CHECK(r.passes);
  r = check_reconstruction(SensorArray({0, 1, 5, 8}));
  CHECK(r.zero_position_excluded);
  CHECK(r.passes);
  CHECK_THROWS_AS(check_reconstruction(SensorArray({0})), ParameterError);
}

TEST_CASE("passing is exactly gcd of the positions being 1") {
  for (oracle::Int a = 1; a <= 20; ++a)
    for (oracle::Int b = a + 1; b <= 24; ++b)
      for (oracle::Int c = b + 1; c <= 28; c += 3) {
        const auto r = check_reconstruction(SensorArray({a, b, c}));
        REQUIRE(r.lcm_value == BigRational(2, std::gcd(std::gcd(a, b), c)));
        REQUIRE(r.passes == (std::gcd(std::gcd(a, b), c) == 1));
      }
}

TEST_CASE("failing arrays alias on the angle grid, passing ones do not") {
  for (const std::vector<oracle::Int>& p :
       {std::vector<oracle::Int>{2}, {2, 4}, {2, 4, 6, 10}, {5, 10, 25}, {4, 12, 20}}) {
    INFO("array of " << p.size() << " starting at " << p.front());
    REQUIRE_FALSE(check_reconstruction(SensorArray(p)).passes);
    const auto hit = collision::find(p);
    REQUIRE(hit.has_value());
    CHECK(collision::steering_gap(p, hit->first, hit->second) < 1e-9);
  }
  for (const std::vector<oracle::Int>& p :
       {std::vector<oracle::Int>{1, 2}, {1, 2, 5}, {4, 5, 9}, {1, 6, 11, 16, 21, 23, 24, 25, 27}}) {
    REQUIRE(check_reconstruction(SensorArray(p)).passes);
    CHECK_FALSE(collision::find(p).has_value());
  }
}

TEST_CASE("LR-SDA block quantities") {
  auto r = lr_sda_reconstruction({2, 1, 0, 1});
  CHECK(r.blocks[0].printed == 3);
  CHECK(r.blocks[2].printed == 1);
  CHECK(r.blocks[2].empty_block);
  CHECK_FALSE(r.notice.empty());
  CHECK(r.passes);

  r = lr_sda_reconstruction({5, 4, 1, 2});
  CHECK(r.blocks[0].printed == lcm_arith_sequence(2, 5, 5));
  CHECK(r.blocks[1].printed == 552);
  CHECK(r.blocks[1].block_product == 15600);
  CHECK(r.blocks[1].true_lcm == 7800);
  CHECK(r.blocks[2].block_product == 28);
  CHECK(r.passes);

  r = lr_sda_reconstruction({5, 4, 1, 0});
  CHECK(r.degenerate);
  CHECK_FALSE(r.notice.empty());
  CHECK(r.coefficients.empty());
}

TEST_CASE("coefficients satisfy the defining identity") {
  for (const LrSdaParams p : {LrSdaParams{5, 4, 1, 1}, LrSdaParams{5, 4, 1, 2}, LrSdaParams{4, 5, 2, 3},
                              LrSdaParams{10, 9, 4, 4}, LrSdaParams{14, 14, 6, 6}}) {
    const auto r = lr_sda_reconstruction(p);
    const SensorArray s = build_lr_sda(p);
    REQUIRE(r.coefficients.size() == s.size());
    CHECK(BigRational(r.min_k) >= BigRational(2 * r.combined_lcm) / 2);
    CHECK(BigRational(r.min_k - 1) < BigRational(2 * r.combined_lcm) / 2);
    for (std::size_t i = 0; i < s.size(); ++i) {
      const BigInt& block = r.blocks[s.subarray()[i] - 1].printed;
      CHECK(r.coefficients[i] * BigRational(block) == BigRational(r.min_k * s.positions()[i]));
    }
    for (const auto& b : r.blocks) {
      if (b.empty_block) continue;
      CHECK(b.block_product % b.true_lcm == 0);
    }
  }
}

TEST_CASE("factorial ratios are falling products") {
  CHECK(factorial_ratio(26, 23) == 15600);
  CHECK(factorial_ratio(24, 22) == 552);
  CHECK(factorial_ratio(5, 5) == 1);
  CHECK(factorial_ratio(3, 7) == 1);
  CHECK(factorial_ratio(100, 98) == 9900);
}
