#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lrsda/geometry.hpp"
#include "lrsda/sensor_array.hpp"

namespace lrsda {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// lcm of the arithmetic sequence beta1, beta1 + beta2, ..., beta1 + (n-1) beta2,
/// folded pairwise left to right. All inputs must be >= 1.
BigInt lcm_arith_sequence(const BigInt& beta1, const BigInt& beta2, long n);

/// Smallest positive rational that is an integer multiple of every input:
/// lcm(numerators) / gcd(denominators), inputs in lowest terms.
BigRational lcm_of_rationals(const std::vector<BigRational>& values);

/// Per-block quantities for the three LR-SDA sub-arrays.
struct BlockLcm {
  BigInt printed;         // falling-factorial ratio as printed (block 1: Algorithm 1)
  BigInt true_lcm;        // lcm of the actual block positions
  BigInt block_product;   // product of the actual block positions
  bool empty_block = false;
};

struct ReconstructionReport {
  BigRational lcm_value{0};   // lcm of (lambda/d) / p_n over non-zero positions
  bool passes = false;        // lcm_value >= 2
  bool zero_position_excluded = false;

  // LR-SDA only.
  bool has_blocks = false;
  bool degenerate = false;    // delta = 0: the sequence algorithm does not apply
  std::string notice;
  BlockLcm blocks[3];
  BigInt combined_lcm{0};     // nested-gcd combination of the printed block values
  BigInt min_k{0};            // smallest k with k >= 2 * combined / (lambda / d)
  std::vector<BigRational> coefficients;  // c_n = k * p_n / LCM_block(n)
};

/// lambda/d is `wavelength_units` (2 for half-wavelength spacing); position p
/// contributes the term (lambda/d) / p.
ReconstructionReport check_reconstruction(const SensorArray& s,
                                          const BigRational& wavelength_units = BigRational(2));

ReconstructionReport lr_sda_reconstruction(const LrSdaParams& params,
                                           const BigRational& wavelength_units = BigRational(2));

/// Falling product lo+1 .. hi, i.e. hi! / lo!; 1 when hi <= lo.
BigInt factorial_ratio(long hi, long lo);

}  // namespace lrsda
