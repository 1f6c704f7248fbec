#include "lrsda/reconstruction.hpp"

#include "lrsda/error.hpp"

namespace lrsda {

namespace mp = boost::multiprecision;

namespace {

BigInt big_gcd(const BigInt& a, const BigInt& b) { return mp::gcd(a, b); }

BigInt big_lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return mp::abs(a * b) / big_gcd(a, b);
}

}  // namespace

BigInt lcm_arith_sequence(const BigInt& beta1, const BigInt& beta2, long n) {
  if (beta1 < 1) throw ParameterError("beta1 must be a positive integer");
  if (beta2 < 1) throw ParameterError("beta2 must be a positive integer");
  if (n < 1) throw ParameterError("sequence length must be >= 1");
  BigInt result = beta1;
  for (long i = 1; i < n; ++i) result = big_lcm(result, beta1 + i * beta2);
  return result;
}

BigRational lcm_of_rationals(const std::vector<BigRational>& values) {
  if (values.empty()) throw ParameterError("lcm of an empty set is undefined");
  BigInt num = 1;
  BigInt den = 0;
  for (const auto& v : values) {
    if (v <= 0) throw ParameterError("lcm inputs must be positive");
    num = big_lcm(num, mp::numerator(v));
    den = big_gcd(den, mp::denominator(v));
  }
  return BigRational(num, den);
}

BigInt factorial_ratio(long hi, long lo) {
  BigInt out = 1;
  for (long x = lo + 1; x <= hi; ++x) out *= x;
  return out;
}

ReconstructionReport check_reconstruction(const SensorArray& s,
                                          const BigRational& wavelength_units) {
  if (wavelength_units <= 0) throw ParameterError("lambda/d must be positive");
  std::vector<BigRational> terms;
  ReconstructionReport r;
  for (Position p : s.positions()) {
    if (p == 0) {
      r.zero_position_excluded = true;
      continue;
    }
    terms.emplace_back(wavelength_units / BigRational(p));
  }
  if (terms.empty()) throw ParameterError("array has no non-zero sensor position");
  r.lcm_value = lcm_of_rationals(terms);
  r.passes = r.lcm_value >= 2;
  return r;
}

namespace {

BlockLcm block_from_positions(const std::vector<Position>& pos, BigInt printed) {
  BlockLcm b;
  b.printed = std::move(printed);
  b.empty_block = pos.empty();
  b.true_lcm = 1;
  b.block_product = 1;
  for (Position p : pos) {
    b.true_lcm = big_lcm(b.true_lcm, BigInt(p));
    b.block_product *= p;
  }
  return b;
}

}  // namespace

ReconstructionReport lr_sda_reconstruction(const LrSdaParams& params,
                                           const BigRational& wavelength_units) {
  const SensorArray s = build_lr_sda(params);
  ReconstructionReport r = check_reconstruction(s, wavelength_units);
  r.has_blocks = true;
  if (params.delta == 0) {
    r.degenerate = true;
    r.notice = "delta = 0: the arithmetic-sequence lcm needs a positive first term";
    return r;
  }

  std::vector<Position> block[3];
  for (std::size_t i = 0; i < s.size(); ++i) block[s.subarray()[i] - 1].push_back(s.positions()[i]);

  const long n1 = params.n1, n2 = params.n2, eta = params.eta, delta = params.delta;
  const long base = (n1 - 1) * (n2 + 1);
  r.blocks[0] = block_from_positions(block[0], lcm_arith_sequence(delta, n2 + 1, n1));
  r.blocks[1] = block_from_positions(block[1], factorial_ratio(base + n2, base + eta + 1));
  // An empty third block (eta = 0) contributes the neutral element 1.
  r.blocks[2] = block_from_positions(
      block[2], eta == 0 ? BigInt(1)
                         : factorial_ratio(n1 * (n2 + 1) + eta + delta, n1 * (n2 + 1) + 1 + delta));
  if (eta == 0) r.notice = "eta = 0: third sub-array empty, its block lcm taken as 1";

  const BigInt& l1 = r.blocks[0].printed;
  const BigInt& l2 = r.blocks[1].printed;
  const BigInt& l3 = r.blocks[2].printed;
  const BigInt l12 = l1 * l2 / big_gcd(l1, l2);
  r.combined_lcm = l12 * l3 / big_gcd(l12, l3);

  // k >= 2 * lcm / (lambda/d), smallest integer.
  const BigRational bound = BigRational(2 * r.combined_lcm) / wavelength_units;
  BigInt k = mp::numerator(bound) / mp::denominator(bound);
  if (BigRational(k) < bound) ++k;
  if (k < 1) k = 1;
  r.min_k = k;

  for (std::size_t i = 0; i < s.size(); ++i) {
    const BigInt& block_lcm = r.blocks[s.subarray()[i] - 1].printed;
    r.coefficients.emplace_back(BigRational(r.min_k * s.positions()[i], block_lcm));
  }
  return r;
}

}  // namespace lrsda
