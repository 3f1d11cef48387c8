#pragma once

// Counter-based sampling of the standard simplex. Sample s under seed
// depends only on (seed, s), so any partition of the index range into chunks
// reproduces the same stream.

#include <cstdint>
#include <string>
#include <vector>

namespace latcover::sampling {

/// Common denominator of every sampled coordinate.
inline constexpr int kDyadicBits = 53;
inline constexpr std::int64_t kDyadicOne = std::int64_t{1} << kDyadicBits;

/// 64-bit mix of (seed, counter); stateless.
std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t counter);

/// Uniform double in (0, 1] built from 53 random bits.
double unit_open_closed(std::uint64_t bits);

enum class SimplexSampler {
  // lambda_i = U_i / sum U_j with i.i.d. U(0,1]. Not uniform on the simplex;
  // this is the direct "random point, then normalize" procedure.
  NormalizedCube,
  // lambda_i = E_i / sum E_j with i.i.d. Exp(1): uniform on the simplex, so
  // hit rates estimate volume fractions.
  Uniform,
};

const char* to_string(SimplexSampler s);
/// Accepts "normalized-cube" and "uniform". Throws ParseError.
SimplexSampler parse_sampler(const std::string& name);

/// Point of the standard simplex in R^{parts} as integers m_i >= 0
/// with sum m_i = 2^53, i.e. lambda_i = m_i / 2^53 exactly.
std::vector<std::int64_t> dyadic_simplex_point(std::uint64_t seed, std::uint64_t index, std::size_t parts,
                                               SimplexSampler sampler = SimplexSampler::Uniform);

}  // namespace latcover::sampling
