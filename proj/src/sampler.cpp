#include "latcover/sampler.hpp"

#include "latcover/arith.hpp"

#include <algorithm>
#include <cmath>

namespace latcover::sampling {

namespace {

constexpr std::uint64_t splitmix_finalize(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t counter) {
  const std::uint64_t key = splitmix_finalize(seed + 0x9e3779b97f4a7c15ULL);
  return splitmix_finalize(splitmix_finalize(counter * 0x9e3779b97f4a7c15ULL + key) ^ key);
}

double unit_open_closed(std::uint64_t bits) {
  return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
}

const char* to_string(SimplexSampler s) {
  return s == SimplexSampler::Uniform ? "uniform" : "normalized-cube";
}

SimplexSampler parse_sampler(const std::string& name) {
  if (name == "uniform") return SimplexSampler::Uniform;
  if (name == "normalized-cube") return SimplexSampler::NormalizedCube;
  throw ParseError("unknown sampler '" + name + "' (expected uniform or normalized-cube)");
}

std::vector<std::int64_t> dyadic_simplex_point(std::uint64_t seed, std::uint64_t index, std::size_t parts,
                                               SimplexSampler sampler) {
  std::vector<double> e(parts);
  double total = 0;
  for (std::size_t i = 0; i < parts; ++i) {
    const double u = unit_open_closed(counter_hash(seed, index * parts + i));
    e[i] = sampler == SimplexSampler::Uniform ? -std::log(u) : u;
    total += e[i];
  }
  std::vector<std::int64_t> m(parts);
  std::int64_t sum = 0;
  std::size_t largest = 0;
  for (std::size_t i = 0; i < parts; ++i) {
    m[i] = static_cast<std::int64_t>(std::floor(e[i] / total * static_cast<double>(kDyadicOne)));
    m[i] = std::clamp<std::int64_t>(m[i], 0, kDyadicOne);
    sum += m[i];
    if (m[i] > m[largest]) largest = i;
  }
  // Rounding residue goes to the largest coordinate so the sum is exact.
  m[largest] += kDyadicOne - sum;
  return m;
}

}  // namespace latcover::sampling
