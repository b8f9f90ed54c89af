#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace zmc {

// Shortest decimal string that round-trips to the same double. Used for all
// file and report output so identical inputs give byte-identical artifacts.
std::string format_double(double v);

// Parses "a:b" into a pair of doubles; throws std::invalid_argument.
std::pair<double, double> parse_range(const std::string& s);

// Deterministic uniform doubles from a fixed 64-bit seed. The generator and
// the bits->double mapping are pinned here (not distribution<>) so sampled
// values are identical across standard library implementations.
class UniformSampler {
 public:
  explicit UniformSampler(std::uint64_t seed) : gen_(seed) {}
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }  // [0, 1)
  double range(double lo, double hi) { return lo + (hi - lo) * unit(); }

 private:
  std::mt19937_64 gen_;
};

// count points of [-delta, delta] bounded away from 0 (the bound checks
// divide by powers of |y|).
std::vector<double> sample_ys(double delta, int count, std::uint64_t seed);

}  // namespace zmc
