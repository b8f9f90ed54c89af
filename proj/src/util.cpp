#include "zmc/util.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

namespace zmc {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::pair<double, double> parse_range(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("range must look like a:b, got \"" + s + "\"");
  const char* lo_begin = s.data();
  const char* lo_end = s.data() + colon;
  const char* hi_begin = s.data() + colon + 1;
  const char* hi_end = s.data() + s.size();
  double lo = 0, hi = 0;
  const auto r1 = std::from_chars(lo_begin, lo_end, lo);
  const auto r2 = std::from_chars(hi_begin, hi_end, hi);
  if (r1.ec != std::errc() || r1.ptr != lo_end || r2.ec != std::errc() || r2.ptr != hi_end)
    throw std::invalid_argument("range must look like a:b, got \"" + s + "\"");
  return {lo, hi};
}

std::vector<double> sample_ys(double delta, int count, std::uint64_t seed) {
  UniformSampler rng(seed);
  std::vector<double> ys;
  ys.reserve(static_cast<std::size_t>(count));
  while (static_cast<int>(ys.size()) < count) {
    const double y = rng.range(-delta, delta);
    if (std::abs(y) > 1e-6 * delta) ys.push_back(y);
  }
  return ys;
}

}  // namespace zmc
