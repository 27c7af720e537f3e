#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "htype/group.hpp"
#include "htype/structure.hpp"

namespace htype::cli {

/// Platform-independent uniform double in [0, 1) from the top 53 bits of a 64-bit draw.
class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : engine_(seed) {}
  double operator()() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double operator()(double lo, double hi) { return lo + (hi - lo) * (*this)(); }

 private:
  std::mt19937_64 engine_;
};

/// Points with homogeneous norm uniform in (0, max_norm]: a direction drawn from the cube,
/// dilated onto the chosen norm.
std::vector<GroupPoint> sample_points(const HTypeStructure& s, int count, std::uint64_t seed, double max_norm = 5.0);

}  // namespace htype::cli
