#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "htype/cli/sampling.hpp"
#include "htype/group.hpp"
#include "htype/structure.hpp"

namespace htype::testing {

inline std::vector<GroupPoint> points(const HTypeStructure& s, int count, std::uint64_t seed, double max_norm = 5.0) {
  return cli::sample_points(s, count, seed, max_norm);
}

inline double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace htype::testing
