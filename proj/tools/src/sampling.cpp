#include "htype/cli/sampling.hpp"

namespace htype::cli {

std::vector<GroupPoint> sample_points(const HTypeStructure& s, int count, std::uint64_t seed, double max_norm) {
  Uniform draw(seed);
  std::vector<GroupPoint> out;
  out.reserve(static_cast<std::size_t>(count));
  while (static_cast<int>(out.size()) < count) {
    GroupPoint p = GroupPoint::identity(s.m(), s.n());
    for (auto& v : p.x) v = draw(-1.0, 1.0);
    for (auto& v : p.t) v = draw(-1.0, 1.0);
    const double norm = hom_norm(p);
    const double target = max_norm * (1.0 - draw());  // in (0, max_norm]
    if (norm < 1e-3) continue;
    out.push_back(dilate(target / norm, p));
  }
  return out;
}

}  // namespace htype::cli
