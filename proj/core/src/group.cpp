#include "htype/group.hpp"

#include <cmath>

#include "htype/errors.hpp"

namespace htype {

namespace {

void check_shape(const HTypeStructure& s, const GroupPoint& a) {
  if (static_cast<int>(a.x.size()) != s.m() || static_cast<int>(a.t.size()) != s.n())
    throw ShapeError("group point dimensions do not match the structure (m, n)");
}

}  // namespace

std::vector<double> GroupPoint::coords() const {
  std::vector<double> c(x);
  c.insert(c.end(), t.begin(), t.end());
  return c;
}

GroupPoint GroupPoint::from_coords(std::span<const double> c, int m, int n) {
  if (static_cast<int>(c.size()) != m + n) throw ShapeError("from_coords: expected m + n coordinates");
  return {std::vector<double>(c.begin(), c.begin() + m), std::vector<double>(c.begin() + m, c.end())};
}

GroupPoint multiply(const HTypeStructure& s, const GroupPoint& a, const GroupPoint& b) {
  check_shape(s, a);
  check_shape(s, b);
  const int m = s.m();
  GroupPoint out{a.x, a.t};
  for (int i = 0; i < m; ++i) out.x[i] += b.x[i];
  const Eigen::Map<const Eigen::VectorXd> ax(a.x.data(), m), bx(b.x.data(), m);
  for (int j = 0; j < s.n(); ++j) out.t[j] += b.t[j] + 0.5 * ax.dot(s.mat(j) * bx);
  return out;
}

GroupPoint inverse(const GroupPoint& a) {
  GroupPoint out{a.x, a.t};
  for (auto& v : out.x) v = -v;
  for (auto& v : out.t) v = -v;
  return out;
}

GroupPoint dilate(double lambda, const GroupPoint& a) {
  if (!(lambda > 0.0)) throw DomainError("dilate: lambda must be positive");
  GroupPoint out{a.x, a.t};
  for (auto& v : out.x) v *= lambda;
  for (auto& v : out.t) v *= lambda * lambda;
  return out;
}

double hom_norm(const GroupPoint& a) {
  double x2 = 0.0, t2 = 0.0;
  for (double v : a.x) x2 += v * v;
  for (double v : a.t) t2 += v * v;
  return std::pow(x2 * x2 / 16.0 + t2, 0.25);
}

nlohmann::json point_to_json(const GroupPoint& a) { return a.coords(); }

GroupPoint point_from_json(const nlohmann::json& j, int m, int n) {
  const auto c = j.get<std::vector<double>>();
  return GroupPoint::from_coords(c, m, n);
}

}  // namespace htype
