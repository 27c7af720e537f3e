#pragma once

#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "htype/structure.hpp"

namespace htype {

/// Element (x, t) of G = R^m x R^n. Plain data; structure-dependent operations take S explicitly.
struct GroupPoint {
  std::vector<double> x;
  std::vector<double> t;

  static GroupPoint identity(int m, int n) {
    return {std::vector<double>(static_cast<std::size_t>(m), 0.0),
            std::vector<double>(static_cast<std::size_t>(n), 0.0)};
  }
  /// Coordinates concatenated as [x..., t...].
  std::vector<double> coords() const;
  static GroupPoint from_coords(std::span<const double> c, int m, int n);

  friend bool operator==(const GroupPoint&, const GroupPoint&) = default;
};

/// a o b with t_j = a.t_j + b.t_j + 1/2 <a.x, U^(j) b.x>.
GroupPoint multiply(const HTypeStructure& s, const GroupPoint& a, const GroupPoint& b);
GroupPoint inverse(const GroupPoint& a);
/// (lambda x, lambda^2 t); throws DomainError for lambda <= 0.
GroupPoint dilate(double lambda, const GroupPoint& a);
/// (|x|^4/16 + |t|^2)^(1/4).
double hom_norm(const GroupPoint& a);

/// Left translation eta o xi with xi given as generic scalars laid out [x..., t...].
/// Used to differentiate fields composed with group translations.
template <class T>
std::vector<T> left_translate(const HTypeStructure& s, const GroupPoint& eta, std::span<const T> xi) {
  const int m = s.m();
  const int n = s.n();
  std::vector<T> out(xi.begin(), xi.end());
  for (int i = 0; i < m; ++i) out[i] = xi[i] + eta.x[i];
  for (int j = 0; j < n; ++j) {
    const auto& u = s.mat(j);
    T acc = T(0.0);
    for (int a = 0; a < m; ++a) {
      if (eta.x[a] == 0.0) continue;
      for (int b = 0; b < m; ++b)
        if (u(a, b) != 0.0) acc += (eta.x[a] * u(a, b)) * xi[b];
    }
    out[m + j] = xi[m + j] + eta.t[j] + 0.5 * acc;
  }
  return out;
}

/// Points serialise as [x..., t...]; m and n come from the caller.
nlohmann::json point_to_json(const GroupPoint& a);
GroupPoint point_from_json(const nlohmann::json& j, int m, int n);

}  // namespace htype
