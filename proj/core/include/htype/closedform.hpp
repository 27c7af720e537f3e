#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "htype/calculus.hpp"
#include "htype/group.hpp"
#include "htype/jet.hpp"
#include "htype/report.hpp"
#include "htype/structure.hpp"

namespace htype {

/// Translation-dilation parameters (lambda, eta) of the bubble orbit.
struct BubbleParams {
  double lambda = 1.0;
  GroupPoint eta;

  static BubbleParams standard(int m, int n) { return {1.0, GroupPoint::identity(m, n)}; }
};

namespace detail {

template <class T>
T squared_norm(std::span<const T> v) {
  T acc = T(0.0);
  for (const auto& e : v) acc += e * e;
  return acc;
}

/// D = (1 + |x|^2/4)^2 + |t|^2 for coordinates [x..., t...].
template <class T>
T bubble_denominator(int m, std::span<const T> coords) {
  const T a = 1.0 + 0.25 * squared_norm(coords.first(static_cast<std::size_t>(m)));
  return a * a + squared_norm(coords.subspan(static_cast<std::size_t>(m)));
}

}  // namespace detail

/// U = D^{-(Q-2)/4}. `exponent` overrides (Q-2)/4 (negative controls only).
template <class T>
T bubble_t(const HTypeStructure& s, std::span<const T> coords, std::optional<double> exponent = {}) {
  using std::pow;
  const double e = exponent.value_or((s.Q() - 2) / 4.0);
  return pow(detail::bubble_denominator(s.m(), coords), -e);
}

/// lambda^{(Q-2)/2} U(delta_lambda(eta^{-1} o xi)) evaluated through the group law.
template <class T>
T bubble_family_t(const HTypeStructure& s, const BubbleParams& p, std::span<const T> coords,
                  std::optional<double> exponent = {}) {
  const int m = s.m();
  std::vector<T> z = left_translate<T>(s, inverse(p.eta), coords);
  for (int i = 0; i < static_cast<int>(z.size()); ++i) z[i] = z[i] * (i < m ? p.lambda : p.lambda * p.lambda);
  return std::pow(p.lambda, (s.Q() - 2) / 2.0) * bubble_t<T>(s, z, exponent);
}

/// Expanded closed form of U_{lambda,eta} with every argument generic, so the
/// parameters themselves can carry jet perturbations.
template <class T>
T bubble_family_expanded_t(const HTypeStructure& s, const T& lambda, std::span<const T> y, std::span<const T> w,
                           std::span<const T> x, std::span<const T> t) {
  using std::pow;
  const int m = s.m();
  const int n = s.n();
  T dx2 = T(0.0);
  for (int i = 0; i < m; ++i) dx2 += (x[i] - y[i]) * (x[i] - y[i]);
  const T l2 = lambda * lambda;
  const T a = 1.0 + 0.25 * l2 * dx2;
  T c2 = T(0.0);
  for (int r = 0; r < n; ++r) {
    const auto& u = s.mat(r);
    T yux = T(0.0);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (u(i, j) != 0.0) yux += y[i] * u(i, j) * x[j];
    const T c = t[r] - w[r] - 0.5 * yux;
    c2 += c * c;
  }
  const double q = s.Q();
  return pow(lambda, (q - 2.0) / 2.0) * pow(a * a + l2 * l2 * c2, -(q - 2.0) / 4.0);
}

/// omega_i, i = 1..m+n+1, from the closed-form parameter derivatives of U_{lambda,eta}:
///   i <= m:       W [ (1 + |x|^2/4) x_i + sum_r t_r (U^(r) x)_i ]
///   i = m + r:    2 t_r W
///   i = m + n + 1: W (1 - |x|^4/16 - |t|^2)
/// with W = U^{4/(Q-2)} = 1/D.
template <class T>
T omega_t(const HTypeStructure& s, int i, std::span<const T> coords) {
  const int m = s.m();
  const int n = s.n();
  const auto x = coords.first(static_cast<std::size_t>(m));
  const auto t = coords.subspan(static_cast<std::size_t>(m));
  const T x2 = detail::squared_norm(x);
  const T a = 1.0 + 0.25 * x2;
  const T t2 = detail::squared_norm(t);
  const T w = 1.0 / (a * a + t2);
  if (i >= 1 && i <= m) {
    const int j = i - 1;
    T rot = T(0.0);
    for (int r = 0; r < n; ++r) {
      const auto& u = s.mat(r);
      for (int k = 0; k < m; ++k)
        if (u(j, k) != 0.0) rot += t[r] * u(j, k) * x[k];
    }
    return w * (a * x[j] + rot);
  }
  if (i > m && i <= m + n) return 2.0 * t[i - m - 1] * w;
  return w * (1.0 - x2 * x2 / 16.0 - t2);
}

double bubble(const HTypeStructure& s, const GroupPoint& xi);
/// Group-law route.
double bubble_family(const HTypeStructure& s, const BubbleParams& p, const GroupPoint& xi);
/// Expanded-formula route; independent of the group-law code path.
double bubble_family_expanded(const HTypeStructure& s, const BubbleParams& p, const GroupPoint& xi);

/// Throws DomainError unless 1 <= i <= m+n+1.
double omega(const HTypeStructure& s, int i, const GroupPoint& xi);
std::vector<double> omega_all(const HTypeStructure& s, const GroupPoint& xi);

ScalarField bubble_field(const HTypeStructure& s, const BubbleParams& p = {}, std::optional<double> exponent = {});
/// U * omega_i at lambda = 1, eta = 0.
ScalarField omega_bubble_field(const HTypeStructure& s, int i);

/// Delta_G U_{lambda,eta} + m(Q-2)/4 U_{lambda,eta}^{(Q+2)/(Q-2)}. A non-empty `exponent`
/// replaces the bubble exponent (Q-2)/4 and is only used for negative controls.
double yamabe_residual(const HTypeStructure& s, const BubbleParams& p, const GroupPoint& xi,
                       std::optional<double> exponent = {});

/// Delta_G(U omega_i) + mu U^{4/(Q-2)} (U omega_i) with mu = m(Q+2)/4 unless overridden.
double eigen_residual(const HTypeStructure& s, int i, const GroupPoint& xi, std::optional<double> mu = {});

/// dU_{lambda,eta}/dy_j (m), dU/dw_r (n), dU/dlambda (1) at lambda = 1, eta = 0, by jets in the parameters.
std::vector<double> bubble_parameter_gradient(const HTypeStructure& s, const GroupPoint& xi);

/// omega_i computed from bubble_parameter_gradient with the normalisations 4/(Q-2) U^{-1}
/// and 2/(Q-2) U^{-1}. Oracle for the closed forms.
std::vector<double> omega_from_parameter_jets(const HTypeStructure& s, const GroupPoint& xi);

/// sum |dU/dy_j|^2 + sum |dU/dw_r|^2 + 1/4 |dU/dlambda|^2 vs (Q-2)^2/16 U^2, rel tol 1e-10.
CheckReport lemma22_check(const HTypeStructure& s, const GroupPoint& xi, double tol_rel = 1e-10);

}  // namespace htype
