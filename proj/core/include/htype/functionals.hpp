#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "htype/quadrature.hpp"
#include "htype/report.hpp"

namespace htype {

// Biradial profiles used throughout: the bubble, its dilates, the Hardy weight and the
// dilation mode omega_{m+n+1}. With D(s, tau) = (1 + s^2/4)^2 + tau^2:

/// lambda^{(Q-2)/2} D(lambda s, lambda^2 tau)^{-(Q-2)/4}; lambda = 1 is U itself.
BiradialField bubble_profile(int m, int n, double lambda = 1.0);
/// 1 / D = U^{4/(Q-2)}.
BiradialField hardy_weight_profile();
/// (1 - s^4/16 - tau^2) / D.
BiradialField dilation_mode_profile();
BiradialField product(BiradialField a, BiradialField b);
BiradialField linear_combination(double a, BiradialField f, double b, BiradialField g);

/// 4^{-2n/Q} m (Q-2) pi^{(m+n)/Q} (Gamma((m+n)/2) / Gamma(m+n))^{2/Q}.
/// Throws AdmissibilityError for inadmissible (m, n).
double sharp_constant(int m, int n);

/// numerator / denominator, with the exponent already applied to the denominator.
struct QuotientReport {
  std::string kind;
  double numerator = 0.0;
  double denominator = 0.0;
  double quotient = 0.0;
  nlohmann::json params = nlohmann::json::object();
};

nlohmann::json to_json(const QuotientReport& q);

/// int |grad_G u|^2 / (int |u|^{2Q/(Q-2)})^{(Q-2)/Q}.
QuotientReport fs_quotient(const BiradialRule& rule, const BiradialField& u);
/// int |grad_G u|^2 / int u^2 / D.
QuotientReport hardy_quotient(const BiradialRule& rule, const BiradialField& u);
/// F_p(u) = int |grad_G u|^2 / (int |u|^p U^{2Q/(Q-2)-p})^{2/p}, 2 <= p < 2Q/(Q-2).
QuotientReport subcritical_quotient(const BiradialRule& rule, const BiradialField& u, double p);

/// The critical exponent 2Q/(Q-2).
double critical_exponent(int m, int n);

struct MomentResult {
  double value = 0.0;
  /// True when the moment vanishes identically because omega_i is odd and the density biradial.
  bool by_parity = false;
};

/// int |u|^p U^{2Q/(Q-2)-p} omega_i. Indices i <= m+n are zero by parity; i = m+n+1 is integrated.
MomentResult moment(const BiradialRule& rule, const BiradialField& u, double p, int i);

/// sum_i int |grad_G(u omega_i)|^2 vs int |grad_G u|^2 + m int u^2 / D at (m, n) = (2, 1),
/// using the biradial nodes, both signs of t and `angles` trapezoid nodes in the x-plane.
/// The left side is computed with the jet calculus on lifted points.
CheckReport lemma34_check(const BiradialRule& rule, const BiradialField& u, int angles = 8, double tol_rel = 1e-4);

/// Subcritical inequality (int |u|^p U^{2Q/(Q-2)-p})^{2/p} <= C int |grad_G u|^2, with C built
/// from the Hoelder split into Hardy and critical terms. `sharp` selects C from m(Q-2)/4 and
/// S_{m,n}; otherwise C uses the Hardy and Folland-Stein quotients of u itself. The sharp bound is
/// attained at U, so its tolerance must cover the quadrature error of the rule.
CheckReport subcritical_sobolev_check(const BiradialRule& rule, const BiradialField& u, double p, bool sharp,
                                      double tol_rel = 1e-12);

}  // namespace htype
