#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "htype/quadrature.hpp"
#include "htype/report.hpp"
#include "htype/spectral.hpp"
#include "htype/structure.hpp"

namespace htype {

struct MinimizeOptions {
  int max_iterations = 400;
  /// Stop once |F_new - F_old| <= tol * F_old.
  double tol = 1e-13;
  /// Armijo trial step along the energy-metric descent direction.
  double initial_step = 0.5;
  double armijo = 1e-4;
  /// Halvings allowed per iteration before the run is declared stuck.
  int max_rejections = 60;
  /// Galerkin basis size for the profile.
  int K = 15;
  /// Required agreement of basis jets with the closed-form bubble derivatives at the nodes.
  double jet_gate = 1e-6;
};

/// Profile u = sum c_k phi_k over the default basis, normalised so int |u|^p U^{2Q/(Q-2)-p} = 1.
struct MinimizeResult {
  int m = 0;
  int n = 0;
  double p = 0.0;
  double lambda_p = 0.0;
  GalerkinBasis basis;
  Eigen::VectorXd coefficients;
  std::vector<double> profile;  ///< node values, flattened with BiradialRule::index
  int iterations = 0;
  bool converged = false;
  std::vector<double> history;
  double constraint = 0.0;
  /// int U^{(Q+2)/(Q-2)} u / int U^{2Q/(Q-2)}.
  double lambda_coeff = 0.0;
  /// int |grad_G (u - lambda_coeff U)|^2.
  double deviation = 0.0;
  /// int |u|^p U^{2Q/(Q-2)-p} omega_{m+n+1}.
  double moment_dilation = 0.0;

  BiradialField profile_field() const;
};

nlohmann::json to_json(const MinimizeResult& r);

/// Energy-metric gradient descent on F_p with Armijo backtracking; trial steps producing negative
/// node values are rejected. `init` defaults to U. Throws DomainError for p outside
/// [2, 2Q/(Q-2)) and NonConvergenceError when a step cannot be found or iterations run out.
MinimizeResult minimize_subcritical(const HTypeStructure& s, double p, const BiradialRule& rule,
                                    const MinimizeOptions& opts = {},
                                    const std::optional<BiradialField>& init = std::nullopt);

/// Same, warm-started from explicit basis coefficients.
MinimizeResult minimize_subcritical(const HTypeStructure& s, double p, const BiradialRule& rule,
                                    const MinimizeOptions& opts, const Eigen::VectorXd& start);

/// Ascending p-list, each run warm-started from the previous minimiser.
std::vector<MinimizeResult> sweep_p(const HTypeStructure& s, const std::vector<double>& p_list,
                                    const BiradialRule& rule, const MinimizeOptions& opts = {});

/// |moment_dilation| <= tol. Moments for i <= m+n vanish by parity and are recorded in params.
CheckReport moment_check(const MinimizeResult& r, double tol = 1e-5);

/// Curvature of h -> F_p(u (1 + h omega_{m+n+1})) at h = 0 by a symmetric three-point probe;
/// passes when curvature >= -tol.
CheckReport second_variation_check(const BiradialRule& rule, const MinimizeResult& r, double step = 1e-3,
                                   double tol = 1e-4);

/// Max relative error of phi_1 jets against closed-form U_s, U_tau over the rule's nodes.
double jet_gate_error(const BiradialRule& rule, const GalerkinBasis& basis);

}  // namespace htype
