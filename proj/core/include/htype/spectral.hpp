#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "htype/quadrature.hpp"
#include "htype/structure.hpp"

namespace htype {

/// Bubble-weighted Legendre products phi_k = U_lambda P_a(alpha) P_b(2 beta - 1) with
///   alpha = (1 - s^4/16 - tau^2) / D,  beta = 2 tau / D,  D = (1 + s^2/4)^2 + tau^2
/// evaluated at (lambda s, lambda^2 tau). Ordered by total degree a + b, then by descending a,
/// so phi_1 = U_lambda and phi_2 = alpha U_lambda is the dilation mode. Bases are nested in K.
struct GalerkinBasis {
  int m = 0;
  int n = 0;
  double lambda = 1.0;
  std::vector<std::pair<int, int>> degrees;
  std::vector<BiradialField> functions;
  std::string recipe;

  std::size_t size() const noexcept { return functions.size(); }
};

/// Throws DomainError for K < 1.
GalerkinBasis default_basis(const HTypeStructure& s, int K, double lambda = 1.0);
GalerkinBasis default_basis(int m, int n, int K, double lambda = 1.0);

/// Stiffness and weighted mass matrices of a basis.
struct Assembly {
  Eigen::MatrixXd A;  ///< int <grad_G phi_k, grad_G phi_l>
  Eigen::MatrixXd B;  ///< int U_lambda^{4/(Q-2)} phi_k phi_l
  double asymmetry = 0.0;  ///< max(|A - A^T|, |B - B^T|)
};

/// Throws AssemblyError on non-finite entries or asymmetry above 1e-13 (relative to the largest entry).
Assembly assemble(const BiradialRule& rule, const GalerkinBasis& basis);

/// The weight U_lambda^{4/(Q-2)} = lambda^2 / D(lambda s, lambda^2 tau).
double mass_weight(double lambda, double s, double tau);

struct GevpResult {
  Eigen::VectorXd values;   ///< ascending
  Eigen::MatrixXd vectors;  ///< B-orthonormal columns
  int sweeps = 0;
};

/// Lower Cholesky factor. Throws FactorizationError at the first non-positive pivot.
Eigen::MatrixXd cholesky(const Eigen::MatrixXd& B);

/// Cyclic Jacobi on a symmetric matrix: eigenvalues ascending, orthonormal eigenvectors.
GevpResult jacobi_eigen(const Eigen::MatrixXd& C);

/// A v = mu B v through B = L L^T and Jacobi on L^{-1} A L^{-T}.
GevpResult solve_gevp(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B);

/// Spectral condition number of a symmetric matrix (infinite unless positive definite).
double condition_number(const Eigen::MatrixXd& B);

/// Relative B-norm residual of projecting f onto span(basis): |f - Pf|_B / |f|_B.
double projection_residual(const BiradialRule& rule, const GalerkinBasis& basis, const BiradialField& f);

struct SpectrumResult {
  int m = 0;
  int n = 0;
  int K = 0;
  int nodes = 0;
  double scale = 0.0;
  double lambda = 1.0;
  std::vector<double> eigenvalues;  ///< ascending
  double condition = 0.0;           ///< of the mass matrix
  double asymmetry = 0.0;
  double off_u_mass = 0.0;          ///< B-norm share of the lowest eigenvector orthogonal to phi_1
  double b_orthogonality = 0.0;     ///< |v1^T B v2|
  double a_orthogonality = 0.0;     ///< |v1^T A v2| / mu_2
  int mu2_multiplicity = 0;         ///< eigenvalues within 1% of m(Q+2)/4, reported only
  Eigen::MatrixXd vectors;
};

nlohmann::json to_json(const SpectrumResult& r);

/// Throws ConditioningError when the mass matrix condition number reaches 1e12.
SpectrumResult spectrum(const HTypeStructure& s, int K, int nodes, double scale = 2.0, double lambda = 1.0);
SpectrumResult spectrum(const BiradialRule& rule, const GalerkinBasis& basis);

}  // namespace htype
