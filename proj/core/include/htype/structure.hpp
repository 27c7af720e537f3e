#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "htype/report.hpp"

namespace htype {

/// An H-type group in exponential coordinates: R^m x R^n with the step-two law
/// defined by n skew-symmetric, orthogonal, pairwise anticommuting m x m matrices.
class HTypeStructure {
 public:
  /// Wraps arbitrary matrices without validating the H-type conditions; use
  /// verify_structure() to check them. Throws ShapeError on inconsistent sizes.
  HTypeStructure(int m, std::vector<Eigen::MatrixXd> mats);

  int m() const noexcept { return m_; }
  int n() const noexcept { return static_cast<int>(mats_.size()); }
  /// Homogeneous dimension m + 2n.
  int Q() const noexcept { return m_ + 2 * n(); }
  int dim() const noexcept { return m_ + n(); }

  const std::vector<Eigen::MatrixXd>& mats() const noexcept { return mats_; }
  /// U^(j) for j = 0..n-1 (zero-based).
  const Eigen::MatrixXd& mat(int j) const { return mats_.at(static_cast<std::size_t>(j)); }

  /// True when every entry is an exact integer, so verify_structure_exact() applies.
  bool integral() const;

 private:
  int m_;
  std::vector<Eigen::MatrixXd> mats_;
};

/// Radon-Hurwitz number: for m = odd * 2^(4a+b), 0 <= b <= 3, returns 8a + 2^b.
int radon_hurwitz(int m);

/// Smallest m carrying n anticommuting orthogonal complex structures.
int minimal_dimension(int n);

/// Deterministic integer-valued construction. Throws DegenerateStructureError for n = 0
/// and AdmissibilityError when n > radon_hurwitz(m) - 1.
HTypeStructure construct_structure(int m, int n);

/// One report per condition: skew-symmetry, orthogonality, pairwise anticommutation.
/// Each records the maximal entrywise deviation over all matrices (pairs).
std::vector<CheckReport> verify_structure(const HTypeStructure& s, double tol);

/// Same three conditions evaluated in exact integer arithmetic (requires integral()).
std::vector<CheckReport> verify_structure_exact(const HTypeStructure& s);

/// (J_z v)_j = sum_r sum_i z_r v_i U^(r)_{i,j}.
Eigen::VectorXd j_map(const HTypeStructure& s, std::span<const double> z, std::span<const double> v);

/// {"m": int, "n": int, "mats": [[[int]]]}; non-integral entries are written as reals.
nlohmann::json structure_to_json(const HTypeStructure& s);
HTypeStructure structure_from_json(const nlohmann::json& j);

}  // namespace htype
