#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "htype/group.hpp"
#include "htype/jet.hpp"
#include "htype/structure.hpp"

namespace htype {

/// A twice-differentiable u: G -> R evaluated on jet-extended coordinates [x..., t...].
/// The callable must be reentrant: it is invoked concurrently from several threads.
class ScalarField {
 public:
  using Fn = std::function<Jet(std::span<const Jet>)>;

  ScalarField() = default;
  explicit ScalarField(Fn fn) : fn_(std::move(fn)) {}

  Jet operator()(std::span<const Jet> coords) const { return fn_(coords); }
  double operator()(const GroupPoint& p) const;
  explicit operator bool() const noexcept { return static_cast<bool>(fn_); }

 private:
  Fn fn_;
};

/// Value, Euclidean gradient and Hessian in coordinates [x..., t...].
struct EuclidJet {
  double value = 0.0;
  Eigen::VectorXd gradient;
  Eigen::MatrixXd hessian;
  bool finite = true;
  std::string diagnostic;  ///< names the first non-finite entry, empty when finite
};

/// Exact derivatives by seeding coordinate pairs (i, j), i <= j, along the two jet directions.
EuclidJet euclid_derivatives(const ScalarField& u, const GroupPoint& xi);

/// X_j u = du/dx_j + 1/2 sum_k (sum_i U^(k)_{i,j} x_i) du/dt_k, j = 1..m.
Eigen::VectorXd horizontal_gradient(const HTypeStructure& s, const ScalarField& u, const GroupPoint& xi);
Eigen::VectorXd horizontal_gradient(const HTypeStructure& s, const EuclidJet& d, const GroupPoint& xi);

/// Delta_x u + |x|^2/4 Delta_t u + sum_k sum_{i,j} x_i U^(k)_{i,j} d2u/dx_j dt_k.
double sublaplacian(const HTypeStructure& s, const ScalarField& u, const GroupPoint& xi);
double sublaplacian(const HTypeStructure& s, const EuclidJet& d, const GroupPoint& xi);

/// The m x m matrix X_i(X_j u) obtained by composing the vector fields. Its trace is the
/// sub-Laplacian and its antisymmetric part the bracket sum_r U^(r)_{i,j} T_r u.
Eigen::MatrixXd horizontal_hessian(const HTypeStructure& s, const EuclidJet& d, const GroupPoint& xi);

}  // namespace htype
