#include "htype/calculus.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "htype/errors.hpp"

namespace htype {

namespace {

void check_shape(const HTypeStructure& s, const GroupPoint& xi) {
  if (static_cast<int>(xi.x.size()) != s.m() || static_cast<int>(xi.t.size()) != s.n())
    throw ShapeError("calculus: point dimensions do not match the structure");
}

// a(j, k) = sum_i U^(k)_{i,j} x_i, the t_k-coefficient of X_j.
Eigen::MatrixXd coefficients(const HTypeStructure& s, const GroupPoint& xi) {
  const Eigen::Map<const Eigen::VectorXd> x(xi.x.data(), s.m());
  Eigen::MatrixXd a(s.m(), s.n());
  for (int k = 0; k < s.n(); ++k) a.col(k) = s.mat(k).transpose() * x;
  return a;
}

}  // namespace

double ScalarField::operator()(const GroupPoint& p) const {
  std::vector<Jet> c;
  c.reserve(p.x.size() + p.t.size());
  for (double v : p.x) c.emplace_back(v);
  for (double v : p.t) c.emplace_back(v);
  return fn_(c).v;
}

EuclidJet euclid_derivatives(const ScalarField& u, const GroupPoint& xi) {
  const std::vector<double> base = xi.coords();
  const int dim = static_cast<int>(base.size());
  EuclidJet out;
  out.gradient = Eigen::VectorXd::Zero(dim);
  out.hessian = Eigen::MatrixXd::Zero(dim, dim);
  std::vector<Jet> c(base.begin(), base.end());
  if (dim == 0) {
    out.value = u(c).v;
    return out;
  }
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) {
      c[i].d1 = 1.0;
      c[j].d2 = 1.0;
      const Jet r = u(c);
      c[i].d1 = 0.0;
      c[j].d2 = 0.0;
      if (i == 0 && j == 0) out.value = r.v;
      if (j == i) out.gradient[i] = r.d1;
      out.hessian(i, j) = r.d12;
      out.hessian(j, i) = r.d12;
      if (out.finite && !isfinite(r)) {
        out.finite = false;
        std::ostringstream os;
        os << "non-finite field jet for coordinate pair (" << i << ", " << j << "): " << r;
        out.diagnostic = os.str();
      }
    }
  }
  return out;
}

Eigen::VectorXd horizontal_gradient(const HTypeStructure& s, const EuclidJet& d, const GroupPoint& xi) {
  check_shape(s, xi);
  const int m = s.m();
  const Eigen::MatrixXd a = coefficients(s, xi);
  return d.gradient.head(m) + 0.5 * a * d.gradient.tail(s.n());
}

Eigen::VectorXd horizontal_gradient(const HTypeStructure& s, const ScalarField& u, const GroupPoint& xi) {
  check_shape(s, xi);
  return horizontal_gradient(s, euclid_derivatives(u, xi), xi);
}

double sublaplacian(const HTypeStructure& s, const EuclidJet& d, const GroupPoint& xi) {
  check_shape(s, xi);
  const int m = s.m();
  const int n = s.n();
  double lap_x = 0.0, lap_t = 0.0, x2 = 0.0;
  for (int i = 0; i < m; ++i) {
    lap_x += d.hessian(i, i);
    x2 += xi.x[i] * xi.x[i];
  }
  for (int k = 0; k < n; ++k) lap_t += d.hessian(m + k, m + k);
  double cross = 0.0;
  for (int k = 0; k < n; ++k) {
    const auto& u = s.mat(k);
    for (int i = 0; i < m; ++i) {
      if (xi.x[i] == 0.0) continue;
      for (int j = 0; j < m; ++j)
        if (u(i, j) != 0.0) cross += xi.x[i] * u(i, j) * d.hessian(j, m + k);
    }
  }
  return lap_x + 0.25 * x2 * lap_t + cross;
}

double sublaplacian(const HTypeStructure& s, const ScalarField& u, const GroupPoint& xi) {
  check_shape(s, xi);
  return sublaplacian(s, euclid_derivatives(u, xi), xi);
}

Eigen::MatrixXd horizontal_hessian(const HTypeStructure& s, const EuclidJet& d, const GroupPoint& xi) {
  check_shape(s, xi);
  const int m = s.m();
  const int n = s.n();
  const Eigen::MatrixXd a = coefficients(s, xi);
  const Eigen::MatrixXd hxx = d.hessian.topLeftCorner(m, m);
  const Eigen::MatrixXd hxt = d.hessian.topRightCorner(m, n);
  const Eigen::MatrixXd htt = d.hessian.bottomRightCorner(n, n);
  const Eigen::VectorXd gt = d.gradient.tail(n);
  Eigen::MatrixXd out = hxx + 0.5 * (hxt * a.transpose()) + 0.5 * (a * hxt.transpose()) + 0.25 * (a * htt * a.transpose());
  for (int k = 0; k < n; ++k) out += 0.5 * gt[k] * s.mat(k);
  return out;
}

}  // namespace htype
