#include "htype/closedform.hpp"

#include <sstream>

#include "htype/errors.hpp"

namespace htype {

namespace {

void check_shape(const HTypeStructure& s, const GroupPoint& xi) {
  if (static_cast<int>(xi.x.size()) != s.m() || static_cast<int>(xi.t.size()) != s.n())
    throw ShapeError("closedform: point dimensions do not match the structure");
}

void check_params(const HTypeStructure& s, const BubbleParams& p) {
  if (!(p.lambda > 0.0)) throw DomainError("bubble family: lambda must be positive");
  check_shape(s, p.eta);
}

void check_index(const HTypeStructure& s, int i) {
  if (i < 1 || i > s.m() + s.n() + 1) {
    std::ostringstream os;
    os << "omega index " << i << " outside 1.." << s.m() + s.n() + 1;
    throw DomainError(os.str());
  }
}

BubbleParams normalised(const HTypeStructure& s, const BubbleParams& p) {
  BubbleParams q = p;
  if (q.eta.x.empty() && q.eta.t.empty()) q.eta = GroupPoint::identity(s.m(), s.n());
  return q;
}

}  // namespace

double bubble(const HTypeStructure& s, const GroupPoint& xi) {
  check_shape(s, xi);
  const auto c = xi.coords();
  return bubble_t<double>(s, c);
}

double bubble_family(const HTypeStructure& s, const BubbleParams& p, const GroupPoint& xi) {
  check_params(s, p);
  check_shape(s, xi);
  return std::pow(p.lambda, (s.Q() - 2) / 2.0) * bubble(s, dilate(p.lambda, multiply(s, inverse(p.eta), xi)));
}

double bubble_family_expanded(const HTypeStructure& s, const BubbleParams& p, const GroupPoint& xi) {
  check_params(s, p);
  check_shape(s, xi);
  return bubble_family_expanded_t<double>(s, p.lambda, p.eta.x, p.eta.t, xi.x, xi.t);
}

double omega(const HTypeStructure& s, int i, const GroupPoint& xi) {
  check_index(s, i);
  check_shape(s, xi);
  const auto c = xi.coords();
  return omega_t<double>(s, i, c);
}

std::vector<double> omega_all(const HTypeStructure& s, const GroupPoint& xi) {
  check_shape(s, xi);
  const auto c = xi.coords();
  std::vector<double> out;
  for (int i = 1; i <= s.m() + s.n() + 1; ++i) out.push_back(omega_t<double>(s, i, c));
  return out;
}

ScalarField bubble_field(const HTypeStructure& s, const BubbleParams& p, std::optional<double> exponent) {
  const BubbleParams q = normalised(s, p);
  check_params(s, q);
  return ScalarField([s, q, exponent](std::span<const Jet> c) { return bubble_family_t<Jet>(s, q, c, exponent); });
}

ScalarField omega_bubble_field(const HTypeStructure& s, int i) {
  check_index(s, i);
  return ScalarField([s, i](std::span<const Jet> c) { return bubble_t<Jet>(s, c) * omega_t<Jet>(s, i, c); });
}

double yamabe_residual(const HTypeStructure& s, const BubbleParams& p, const GroupPoint& xi,
                       std::optional<double> exponent) {
  const BubbleParams q = normalised(s, p);
  check_params(s, q);
  check_shape(s, xi);
  const double Q = s.Q();
  const EuclidJet d = euclid_derivatives(bubble_field(s, q, exponent), xi);
  const double lap = sublaplacian(s, d, xi);
  return lap + s.m() * (Q - 2.0) / 4.0 * std::pow(d.value, (Q + 2.0) / (Q - 2.0));
}

double eigen_residual(const HTypeStructure& s, int i, const GroupPoint& xi, std::optional<double> mu) {
  check_index(s, i);
  check_shape(s, xi);
  const double Q = s.Q();
  const double mu2 = mu.value_or(s.m() * (Q + 2.0) / 4.0);
  const EuclidJet d = euclid_derivatives(omega_bubble_field(s, i), xi);
  const auto c = xi.coords();
  const double weight = 1.0 / detail::bubble_denominator<double>(s.m(), c);
  return sublaplacian(s, d, xi) + mu2 * weight * d.value;
}

std::vector<double> bubble_parameter_gradient(const HTypeStructure& s, const GroupPoint& xi) {
  check_shape(s, xi);
  const int m = s.m();
  const int n = s.n();
  const std::vector<Jet> x(xi.x.begin(), xi.x.end());
  const std::vector<Jet> t(xi.t.begin(), xi.t.end());
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(m + n + 1));
  // Parameter vector (y, w, lambda); seed one parameter at a time.
  for (int k = 0; k <= m + n; ++k) {
    std::vector<Jet> y(static_cast<std::size_t>(m)), w(static_cast<std::size_t>(n));
    Jet lambda(1.0);
    if (k < m)
      y[k].d1 = 1.0;
    else if (k < m + n)
      w[k - m].d1 = 1.0;
    else
      lambda.d1 = 1.0;
    out.push_back(bubble_family_expanded_t<Jet>(s, lambda, y, w, x, t).d1);
  }
  return out;
}

std::vector<double> omega_from_parameter_jets(const HTypeStructure& s, const GroupPoint& xi) {
  const auto g = bubble_parameter_gradient(s, xi);
  const double q2 = s.Q() - 2.0;
  const double u = bubble(s, xi);
  std::vector<double> out(g.size());
  for (std::size_t k = 0; k + 1 < g.size(); ++k) out[k] = 4.0 / q2 * g[k] / u;
  out.back() = 2.0 / q2 * g.back() / u;
  return out;
}

CheckReport lemma22_check(const HTypeStructure& s, const GroupPoint& xi, double tol_rel) {
  const auto g = bubble_parameter_gradient(s, xi);
  double lhs = 0.0;
  for (std::size_t k = 0; k + 1 < g.size(); ++k) lhs += g[k] * g[k];
  lhs += 0.25 * g.back() * g.back();
  const double u = bubble(s, xi);
  const double q2 = s.Q() - 2.0;
  const double rhs = q2 * q2 / 16.0 * u * u;
  return make_report("lemma22_sum_of_squares", lhs, rhs, -1.0, tol_rel,
                     {{"m", s.m()}, {"n", s.n()}, {"point", point_to_json(xi)}});
}

}  // namespace htype
