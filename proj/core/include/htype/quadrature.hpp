#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "htype/calculus.hpp"
#include "htype/jet.hpp"

namespace htype {

/// A function of s = |x| and tau = |t|, evaluated on jets so that (s, tau) derivatives
/// come out exactly. Must be reentrant.
class BiradialField {
 public:
  using Fn = std::function<Jet(const Jet& s, const Jet& tau)>;

  BiradialField() = default;
  explicit BiradialField(Fn fn) : fn_(std::move(fn)) {}

  Jet operator()(const Jet& s, const Jet& tau) const { return fn_(s, tau); }
  double operator()(double s, double tau) const { return fn_(Jet(s), Jet(tau)).v; }
  explicit operator bool() const noexcept { return static_cast<bool>(fn_); }

 private:
  Fn fn_;
};

/// Value and first partials of a biradial field at one point.
struct BiradialJet {
  double value = 0.0;
  double ds = 0.0;
  double dtau = 0.0;
};

BiradialJet first_derivatives(const BiradialField& u, double s, double tau);

/// Tensor Gauss-Legendre rule for int_G f(|x|, |t|) dx dt. Node weights fold in the
/// map s = scale r / (1 - r), its Jacobian and s^{m-1} (resp. tau^{n-1}); the angular
/// factor sigma_{m-1} sigma_{n-1} is kept separately as the prefactor.
struct BiradialRule {
  int m = 0;
  int n = 0;
  int nodes = 0;
  double scale = 0.0;
  std::vector<double> r;          ///< Gauss-Legendre nodes on (0, 1)
  std::vector<double> r_weights;  ///< matching weights, summing to 1
  std::vector<double> s;
  std::vector<double> s_weights;
  std::vector<double> tau;
  std::vector<double> tau_weights;
  double prefactor = 0.0;

  std::size_t size() const noexcept { return s.size() * tau.size(); }
  /// Flattened index of node (i, j): i along s, j along tau.
  std::size_t index(std::size_t i, std::size_t j) const noexcept { return i * tau.size() + j; }
  double weight(std::size_t i, std::size_t j) const noexcept { return s_weights[i] * tau_weights[j]; }
};

/// Surface measure of S^{d-1}: 2 pi^{d/2} / Gamma(d/2). d = 1 gives 2.
double sphere_area(int d);

/// Gauss-Legendre nodes and weights on (0, 1), ascending.
std::pair<std::vector<double>, std::vector<double>> gauss_legendre_unit(int count);

/// r = s / (s + scale) and its inverse.
double compactify(double s, double scale);
double decompactify(double r, double scale);

/// Throws DomainError for nodes < 8, non-positive scale or non-positive dimensions.
BiradialRule make_rule(int m, int n, int nodes, double scale = 2.0);

/// Field values on the grid, flattened with BiradialRule::index. Node evaluation may run in parallel.
std::vector<double> sample(const BiradialRule& rule, const BiradialField& f);
/// Value and first partials on the grid.
std::vector<BiradialJet> sample_jets(const BiradialRule& rule, const BiradialField& f);

/// prefactor * sum w_ij values_ij with a fixed pairwise reduction order.
double integrate_values(const BiradialRule& rule, std::span<const double> values);
/// Throws IntegrationError naming the first node with a non-finite value.
double integrate(const BiradialRule& rule, const BiradialField& f);

/// |grad_G u|^2 = u_s^2 + (s^2/4) u_tau^2 for the lift u(|x|, |t|).
double biradial_gradient_sq(const BiradialField& u, double s, double tau);
/// u_ss + (m-1)/s u_s + (s^2/4)(u_tt + (n-1)/tau u_t), valid off the axes s = 0, tau = 0.
double biradial_sublaplacian(int m, int n, const BiradialField& u, double s, double tau);

/// int_G |grad_G u|^2 through the biradial reduction.
double horizontal_energy(const BiradialRule& rule, const BiradialField& u);
/// Polarised form int_G <grad_G u, grad_G v>.
double energy_form(const BiradialRule& rule, const BiradialField& u, const BiradialField& v);

/// u(|x|, |t|) as a field on G with coordinates [x..., t...].
ScalarField lift(const BiradialField& u, int m, int n);

}  // namespace htype
