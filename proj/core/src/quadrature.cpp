#include "htype/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "htype/errors.hpp"
#include "htype/parallel.hpp"

namespace htype {

BiradialJet first_derivatives(const BiradialField& u, double s, double tau) {
  const Jet r = u(Jet(s, 1.0, 0.0, 0.0), Jet(tau, 0.0, 1.0, 0.0));
  return {r.v, r.d1, r.d2};
}

double sphere_area(int d) {
  if (d < 1) throw DomainError("sphere_area: dimension must be >= 1");
  return 2.0 * std::pow(std::numbers::pi, d / 2.0) / std::tgamma(d / 2.0);
}

namespace {

// P_n(z) and P_n'(z) by the three-term recurrence.
std::pair<double, double> legendre(int n, double z) {
  double p0 = 1.0, p1 = z;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  return {p1, n * (z * p1 - p0) / (z * z - 1.0)};
}

}  // namespace

std::pair<std::vector<double>, std::vector<double>> gauss_legendre_unit(int count) {
  if (count < 1) throw DomainError("gauss_legendre_unit: count must be positive");
  const auto n = static_cast<std::size_t>(count);
  std::vector<double> x(n), w(n);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (count + 0.5));
    for (int it = 0; it < 100; ++it) {
      const auto [p, dp] = legendre(count, z);
      const double dz = p / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    const double dp = legendre(count, z).second;
    const double weight = 1.0 / ((1.0 - z * z) * dp * dp);
    // z is the i-th largest root of P_n on (-1, 1); map to (0, 1) ascending.
    x[n - 1 - i] = 0.5 * (1.0 + z);
    x[i] = 0.5 * (1.0 - z);
    w[n - 1 - i] = weight;
    w[i] = weight;
  }
  return {x, w};
}

double compactify(double s, double scale) { return s / (s + scale); }
double decompactify(double r, double scale) { return scale * r / (1.0 - r); }

BiradialRule make_rule(int m, int n, int nodes, double scale) {
  if (m < 1 || n < 1) throw DomainError("make_rule: m and n must be positive");
  if (nodes < 8) throw DomainError("make_rule: at least 8 nodes per axis are required");
  if (!(scale > 0.0) || !std::isfinite(scale)) throw DomainError("make_rule: scale must be positive and finite");
  BiradialRule rule;
  rule.m = m;
  rule.n = n;
  rule.nodes = nodes;
  rule.scale = scale;
  auto [r, w] = gauss_legendre_unit(nodes);
  rule.r = r;
  rule.r_weights = w;
  const auto count = static_cast<std::size_t>(nodes);
  rule.s.resize(count);
  rule.s_weights.resize(count);
  rule.tau.resize(count);
  rule.tau_weights.resize(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double x = decompactify(r[k], scale);
    const double jac = scale / ((1.0 - r[k]) * (1.0 - r[k]));
    rule.s[k] = x;
    rule.tau[k] = x;
    rule.s_weights[k] = w[k] * jac * std::pow(x, m - 1);
    rule.tau_weights[k] = w[k] * jac * std::pow(x, n - 1);
  }
  rule.prefactor = sphere_area(m) * sphere_area(n);
  return rule;
}

std::vector<double> sample(const BiradialRule& rule, const BiradialField& f) {
  std::vector<double> values(rule.size());
  const std::size_t nt = rule.tau.size();
  parallel::for_ranges(values.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) values[k] = f(rule.s[k / nt], rule.tau[k % nt]);
  });
  return values;
}

std::vector<BiradialJet> sample_jets(const BiradialRule& rule, const BiradialField& f) {
  std::vector<BiradialJet> values(rule.size());
  const std::size_t nt = rule.tau.size();
  parallel::for_ranges(values.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) values[k] = first_derivatives(f, rule.s[k / nt], rule.tau[k % nt]);
  });
  return values;
}

double integrate_values(const BiradialRule& rule, std::span<const double> values) {
  if (values.size() != rule.size()) throw ShapeError("integrate_values: value count does not match the rule");
  const std::size_t nt = rule.tau.size();
  std::vector<double> terms(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!std::isfinite(values[k])) {
      std::ostringstream os;
      os << "integrate: non-finite value " << values[k] << " at node (" << k / nt << ", " << k % nt
         << ") s = " << rule.s[k / nt] << ", tau = " << rule.tau[k % nt];
      throw IntegrationError(os.str());
    }
    terms[k] = rule.weight(k / nt, k % nt) * values[k];
  }
  return rule.prefactor * parallel::pairwise_sum(terms);
}

double integrate(const BiradialRule& rule, const BiradialField& f) { return integrate_values(rule, sample(rule, f)); }

double biradial_gradient_sq(const BiradialField& u, double s, double tau) {
  const BiradialJet d = first_derivatives(u, s, tau);
  return d.ds * d.ds + 0.25 * s * s * d.dtau * d.dtau;
}

double biradial_sublaplacian(int m, int n, const BiradialField& u, double s, double tau) {
  const BiradialJet d = first_derivatives(u, s, tau);
  const double uss = u(Jet(s, 1.0, 1.0, 0.0), Jet(tau)).d12;
  const double utt = u(Jet(s), Jet(tau, 1.0, 1.0, 0.0)).d12;
  return uss + (m - 1) / s * d.ds + 0.25 * s * s * (utt + (n - 1) / tau * d.dtau);
}

double horizontal_energy(const BiradialRule& rule, const BiradialField& u) {
  const auto jets = sample_jets(rule, u);
  std::vector<double> density(jets.size());
  const std::size_t nt = rule.tau.size();
  for (std::size_t k = 0; k < jets.size(); ++k) {
    const double s = rule.s[k / nt];
    density[k] = jets[k].ds * jets[k].ds + 0.25 * s * s * jets[k].dtau * jets[k].dtau;
  }
  return integrate_values(rule, density);
}

double energy_form(const BiradialRule& rule, const BiradialField& u, const BiradialField& v) {
  const auto ju = sample_jets(rule, u);
  const auto jv = sample_jets(rule, v);
  std::vector<double> density(ju.size());
  const std::size_t nt = rule.tau.size();
  for (std::size_t k = 0; k < ju.size(); ++k) {
    const double s = rule.s[k / nt];
    density[k] = ju[k].ds * jv[k].ds + 0.25 * s * s * ju[k].dtau * jv[k].dtau;
  }
  return integrate_values(rule, density);
}

ScalarField lift(const BiradialField& u, int m, int n) {
  return ScalarField([u, m, n](std::span<const Jet> c) {
    Jet x2(0.0), t2(0.0);
    for (int i = 0; i < m; ++i) x2 += c[i] * c[i];
    for (int j = 0; j < n; ++j) t2 += c[m + j] * c[m + j];
    return u(sqrt(x2), sqrt(t2));
  });
}

}  // namespace htype
