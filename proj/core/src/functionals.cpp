#include "htype/functionals.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "htype/calculus.hpp"
#include "htype/closedform.hpp"
#include "htype/errors.hpp"
#include "htype/parallel.hpp"
#include "htype/structure.hpp"

namespace htype {

namespace {

template <class T>
T denominator(const T& s, const T& tau) {
  const T a = 1.0 + 0.25 * s * s;
  return a * a + tau * tau;
}

void check_admissible(int m, int n) {
  if (m < 1 || n < 1) throw DomainError("dimensions must be positive");
  if (n > radon_hurwitz(m) - 1) {
    std::ostringstream os;
    os << "(m, n) = (" << m << ", " << n << ") is not admissible: rho(" << m << ") = " << radon_hurwitz(m);
    throw AdmissibilityError(os.str());
  }
}

nlohmann::json rule_params(const BiradialRule& rule) {
  return {{"m", rule.m}, {"n", rule.n}, {"nodes", rule.nodes}, {"scale", rule.scale}};
}

// int |u|^p U^{2Q/(Q-2)-p} w, with w = 1 when omitted.
double weighted_power_integral(const BiradialRule& rule, const std::vector<double>& u, double p,
                               const BiradialField* extra = nullptr) {
  const double q = rule.m + 2.0 * rule.n;
  const double weight_exponent = -(2.0 * q - (q - 2.0) * p) / 4.0;  // U^{2*-p} = D^{weight_exponent}
  const std::size_t nt = rule.tau.size();
  std::vector<double> density(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) {
    const double s = rule.s[k / nt];
    const double tau = rule.tau[k % nt];
    double v = std::pow(std::abs(u[k]), p) * std::pow(denominator(s, tau), weight_exponent);
    if (extra) v *= (*extra)(s, tau);
    density[k] = v;
  }
  return integrate_values(rule, density);
}

}  // namespace

BiradialField bubble_profile(int m, int n, double lambda) {
  if (!(lambda > 0.0)) throw DomainError("bubble_profile: lambda must be positive");
  const double q = m + 2.0 * n;
  const double amp = std::pow(lambda, (q - 2.0) / 2.0);
  return BiradialField([q, amp, lambda](const Jet& s, const Jet& tau) {
    return amp * pow(denominator(lambda * s, lambda * lambda * tau), -(q - 2.0) / 4.0);
  });
}

BiradialField hardy_weight_profile() {
  return BiradialField([](const Jet& s, const Jet& tau) { return 1.0 / denominator(s, tau); });
}

BiradialField dilation_mode_profile() {
  return BiradialField([](const Jet& s, const Jet& tau) {
    const Jet s2 = s * s;
    return (1.0 - s2 * s2 / 16.0 - tau * tau) / denominator(s, tau);
  });
}

BiradialField product(BiradialField a, BiradialField b) {
  return BiradialField([a = std::move(a), b = std::move(b)](const Jet& s, const Jet& tau) { return a(s, tau) * b(s, tau); });
}

BiradialField linear_combination(double a, BiradialField f, double b, BiradialField g) {
  return BiradialField(
      [a, b, f = std::move(f), g = std::move(g)](const Jet& s, const Jet& tau) { return a * f(s, tau) + b * g(s, tau); });
}

double sharp_constant(int m, int n) {
  check_admissible(m, n);
  const double q = m + 2.0 * n;
  const double k = m + n;
  return std::pow(4.0, -2.0 * n / q) * m * (q - 2.0) * std::pow(std::numbers::pi, k / q) *
         std::pow(std::tgamma(k / 2.0) / std::tgamma(k), 2.0 / q);
}

double critical_exponent(int m, int n) {
  const double q = m + 2.0 * n;
  return 2.0 * q / (q - 2.0);
}

nlohmann::json to_json(const QuotientReport& q) {
  nlohmann::ordered_json j;
  j["kind"] = q.kind;
  j["numerator"] = q.numerator;
  j["denominator"] = q.denominator;
  j["quotient"] = q.quotient;
  j["params"] = q.params;
  return j;
}

QuotientReport fs_quotient(const BiradialRule& rule, const BiradialField& u) {
  const double q = rule.m + 2.0 * rule.n;
  const double crit = 2.0 * q / (q - 2.0);
  const auto values = sample(rule, u);
  std::vector<double> power(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) power[k] = std::pow(std::abs(values[k]), crit);
  const double norm = integrate_values(rule, power);
  if (!(norm > 0.0)) throw DegenerateInputError("fs_quotient: zero denominator");
  QuotientReport r;
  r.kind = "folland_stein";
  r.numerator = horizontal_energy(rule, u);
  r.denominator = std::pow(norm, (q - 2.0) / q);
  r.quotient = r.numerator / r.denominator;
  r.params = rule_params(rule);
  r.params["critical_integral"] = norm;
  r.params["exponent"] = (q - 2.0) / q;
  return r;
}

QuotientReport hardy_quotient(const BiradialRule& rule, const BiradialField& u) {
  const auto values = sample(rule, u);
  const std::size_t nt = rule.tau.size();
  std::vector<double> density(values.size());
  for (std::size_t k = 0; k < values.size(); ++k)
    density[k] = values[k] * values[k] / denominator(rule.s[k / nt], rule.tau[k % nt]);
  const double weighted = integrate_values(rule, density);
  if (!(weighted > 0.0)) throw DegenerateInputError("hardy_quotient: zero denominator");
  QuotientReport r;
  r.kind = "hardy";
  r.numerator = horizontal_energy(rule, u);
  r.denominator = weighted;
  r.quotient = r.numerator / r.denominator;
  r.params = rule_params(rule);
  r.params["bound"] = rule.m * (rule.m + 2.0 * rule.n - 2.0) / 4.0;
  return r;
}

QuotientReport subcritical_quotient(const BiradialRule& rule, const BiradialField& u, double p) {
  const double crit = critical_exponent(rule.m, rule.n);
  if (!(p >= 2.0 && p < crit)) {
    std::ostringstream os;
    os << "subcritical_quotient: p = " << p << " outside [2, " << crit << ")";
    throw DomainError(os.str());
  }
  const double integral = weighted_power_integral(rule, sample(rule, u), p);
  if (!(integral > 0.0)) throw DegenerateInputError("subcritical_quotient: zero denominator");
  QuotientReport r;
  r.kind = "subcritical";
  r.numerator = horizontal_energy(rule, u);
  r.denominator = std::pow(integral, 2.0 / p);
  r.quotient = r.numerator / r.denominator;
  r.params = rule_params(rule);
  r.params["p"] = p;
  r.params["constraint_integral"] = integral;
  return r;
}

MomentResult moment(const BiradialRule& rule, const BiradialField& u, double p, int i) {
  const int last = rule.m + rule.n + 1;
  if (i < 1 || i > last) throw DomainError("moment: index out of range");
  if (i < last) return {0.0, true};
  const BiradialField mode = dilation_mode_profile();
  return {weighted_power_integral(rule, sample(rule, u), p, &mode), false};
}

CheckReport lemma34_check(const BiradialRule& rule, const BiradialField& u, int angles, double tol_rel) {
  if (rule.m != 2 || rule.n != 1) throw DomainError("lemma34_check: implemented for (m, n) = (2, 1)");
  if (angles < 4) throw DomainError("lemma34_check: need at least 4 angular nodes");
  const HTypeStructure s = construct_structure(2, 1);
  const ScalarField lifted = lift(u, 2, 1);
  std::vector<ScalarField> fields;
  for (int i = 1; i <= 4; ++i)
    fields.emplace_back([lifted, s, i](std::span<const Jet> c) { return lifted(c) * omega_t<Jet>(s, i, c); });

  const std::size_t ns = rule.s.size();
  const std::size_t nt = rule.tau.size();
  const std::size_t na = static_cast<std::size_t>(angles);
  // One density entry per (s, tau, sign, angle); weights applied in a fixed serial order below.
  std::vector<double> density(ns * nt * 2 * na);
  parallel::for_ranges(density.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const std::size_t a = k % na;
      const std::size_t sign = (k / na) % 2;
      const std::size_t j = (k / (2 * na)) % nt;
      const std::size_t i = k / (2 * na * nt);
      const double phi = 2.0 * std::numbers::pi * static_cast<double>(a) / static_cast<double>(na);
      const double r = rule.s[i];
      const GroupPoint xi{{r * std::cos(phi), r * std::sin(phi)}, {sign ? -rule.tau[j] : rule.tau[j]}};
      double acc = 0.0;
      for (const auto& f : fields) acc += horizontal_gradient(s, f, xi).squaredNorm();
      density[k] = acc;
    }
  });
  std::vector<double> terms(density.size());
  const double dphi = 2.0 * std::numbers::pi / static_cast<double>(na);
  for (std::size_t k = 0; k < density.size(); ++k) {
    const std::size_t j = (k / (2 * na)) % nt;
    const std::size_t i = k / (2 * na * nt);
    terms[k] = rule.weight(i, j) * dphi * density[k];
  }
  const double lhs = parallel::pairwise_sum(terms);

  const auto values = sample(rule, u);
  std::vector<double> hardy(values.size());
  for (std::size_t k = 0; k < values.size(); ++k)
    hardy[k] = values[k] * values[k] / denominator(rule.s[k / nt], rule.tau[k % nt]);
  const double rhs = horizontal_energy(rule, u) + rule.m * integrate_values(rule, hardy);
  nlohmann::json params = rule_params(rule);
  params["angles"] = angles;
  return make_report("lemma34_energy_identity", lhs, rhs, -1.0, tol_rel, params);
}

CheckReport subcritical_sobolev_check(const BiradialRule& rule, const BiradialField& u, double p, bool sharp,
                                      double tol_rel) {
  const double q = rule.m + 2.0 * rule.n;
  const QuotientReport sub = subcritical_quotient(rule, u, p);
  const double energy = sub.numerator;
  const double a = (2.0 * q - (q - 2.0) * p) / 4.0;
  const double b = (q - 2.0) * (p - 2.0) / 4.0;
  double hardy_c = 0.0, fs_c = 0.0;
  if (sharp) {
    hardy_c = rule.m * (q - 2.0) / 4.0;
    fs_c = sharp_constant(rule.m, rule.n);
  } else {
    hardy_c = hardy_quotient(rule, u).quotient;
    fs_c = fs_quotient(rule, u).quotient;
  }
  const double c = std::pow(hardy_c, -2.0 * a / p) * std::pow(fs_c, -2.0 * q * b / ((q - 2.0) * p));
  const double bound = c * energy;
  nlohmann::json params = rule_params(rule);
  params["p"] = p;
  params["constant"] = c;
  params["constant_source"] = sharp ? "sharp" : "own_quotients";
  return make_bound_report(sharp ? "subcritical_sobolev_sharp" : "subcritical_sobolev_holder", sub.denominator, bound,
                           tol_rel * bound, params);
}

}  // namespace htype
