#include "htype/minimizer.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "htype/errors.hpp"
#include "htype/functionals.hpp"

namespace htype {

namespace {

// Everything F_p needs on a fixed rule and basis.
class Problem {
 public:
  Problem(const BiradialRule& rule, const GalerkinBasis& basis, double p)
      : rule_(rule), p_(p), asm_(assemble(rule, basis)) {
    const std::size_t N = rule.size(), K = basis.size(), nt = rule.tau.size();
    phi_.resize(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(K));
    for (std::size_t k = 0; k < K; ++k) {
      const auto v = sample(rule, basis.functions[k]);
      for (std::size_t i = 0; i < N; ++i) phi_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = v[i];
    }
    const double q = rule.m + 2.0 * rule.n;
    const double e = -(2.0 * q - (q - 2.0) * p) / 4.0;
    weight_.resize(N);
    for (std::size_t i = 0; i < N; ++i) {
      const double s = rule.s[i / nt], tau = rule.tau[i % nt];
      const double c = 1.0 + 0.25 * s * s;
      weight_[i] = std::pow(c * c + tau * tau, e);
    }
    chol_ = cholesky(asm_.A);
  }

  const Assembly& matrices() const { return asm_; }
  Eigen::VectorXd nodes(const Eigen::VectorXd& c) const { return phi_ * c; }

  double constraint(const Eigen::VectorXd& u) const {
    std::vector<double> d(weight_.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = std::pow(std::abs(u(static_cast<Eigen::Index>(i))), p_) * weight_[i];
    return integrate_values(rule_, d);
  }

  double energy(const Eigen::VectorXd& c) const { return c.dot(asm_.A * c); }

  double objective(const Eigen::VectorXd& c) const { return energy(c) / std::pow(constraint(nodes(c)), 2.0 / p_); }

  // dG/dc_k = p int |u|^{p-2} u w phi_k
  Eigen::VectorXd constraint_gradient(const Eigen::VectorXd& u) const {
    const Eigen::Index K = phi_.cols();
    Eigen::VectorXd g(K);
    std::vector<double> d(weight_.size());
    for (Eigen::Index k = 0; k < K; ++k) {
      for (std::size_t i = 0; i < d.size(); ++i) {
        const double ui = u(static_cast<Eigen::Index>(i));
        d[i] = p_ * std::pow(std::abs(ui), p_ - 2.0) * ui * weight_[i] * phi_(static_cast<Eigen::Index>(i), k);
      }
      g(k) = integrate_values(rule_, d);
    }
    return g;
  }

  Eigen::VectorXd gradient(const Eigen::VectorXd& c) const {
    const Eigen::VectorXd u = nodes(c);
    const double G = constraint(u);
    const double E = energy(c);
    const double Gp = std::pow(G, 2.0 / p_);
    return 2.0 * (asm_.A * c) / Gp - (E * (2.0 / p_) / (Gp * G)) * constraint_gradient(u);
  }

  Eigen::VectorXd solve_energy(const Eigen::VectorXd& r) const {
    const Eigen::VectorXd y = chol_.triangularView<Eigen::Lower>().solve(r);
    return chol_.transpose().triangularView<Eigen::Upper>().solve(y);
  }

  Eigen::VectorXd normalised(const Eigen::VectorXd& c) const { return c / std::pow(constraint(nodes(c)), 1.0 / p_); }

 private:
  const BiradialRule& rule_;
  double p_;
  Assembly asm_;
  Eigen::MatrixXd phi_;
  std::vector<double> weight_;
  Eigen::MatrixXd chol_;
};

void check_exponent(const HTypeStructure& s, const BiradialRule& rule, double p) {
  if (rule.m != s.m() || rule.n != s.n()) throw ShapeError("minimize_subcritical: rule dimensions differ from structure");
  const double crit = critical_exponent(s.m(), s.n());
  if (!(p >= 2.0 && p < crit)) {
    std::ostringstream os;
    os << "minimize_subcritical: p = " << p << " outside [2, " << crit << ")";
    throw DomainError(os.str());
  }
}

Eigen::VectorXd project(const BiradialRule& rule, const GalerkinBasis& basis, const BiradialField& f) {
  const std::size_t K = basis.size(), nt = rule.tau.size();
  const Assembly a = assemble(rule, basis);
  const auto fv = sample(rule, f);
  std::vector<double> d(fv.size());
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(K));
  for (std::size_t k = 0; k < K; ++k) {
    const auto pv = sample(rule, basis.functions[k]);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = mass_weight(1.0, rule.s[i / nt], rule.tau[i % nt]) * fv[i] * pv[i];
    rhs(static_cast<Eigen::Index>(k)) = integrate_values(rule, d);
  }
  const Eigen::MatrixXd L = cholesky(a.B);
  const Eigen::VectorXd y = L.triangularView<Eigen::Lower>().solve(rhs);
  return L.transpose().triangularView<Eigen::Upper>().solve(y);
}

}  // namespace

BiradialField MinimizeResult::profile_field() const {
  return BiradialField([fns = basis.functions, c = coefficients](const Jet& s, const Jet& tau) {
    Jet acc(0.0);
    for (std::size_t k = 0; k < fns.size(); ++k) acc += c(static_cast<Eigen::Index>(k)) * fns[k](s, tau);
    return acc;
  });
}

double jet_gate_error(const BiradialRule& rule, const GalerkinBasis& basis) {
  const double q = rule.m + 2.0 * rule.n;
  const double e = -(q - 2.0) / 4.0;
  double worst = 0.0;
  for (double s : rule.s) {
    for (double tau : rule.tau) {
      const BiradialJet j = first_derivatives(basis.functions.front(), s, tau);
      const double c = 1.0 + 0.25 * s * s;
      const double d = c * c + tau * tau;
      const double u = std::pow(d, e);
      const double us = e * u / d * (c * s);
      const double ut = e * u / d * (2.0 * tau);
      worst = std::max({worst, std::abs(j.value - u) / std::abs(u), std::abs(j.ds - us) / std::max(std::abs(us), u),
                        std::abs(j.dtau - ut) / std::max(std::abs(ut), u)});
    }
  }
  return worst;
}

MinimizeResult minimize_subcritical(const HTypeStructure& s, double p, const BiradialRule& rule,
                                    const MinimizeOptions& opts, const Eigen::VectorXd& start) {
  check_exponent(s, rule, p);
  MinimizeResult r;
  r.m = s.m();
  r.n = s.n();
  r.p = p;
  r.basis = default_basis(s, opts.K);
  if (start.size() != opts.K) throw ShapeError("minimize_subcritical: start has the wrong number of coefficients");
  const double gate = jet_gate_error(rule, r.basis);
  if (!(gate <= opts.jet_gate)) {
    std::ostringstream os;
    os << "minimize_subcritical: basis jets disagree with closed-form derivatives (" << gate << ")";
    throw DomainError(os.str());
  }

  const Problem prob(rule, r.basis, p);
  Eigen::VectorXd c = prob.normalised(start);
  if ((prob.nodes(c).array() < 0.0).any()) throw DomainError("minimize_subcritical: initial profile is negative somewhere");
  double f = prob.objective(c);
  r.history.push_back(f);

  for (int it = 0; it < opts.max_iterations; ++it) {
    const Eigen::VectorXd g = prob.gradient(c);
    const Eigen::VectorXd d = -prob.solve_energy(g);
    const double slope = g.dot(d);
    // Scale-invariance of F makes the direction vanish at a critical point.
    if (!(slope < 0.0) || -slope <= 1e-30 * f) {
      r.converged = true;
      break;
    }
    double step = opts.initial_step;
    bool accepted = false;
    Eigen::VectorXd trial;
    double ft = f;
    for (int k = 0; k < opts.max_rejections; ++k, step *= 0.5) {
      trial = c + step * d;
      if ((prob.nodes(trial).array() < 0.0).any()) continue;
      ft = prob.objective(trial);
      if (ft <= f + opts.armijo * step * slope) {
        accepted = true;
        break;
      }
    }
    ++r.iterations;
    if (!accepted) {
      // Below roundoff the Armijo test cannot be met; accept that as convergence.
      if (-slope <= 1e-12 * f) {
        r.converged = true;
        break;
      }
      throw NonConvergenceError("minimize_subcritical: no admissible descent step", r.history);
    }
    c = prob.normalised(trial);
    const double change = std::abs(f - ft);
    f = ft;
    r.history.push_back(f);
    if (change <= opts.tol * f) {
      r.converged = true;
      break;
    }
  }
  if (!r.converged) throw NonConvergenceError("minimize_subcritical: iteration limit reached", r.history);

  const Eigen::VectorXd u = prob.nodes(c);
  r.coefficients = c;
  r.profile.assign(u.data(), u.data() + u.size());
  r.constraint = prob.constraint(u);
  r.lambda_p = prob.energy(c) / std::pow(r.constraint, 2.0 / p);
  const Assembly& a = prob.matrices();
  r.lambda_coeff = (a.B.row(0) * c)(0) / a.B(0, 0);
  Eigen::VectorXd diff = c;
  diff(0) -= r.lambda_coeff;
  r.deviation = diff.dot(a.A * diff);
  r.moment_dilation = moment(rule, r.profile_field(), p, s.m() + s.n() + 1).value;
  return r;
}

MinimizeResult minimize_subcritical(const HTypeStructure& s, double p, const BiradialRule& rule,
                                    const MinimizeOptions& opts, const std::optional<BiradialField>& init) {
  check_exponent(s, rule, p);
  Eigen::VectorXd start = Eigen::VectorXd::Zero(opts.K);
  if (init) {
    start = project(rule, default_basis(s, opts.K), *init);
  } else {
    start(0) = 1.0;
  }
  return minimize_subcritical(s, p, rule, opts, start);
}

std::vector<MinimizeResult> sweep_p(const HTypeStructure& s, const std::vector<double>& p_list,
                                    const BiradialRule& rule, const MinimizeOptions& opts) {
  if (!std::is_sorted(p_list.begin(), p_list.end())) throw DomainError("sweep_p: p-list must be ascending");
  std::vector<MinimizeResult> out;
  Eigen::VectorXd start = Eigen::VectorXd::Zero(opts.K);
  start(0) = 1.0;
  for (double p : p_list) {
    out.push_back(minimize_subcritical(s, p, rule, opts, start));
    start = out.back().coefficients;
  }
  return out;
}

CheckReport moment_check(const MinimizeResult& r, double tol) {
  nlohmann::json params = {{"m", r.m}, {"n", r.n}, {"p", r.p}, {"converged", r.converged},
                           {"iterations", r.iterations}, {"parity_zero_indices", r.m + r.n}};
  if (!r.converged) params["binding"] = false;
  return make_report("moment_dilation", r.moment_dilation, 0.0, tol, -1.0, params);
}

CheckReport second_variation_check(const BiradialRule& rule, const MinimizeResult& r, double step, double tol) {
  const BiradialField u = r.profile_field();
  const BiradialField mode = dilation_mode_profile();
  auto probe = [&](double h) {
    const BiradialField v([&u, &mode, h](const Jet& s, const Jet& tau) { return u(s, tau) * (1.0 + h * mode(s, tau)); });
    return subcritical_quotient(rule, v, r.p).quotient;
  };
  const double curvature = (probe(step) - 2.0 * probe(0.0) + probe(-step)) / (step * step);
  nlohmann::json params = {{"m", r.m}, {"n", r.n}, {"p", r.p}, {"step", step}};
  return make_lower_bound_report("second_variation", curvature, 0.0, tol, params);
}

nlohmann::json to_json(const MinimizeResult& r) {
  nlohmann::ordered_json j;
  j["m"] = r.m;
  j["n"] = r.n;
  j["p"] = r.p;
  j["lambda_p"] = r.lambda_p;
  j["iterations"] = r.iterations;
  j["converged"] = r.converged;
  j["constraint"] = r.constraint;
  j["lambda_coeff"] = r.lambda_coeff;
  j["deviation"] = r.deviation;
  j["moment_dilation"] = r.moment_dilation;
  j["coefficients"] = std::vector<double>(r.coefficients.data(), r.coefficients.data() + r.coefficients.size());
  j["history"] = r.history;
  return j;
}

}  // namespace htype
