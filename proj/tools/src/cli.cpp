#include "htype/cli/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "htype/cli/acceptance.hpp"
#include "htype/cli/sampling.hpp"
#include "htype/closedform.hpp"
#include "htype/errors.hpp"
#include "htype/functionals.hpp"
#include "htype/minimizer.hpp"
#include "htype/parallel.hpp"
#include "htype/spectral.hpp"
#include "htype/structure.hpp"

namespace htype::cli {

namespace {

class Emitter {
 public:
  explicit Emitter(std::ostream& os) : os_(os) {}
  void report(const CheckReport& r) {
    os_ << to_json_line(r) << '\n';
    all_pass_ = all_pass_ && r.pass;
  }
  void line(const nlohmann::ordered_json& j) { os_ << j.dump() << '\n'; }
  void line(const nlohmann::json& j) { os_ << j.dump() << '\n'; }
  int code() const { return all_pass_ ? kPass : kCheckFailed; }

 private:
  std::ostream& os_;
  bool all_pass_ = true;
};

std::string shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double tol(const RunConfig& c, const std::string& key, double fallback) {
  const auto it = c.tolerances.find(key);
  return it == c.tolerances.end() ? fallback : it->second;
}

nlohmann::json base_params(const RunConfig& c) { return {{"m", c.m}, {"n", c.n}}; }

BiradialField named_field(const std::string& name, int m, int n) {
  if (name == "bubble") return bubble_profile(m, n);
  if (name == "perturbed")
    return product(bubble_profile(m, n),
                   linear_combination(1.0, BiradialField([](const Jet&, const Jet&) { return Jet(1.0); }), 0.3,
                                      dilation_mode_profile()));
  if (name == "dilated") return bubble_profile(m, n, 2.0);
  throw DomainError("unknown field '" + name + "' (bubble | perturbed | dilated)");
}

int cmd_verify_structure(const RunConfig& c, Emitter& e) {
  const HTypeStructure s = construct_structure(c.m, c.n);
  for (const auto& r : verify_structure(s, tol(c, "structure", 1e-12))) e.report(r);
  return e.code();
}

int cmd_identities(const RunConfig& c, Emitter& e) {
  const HTypeStructure s = construct_structure(c.m, c.n);
  for (const GroupPoint& xi : sample_points(s, c.samples, c.seed)) {
    nlohmann::json params = base_params(c);
    params["point"] = point_to_json(xi);
    e.report(make_report("yamabe_residual", yamabe_residual(s, BubbleParams::standard(c.m, c.n), xi), 0.0,
                         tol(c, "yamabe", 1e-8), -1.0, params));
    e.report(lemma22_check(s, xi, tol(c, "lemma22", 1e-10)));
    double sum = 0.0;
    for (double w : omega_all(s, xi)) sum += w * w;
    e.report(make_report("omega_sum_of_squares", sum, 1.0, tol(c, "omega_sum", 1e-12), -1.0, params));
    double worst = 0.0;
    for (int i = 1; i <= c.m + c.n + 1; ++i) worst = std::max(worst, std::abs(eigen_residual(s, i, xi)));
    e.report(make_report("eigen_residual_max", worst, 0.0, tol(c, "eigen", 1e-8), -1.0, params));
  }
  return e.code();
}

int cmd_sharp_constant(const RunConfig& c, Emitter& e) {
  const double formula = sharp_constant(c.m, c.n);
  const QuotientReport q = fs_quotient(make_rule(c.m, c.n, c.nodes, c.scale), bubble_profile(c.m, c.n));
  const CheckReport r = make_report("sharp_constant", q.quotient, formula, -1.0, tol(c, "sharp", 1e-6), q.params);
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(to_json_line(r));
  j["formula"] = formula;
  j["quadrature"] = q.quotient;
  e.line(j);
  return r.pass ? e.code() : kCheckFailed;
}

int cmd_quotient(const RunConfig& c, const std::string& field, Emitter& e) {
  const BiradialRule rule = make_rule(c.m, c.n, c.nodes, c.scale);
  const BiradialField u = named_field(field, c.m, c.n);
  e.line(to_json(fs_quotient(rule, u)));
  e.line(to_json(hardy_quotient(rule, u)));
  if (c.p) e.line(to_json(subcritical_quotient(rule, u, *c.p)));
  return e.code();
}

int cmd_spectrum(const RunConfig& c, Emitter& e) {
  const HTypeStructure s = construct_structure(c.m, c.n);
  const SpectrumResult r = spectrum(s, c.K, c.nodes, c.scale);
  e.line(to_json(r));
  const double q = s.Q();
  const double exact[2] = {c.m * (q - 2.0) / 4.0, c.m * (q + 2.0) / 4.0};
  for (int i = 0; i < std::min(2, r.K); ++i) {
    nlohmann::json params = base_params(c);
    params["K"] = c.K;
    params["nodes"] = c.nodes;
    params["index"] = i + 1;
    e.report(make_report("eigenvalue", r.eigenvalues[static_cast<std::size_t>(i)], exact[i], -1.0,
                         tol(c, "spectrum", 1e-3), params));
  }
  return e.code();
}

MinimizeOptions minimize_options(const RunConfig& c) {
  MinimizeOptions o;
  o.K = c.K;
  o.tol = tol(c, "minimize", o.tol);
  return o;
}

int cmd_minimize(const RunConfig& c, Emitter& e) {
  if (!c.p) throw CLI::ValidationError("--p", "minimize requires --p");
  const HTypeStructure s = construct_structure(c.m, c.n);
  const BiradialRule rule = make_rule(c.m, c.n, c.nodes, c.scale);
  const MinimizeResult r = minimize_subcritical(s, *c.p, rule, minimize_options(c));
  e.line(to_json(r));
  e.report(moment_check(r, tol(c, "moment", 1e-5)));
  return e.code();
}

int cmd_sweep(const RunConfig& c, Emitter& e) {
  const HTypeStructure s = construct_structure(c.m, c.n);
  const BiradialRule rule = make_rule(c.m, c.n, c.nodes, c.scale);
  const auto results = sweep_p(s, c.p_list, rule, minimize_options(c));
  for (const auto& r : results) {
    e.line(to_json(r));
    e.report(moment_check(r, tol(c, "moment", 1e-5)));
  }
  if (!c.csv.empty()) {
    std::ofstream csv(c.csv);
    if (!csv) throw CLI::ValidationError("--csv", "cannot open " + c.csv);
    csv << "p,lambda_p,deviation,lambda_coeff,moment\n";
    for (const auto& r : results)
      csv << shortest(r.p) << ',' << shortest(r.lambda_p) << ',' << shortest(r.deviation) << ','
          << shortest(r.lambda_coeff) << ',' << shortest(r.moment_dilation) << '\n';
  }
  return e.code();
}

int cmd_all(const RunConfig& c, Emitter& e) {
  const SuiteConfig sc{c.seed, c.samples};
  for (int id = 1; id <= 7; ++id) {
    const Criterion cr = run_criterion(id, sc);
    for (const auto& r : cr.reports) e.report(r);
    nlohmann::ordered_json summary;
    summary["criterion"] = cr.id;
    summary["name"] = cr.name;
    summary["reports"] = cr.reports.size();
    summary["pass"] = cr.pass();
    e.line(summary);
  }
  return e.code();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical checks for H-type groups: structure matrices, bubble identities, sharp constants, "
               "Hardy inequality, biradial spectrum and subcritical minimisation."};
  app.name("htype");
  app.require_subcommand(1);
  RunConfig c;
  std::vector<std::string> tol_args;
  std::string field = "bubble";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--m", c.m, "horizontal dimension")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--n", c.n, "center dimension")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--out", c.out, "write reports to this file instead of stdout");
    sub->add_option("--threads", c.threads, "worker threads for node-parallel loops")
        ->capture_default_str()
        ->check(CLI::Range(1, 256));
    sub->add_option("--tol", tol_args, "tolerance override KEY=VALUE (repeatable)");
  };
  auto add_quadrature = [&](CLI::App* sub) {
    sub->add_option("--nodes", c.nodes, "Gauss-Legendre nodes per axis")->capture_default_str()->check(CLI::Range(8, 4096));
    sub->add_option("--scale", c.scale, "compactification scale")->capture_default_str()->check(CLI::PositiveNumber);
  };
  auto add_sampling = [&](CLI::App* sub) {
    sub->add_option("--samples", c.samples, "random sample points")->capture_default_str()->check(CLI::Range(1, 1000000));
    sub->add_option("--seed", c.seed, "seed for sample points")->capture_default_str();
  };

  auto* verify = app.add_subcommand("verify-structure", "check skew-symmetry, orthogonality, anticommutation");
  add_common(verify);
  auto* ident = app.add_subcommand("identities", "pointwise bubble identities at seeded random points");
  add_common(ident);
  add_sampling(ident);
  auto* sharp = app.add_subcommand("sharp-constant", "closed-form S_{m,n} vs quadrature quotient of U");
  add_common(sharp);
  add_quadrature(sharp);
  auto* quot = app.add_subcommand("quotient", "Folland-Stein, Hardy and subcritical quotients of a profile");
  add_common(quot);
  add_quadrature(quot);
  quot->add_option("--field", field, "bubble | perturbed | dilated")->capture_default_str();
  quot->add_option("--p", c.p, "subcritical exponent");
  auto* spec = app.add_subcommand("spectrum", "biradial Galerkin eigenvalues");
  add_common(spec);
  add_quadrature(spec);
  spec->add_option("--K", c.K, "basis size")->capture_default_str()->check(CLI::Range(1, 200));
  auto* mini = app.add_subcommand("minimize", "subcritical minimisation at one exponent");
  add_common(mini);
  add_quadrature(mini);
  mini->add_option("--K", c.K, "basis size")->capture_default_str()->check(CLI::Range(1, 200));
  mini->add_option("--p", c.p, "subcritical exponent")->required();
  auto* sweep = app.add_subcommand("sweep-p", "warm-started minimisation over ascending exponents");
  add_common(sweep);
  add_quadrature(sweep);
  sweep->add_option("--K", c.K, "basis size")->capture_default_str()->check(CLI::Range(1, 200));
  sweep->add_option("--p-list", c.p_list, "ascending exponents")->capture_default_str()->delimiter(',');
  sweep->add_option("--csv", c.csv, "also write p, lambda_p, deviation, lambda_coeff, moment as CSV");
  auto* all = app.add_subcommand("all", "the full acceptance suite");
  add_common(all);
  add_sampling(all);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
    for (const auto& t : tol_args) {
      const auto eq = t.find('=');
      if (eq == std::string::npos || eq == 0) throw CLI::ValidationError("--tol", "expected KEY=VALUE, got " + t);
      c.tolerances[t.substr(0, eq)] = std::stod(t.substr(eq + 1));
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  std::ofstream file;
  if (!c.out.empty()) {
    file.open(c.out);
    if (!file) {
      err << "error: cannot open " << c.out << '\n';
      return kUsage;
    }
  }
  std::ostringstream buffer;
  Emitter emitter(buffer);
  parallel::set_thread_count(c.threads);
  int code = kPass;
  try {
    if (*verify) code = cmd_verify_structure(c, emitter);
    else if (*ident) code = cmd_identities(c, emitter);
    else if (*sharp) code = cmd_sharp_constant(c, emitter);
    else if (*quot) code = cmd_quotient(c, field, emitter);
    else if (*spec) code = cmd_spectrum(c, emitter);
    else if (*mini) code = cmd_minimize(c, emitter);
    else if (*sweep) code = cmd_sweep(c, emitter);
    else if (*all) code = cmd_all(c, emitter);
  } catch (const NonConvergenceError& e) {
    err << "non-convergence: " << e.what() << '\n';
    code = kNonConvergence;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    code = kUsage;
  } catch (const AdmissibilityError& e) {
    err << "error: " << e.what() << '\n';
    code = kUsage;
  } catch (const DegenerateStructureError& e) {
    err << "error: " << e.what() << '\n';
    code = kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    code = kUsage;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << '\n';
    code = kCheckFailed;
  }
  (c.out.empty() ? out : file) << buffer.str();
  return code;
}

int run(int argc, char** argv) { return run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr); }

}  // namespace htype::cli
