#include "htype/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace htype {

CheckReport make_report(std::string check, double computed, double expected, double tol_abs,
                        double tol_rel, nlohmann::json params) {
  CheckReport r;
  r.check = std::move(check);
  r.computed = computed;
  r.expected = expected;
  r.abs_err = std::abs(computed - expected);
  r.rel_err = expected != 0.0 ? r.abs_err / std::abs(expected)
                              : (r.abs_err == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
  params["tol_abs"] = tol_abs;
  params["tol_rel"] = tol_rel;
  r.params = std::move(params);
  const bool abs_ok = tol_abs >= 0.0 && r.abs_err <= tol_abs;
  const bool rel_ok = tol_rel >= 0.0 && r.rel_err <= tol_rel;
  r.pass = std::isfinite(computed) && (abs_ok || rel_ok);
  return r;
}

CheckReport make_bound_report(std::string check, double computed, double bound, double tol_abs,
                              nlohmann::json params) {
  CheckReport r;
  r.check = std::move(check);
  r.computed = computed;
  r.expected = bound;
  r.abs_err = std::max(0.0, computed - bound);
  r.rel_err = bound != 0.0 ? r.abs_err / std::abs(bound) : r.abs_err;
  params["tol_abs"] = tol_abs;
  params["kind"] = "upper_bound";
  r.params = std::move(params);
  r.pass = std::isfinite(computed) && r.abs_err <= tol_abs;
  return r;
}

CheckReport make_lower_bound_report(std::string check, double computed, double bound, double tol_abs,
                                    nlohmann::json params) {
  CheckReport r;
  r.check = std::move(check);
  r.computed = computed;
  r.expected = bound;
  r.abs_err = std::max(0.0, bound - computed);
  r.rel_err = bound != 0.0 ? r.abs_err / std::abs(bound) : r.abs_err;
  params["tol_abs"] = tol_abs;
  params["kind"] = "lower_bound";
  r.params = std::move(params);
  r.pass = std::isfinite(computed) && r.abs_err <= tol_abs;
  return r;
}

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json j;
  j["check"] = r.check;
  j["params"] = r.params;
  j["computed"] = r.computed;
  j["expected"] = r.expected;
  j["abs_err"] = r.abs_err;
  j["rel_err"] = r.rel_err;
  j["pass"] = r.pass;
  return j;
}

std::string to_json_line(const CheckReport& r) {
  // ordered_json keeps the documented schema order; non-finite values become null.
  nlohmann::ordered_json j;
  j["check"] = r.check;
  j["params"] = r.params;
  j["computed"] = std::isfinite(r.computed) ? nlohmann::ordered_json(r.computed) : nlohmann::ordered_json(nullptr);
  j["expected"] = r.expected;
  j["abs_err"] = std::isfinite(r.abs_err) ? nlohmann::ordered_json(r.abs_err) : nlohmann::ordered_json(nullptr);
  j["rel_err"] = std::isfinite(r.rel_err) ? nlohmann::ordered_json(r.rel_err) : nlohmann::ordered_json(nullptr);
  j["pass"] = r.pass;
  return j.dump();
}

}  // namespace htype
