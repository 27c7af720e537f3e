#pragma once

#include <map>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

namespace htype {

/// Outcome of a single numerical check: computed vs expected under (tol_abs, tol_rel).
/// pass == (abs_err <= tol_abs || rel_err <= tol_rel). Tolerances are recorded in params.
struct CheckReport {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  double computed = 0.0;
  double expected = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  bool pass = false;
};

/// Build a report from computed/expected and tolerances. A negative tolerance disables that test.
CheckReport make_report(std::string check, double computed, double expected, double tol_abs,
                        double tol_rel, nlohmann::json params = nlohmann::json::object());

/// Report for an upper-bound style check: passes iff computed <= bound (+ tol_abs).
CheckReport make_bound_report(std::string check, double computed, double bound, double tol_abs,
                              nlohmann::json params = nlohmann::json::object());

/// Report for a lower-bound style check: passes iff computed >= bound (- tol_abs).
CheckReport make_lower_bound_report(std::string check, double computed, double bound, double tol_abs,
                                    nlohmann::json params = nlohmann::json::object());

nlohmann::json to_json(const CheckReport& r);

/// Single-line JSON with fixed key order and shortest round-trip doubles.
std::string to_json_line(const CheckReport& r);

}  // namespace htype
