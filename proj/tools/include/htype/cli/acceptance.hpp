#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "htype/report.hpp"

namespace htype::cli {

struct SuiteConfig {
  std::uint64_t seed = 42;
  int samples = 100;
};

/// One acceptance criterion: its reports all pass iff the criterion holds.
struct Criterion {
  int id = 0;
  std::string name;
  double time_limit = 0.0;  ///< seconds; 0 when the criterion states none
  std::vector<CheckReport> reports;

  bool pass() const;
};

Criterion structure_exactness(const SuiteConfig& c);
Criterion identity_suite(const SuiteConfig& c);
Criterion sharp_constant_suite(const SuiteConfig& c);
Criterion hardy_equality(const SuiteConfig& c);
Criterion spectrum_suite(const SuiteConfig& c);
Criterion subcritical_scheme(const SuiteConfig& c);
Criterion oracle_equivalence(const SuiteConfig& c);

/// Criteria 1-7 in order. Criterion 8 (determinism of this output) is checked by the caller.
std::vector<Criterion> run_suite(const SuiteConfig& c);
Criterion run_criterion(int id, const SuiteConfig& c);

}  // namespace htype::cli
