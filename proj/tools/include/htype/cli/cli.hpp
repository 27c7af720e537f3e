#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace htype::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2, kNonConvergence = 3 };

struct RunConfig {
  int m = 2;
  int n = 1;
  int nodes = 64;
  double scale = 2.0;
  int K = 15;
  std::optional<double> p;
  std::vector<double> p_list{2.0, 2.5, 3.0, 3.5, 3.8};
  int samples = 100;
  std::uint64_t seed = 42;
  int threads = 1;
  std::string out;
  std::string csv;
  std::map<std::string, double> tolerances;
};

/// Entry point behind the `htype` executable. Reports go to `out` (or --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace htype::cli
