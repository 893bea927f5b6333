#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace specfock::cli {

/// One instance of a verification suite.
struct VerifyRow {
  std::string instance;
  std::string expected;
  std::string got;
  bool pass = false;
};

struct VerifyOptions {
  int max_n = -1;  // -1 picks the suite default
  int max_l = -1;
  int p = 3;
  long long max_m = -1;
  std::string mode = "modified";
  int max_rank = 5;
  std::uint64_t seed = 7;
  int specializations = 3;
  int jobs = 1;
};

/// Suite names accepted by `verify`.
const std::vector<std::string>& suite_names();

/// Runs a suite; throws std::invalid_argument for unknown suites or bounds outside the caps.
std::vector<VerifyRow> run_suite(const std::string& suite, const VerifyOptions& options);

/// "suite,instance,expected,got,pass" followed by one line per row.
std::string verify_csv(const std::string& suite, const std::vector<VerifyRow>& rows);

/// Entry point shared by the executable and the tests; args exclude the program name.
/// Exit codes: 0 success, 1 a verification failed, 2 bad arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace specfock::cli
