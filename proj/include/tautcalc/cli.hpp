#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "tautcalc/report.hpp"

namespace tautcalc::cli {

enum class Subcommand { kClass, kFp, kRho, kIdentities, kKodaira, kTestCurve, kNikulin, kVerifyAll };

/// Invalid flags or out-of-range parameters; exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  Subcommand subcommand = Subcommand::kVerifyAll;
  /// class kind ("prym", "strongly-bn", "pointed-bn"), kodaira target or test curve name.
  std::string variant;
  int r = 3;
  std::optional<int> m;
  Emit emit = Emit::kTable;
  int threads = 1;
  /// fp only: must not undercut the ring's top degree.
  std::optional<int> degree_cap_override;

  // rho
  long g = 0;
  long d = 0;
  std::vector<std::string> ram_profiles;
  std::optional<std::string> multi_profile;
  std::optional<std::string> lemma_case;

  // nikulin, verify-all, identities
  int r_min = 3;
  int r_max = 4;
};

/// Throws UsageError for a config no computation accepts.
void validate(const RunConfig& config);

/// Runs one subcommand. Returns 0 when every check passes, 1 on a failed
/// check (with a diff on err), 2 on a usage error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs. Help goes to out with exit code 0.
int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tautcalc::cli
