#pragma once

#include <complex>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "selberg/rational.hpp"
#include "selberg/weight.hpp"
#include "selberg/zeta.hpp"

namespace selberg::cli {

/// Bad command line; main() reports it and exits with status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Command {
  std::string verb;
  /// Raw flag values as given, keyed by flag name without dashes.
  std::map<std::string, std::vector<std::string>> options;

  std::vector<int> ns;
  std::optional<Weight> weight;
  bool k_type = false;
  Rational lambda_max{20};
  Rational max_entry{2};
  std::string spectrum_path;
  std::string spectral_path;
  std::string kind;
  std::vector<std::complex<double>> args;
  std::vector<std::complex<double>> points;
  std::vector<double> dets;
  bool csv = false;
  bool c_table = false;
  int table_powers = 3;
  TruncationPolicy policy;
  int threads = 1;
  /// Set when --help was requested; execute() prints it.
  std::optional<std::string> help;
};

/// argv without the program name. Throws UsageError.
Command parse_args(const std::vector<std::string>& args);

/// Writes the payload to `out` and diagnostics to `err`; returns the exit code.
int execute(const Command& cmd, std::ostream& out, std::ostream& err);

/// parse_args + execute with the documented exit codes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace selberg::cli
