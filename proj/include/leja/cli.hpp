#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace leja {

enum class Command {
  gen,
  star,
  growth,
  lebesgue,
  interp,
  verify,
  fig3,
};

enum class OutputFormat {
  csv,
  json,
};

struct RunConfig {
  Command command = Command::gen;
  std::string domain = "0,1";
  int n = 16;
  std::vector<int> stages;  // command-specific defaults apply when empty
  double s1 = 0.5;
  std::uint64_t seed = 42;
  int trials = 100;
  OutputFormat format = OutputFormat::csv;
  std::string output;             // empty writes to the out stream
  std::string fn_id = "exp";      // interp sample function
  std::string source = "fast-leja";  // interp node family
  std::string which = "all";      // verify target: lemma2, prop3 or all
  int grid_multiplier = 10;       // lebesgue grid density
};

/// Dispatches a validated config: writes the command's CSV/JSON report to
/// `output` (or the out stream) and returns the exit status. 0 = success,
/// 1 = a verification produced a false ok flag, 2 = usage error (one-line
/// diagnostic on err).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it; same exit conventions.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace leja
