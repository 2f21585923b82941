#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cli/report.hpp"
#include "k3atlas/curves.hpp"

namespace k3atlas::cli {

enum class Command { verify_points, verify_maps, verify_tower, modular, search, report };

struct RunConfig {
  Command command = Command::report;
  std::optional<long> d;
  std::optional<int> bits;
  std::optional<CurveId> curve;
  std::optional<long> height;
  std::optional<long> box;
  std::optional<unsigned> partitions;
  unsigned jobs = 1;
  Format format = Format::text;
  std::optional<std::string> out;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

inline constexpr long kReportHeight = 200;
inline constexpr long kReportBox = 50;
inline constexpr unsigned kDefaultPartitions = 16;

std::string command_name(Command c);

// Executes the command. Throws UsageError for flag combinations or values
// the command cannot accept.
Report run(const RunConfig &cfg);

// Parses arguments (args[0] is the program name), runs, writes the report
// to `out` or to the --out file, and returns the process exit code.
int main_entry(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace k3atlas::cli
