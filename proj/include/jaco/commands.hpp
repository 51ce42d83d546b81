// commands.hpp
//
// Subcommands of the `jaco` tool. Each writes its normal output to `out`,
// diagnostics to `err`, and returns the process exit code.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <vector>

#include "jaco/report.hpp"

namespace jaco::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDisagree = 2;

/// Version stamped in the header comment of every text format.
inline constexpr int kFormatVersion = 1;

/// Largest n the oracle handles in `crosscheck` without --force.
inline constexpr Count kCrosscheckOracleMax = 2000;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  bool bare = false;   // suppress the versioned header comment
  bool force = false;  // lift the oracle size guard
};

enum class TableFormat { kCsv, kPretty };
enum class ExportFormat { kEdgeList, kDot };

/// nullopt selects every method.
using MethodSelection = std::optional<Method>;

int cmd_table(Count n, TableFormat format, const Options& opts, std::ostream& out,
              std::ostream& err);
int cmd_edges(Count n, MethodSelection method, const Options& opts, std::ostream& out,
              std::ostream& err);
int cmd_crosscheck(Count lo, Count hi, const Options& opts, std::ostream& out, std::ostream& err);
int cmd_export(Count n, ExportFormat format, const Options& opts, std::ostream& out,
               std::ostream& err);
int cmd_zeck(Count n, const Options& opts, std::ostream& out, std::ostream& err);
int cmd_bench(const std::vector<Count>& ns, const Options& opts, std::ostream& out,
              std::ostream& err);

}  // namespace jaco::cli
