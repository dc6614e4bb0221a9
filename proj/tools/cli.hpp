#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "weylcheb/orbit.hpp"
#include "weylcheb/rootsystem.hpp"
#include "weylcheb/table_io.hpp"

namespace weylcheb::cli {

enum class Command { Table, GenFunc, Verify, RecurrenceTable, CrossCheck };

inline constexpr std::int64_t kMaxIndex = 64;

struct CliConfig {
    Command command = Command::Table;
    AlgebraId algebra = AlgebraId::G2;
    Kind kind = Kind::Second;
    std::int64_t max_m = 4;
    std::int64_t max_n = 4;
    OutputFormat format = OutputFormat::Json;
    std::uint64_t seed = 0;
    std::size_t samples = 100;
    double tol = 1e-8;
    std::optional<std::string> output_path;
};

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Executes a validated configuration.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses arguments (argv[0] is the program name) and runs.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weylcheb::cli
