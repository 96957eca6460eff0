#ifndef NULLPROP_CLI_RUN_HPP
#define NULLPROP_CLI_RUN_HPP

#include "nullprop/cli/config.hpp"

#include <filesystem>
#include <iosfwd>

namespace nullprop::cli
{

/// Exit codes: 0 success, 1 runtime/data error, 2 usage error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

/// Executes one command. The artifact goes to config.output when set and to
/// `out` otherwise; failures are reported on `err` as a one-line JSON object
/// {"error": {"command", "kind", "message"}}.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// The embedded config of a JSON report written by run().
RunConfig config_from_report(const std::filesystem::path& report);

} // namespace nullprop::cli

#endif // NULLPROP_CLI_RUN_HPP
