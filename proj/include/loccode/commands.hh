#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace loccode
{
    inline constexpr const char * tool_version = "0.1.0";
    inline constexpr int report_schema = 1;

    enum ExitCode : int
    {
        exit_ok = 0,
        exit_invalid = 1,   // invalid code, or infeasible with a certificate
        exit_usage = 2,
        exit_unknown = 3    // budget exhausted
    };

    /// Runs one command line (without the program name). JSON reports go to
    /// out; human-readable tables and diagnostics go to err.
    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}
