#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace loccode
{
    struct CheckRow
    {
        std::string id;
        std::string group; // hypercube, graphs, grids
        std::string description;
        bool passed = false;
        std::string detail;
        double seconds = 0.0;
    };

    struct CheckOptions
    {
        std::optional<std::string> only;
        unsigned threads = 1;
        std::uint64_t seed = 1;
    };

    auto check_groups() -> std::vector<std::string>;

    /// Replays every reference result. Rows never throw: failures and
    /// exceptions are recorded in the row.
    auto run_check_suite(const CheckOptions & options = {}) -> std::vector<CheckRow>;
}
