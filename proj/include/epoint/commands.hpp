#pragma once

// The analysis commands behind the CLI. Each takes a parsed RunConfig and
// produces text outputs plus a status; nothing here touches the filesystem.

#include "epoint/matkit.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace epoint {

enum class Status {
    ok,
    config_error,
    degenerate_model,
    disagreement,
    path_failure,
    precondition,
    internal_error,
};

const char* to_string(Status s) noexcept;

struct GridAxis {
    std::string param;  ///< tau0, tau1, phi0, phi1, or tau (tau0 = tau1)
    double start = 0.0;
    double stop = 0.0;
    int count = 0;
};

struct LoopSpec {
    std::optional<std::string> around;  ///< "plus" or "minus"
    std::optional<double> center_re, center_im;
    std::optional<double> radius;
    int steps = 256;
    int turns = 1;
    bool clockwise = false;
};

struct RunConfig {
    ModelParams model;
    std::uint64_t seed = 0;
    int property_draws = 0;
    std::vector<GridAxis> axes;
    LoopSpec loop;
};

/// Parses the config JSON. Malformed input throws Error(config) with the
/// offending line number in the message.
RunConfig parse_config(std::string_view text);

struct CommandResult {
    Status status = Status::ok;
    std::string primary;    ///< JSON report, or CSV for sweep/encircle
    std::string secondary;  ///< encircle JSON summary
    std::string message;    ///< diagnostic on failure
};

CommandResult cmd_find_ep(const RunConfig& cfg);
CommandResult cmd_vector(const RunConfig& cfg);
CommandResult cmd_sweep(const RunConfig& cfg);
CommandResult cmd_encircle(const RunConfig& cfg);

/// Parses `config_text` and dispatches on `command` ("find-ep", "vector",
/// "sweep", "encircle"). Never throws.
CommandResult run_command(std::string_view command, std::string_view config_text,
                          std::optional<std::uint64_t> seed_override);

}  // namespace epoint
