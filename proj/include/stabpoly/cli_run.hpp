#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stabpoly/json_io.hpp"

namespace stabpoly::cli {

inline constexpr const char* kToolName = "stabpoly";
inline constexpr const char* kToolVersion = "0.1.0";

struct CommandRequest {
    std::string subcommand;
    std::string kind;                 // verify family or construct kind
    std::vector<std::string> inputs;  // file paths
    std::string mode = "positive-orthant";  // rayleigh: or "all-reals"
    std::vector<std::string> alphas;  // realify candidates, "p/q" literals
    int root = 1;                     // spanning-tree root, 1-indexed
    std::uint64_t seed = 0;
    int samples = 10000;
    int descent = 50;
    std::string out_path;             // empty writes to stdout
};

struct RunOutcome {
    int exit_code = 0;
    io::Json report;
};

/// Executes a request without throwing.  Exit codes: 2 = parse or format
/// error, 3 = module precondition violation, 70 = internal invariant
/// failure; otherwise the subcommand verdict (0 = clean, 1 = violation or
/// refutation found, 4 = budget exhausted, 10 = obstruction established).
/// The report always embeds tool version, seed, budget, input hash, and a
/// timing field; everything but the timing is deterministic.
RunOutcome run(const CommandRequest& req);

}  // namespace stabpoly::cli
