// Suite configs and the verify runner: JSON in, line-delimited report out,
// deterministic byte-for-byte in (config, seed).

#pragma once

#include "cealg/generators.hpp"
#include "cealg/reductions.hpp"

#include <string>

namespace cealg {

struct VerifyOutcome {
    std::string report;
    bool pass = false;
    int suites_run = 0;
    int disagreements = 0;
};

// Throws parse_error on malformed configs; any suite disagreement flips
// pass to false.
VerifyOutcome run_verify_config(const std::string& config_json);

// Pair generation from a JSON generator spec (used by verify and the gen
// command); returns labeled pairs.
std::vector<TracePair> generate_pairs_from_spec(const std::string& generator_json,
                                                std::uint64_t seed, int count);

}  // namespace cealg
