#pragma once

#include <cstdint>
#include <string>

namespace gthick {

// Runtime knobs shared by the oracles and the CLI. Defaults keep every
// operation deterministic; the solver command is empty when no external
// solver is configured.
struct RunConfig {
    std::string solver_command;      // e.g. "z3 -smt2"; "" = unconfigured
    int solver_timeout_sec = 30;
    size_t coloring_budget = 64;     // conflict-graph size bound
    uint64_t enumeration_budget = 1000000;  // brute-force coloring cap
    int placement_tries = 300;       // random placements per decision
    uint64_t seed = 0;
    std::string output_dir = ".";

    // File of "key value" lines, then environment overrides
    // (GTHICK_SOLVER, GTHICK_SOLVER_TIMEOUT).
    static RunConfig load(const std::string& path);
    static RunConfig from_environment(RunConfig base);
};

}  // namespace gthick
