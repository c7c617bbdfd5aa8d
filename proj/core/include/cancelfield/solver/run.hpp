#pragma once

#include "cancelfield/solver/stepper.hpp"

#include <optional>
#include <vector>

namespace cancelfield::solver {

struct RunOptions {
    std::size_t snapshot_every{0}; // 0: no snapshots
    Forcing forcing;
    std::size_t max_steps{10'000'000};
};

struct Snapshot {
    std::size_t step;
    double t;
    ScalarField2D u;
    std::optional<ScalarField2D> f;
};

template <class State>
struct RunResult {
    State final_state;
    std::vector<Snapshot> snapshots;
    std::size_t steps{0};
};

/// Steps until cfg.t_end; the last step is shortened to land on t_end.
/// Snapshots are taken after every `snapshot_every`-th step (the initial
/// state is not recorded).
RunResult<PrandtlState> run(PrandtlState s, const SolverConfig& cfg, const RunOptions& opts = {});
RunResult<MhdState> run(MhdState s, const SolverConfig& cfg, const RunOptions& opts = {});

} // namespace cancelfield::solver
