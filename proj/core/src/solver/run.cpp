#include "cancelfield/solver/run.hpp"

#include "cancelfield/error.hpp"

#include <sstream>

namespace cancelfield::solver {

namespace {

Snapshot take(const PrandtlState& s, std::size_t step) { return {step, s.t, s.u, std::nullopt}; }
Snapshot take(const MhdState& s, std::size_t step) { return {step, s.t, s.u, s.f}; }

PrandtlState advance(const PrandtlState& s, const SolverConfig& cfg, double dt, const Forcing& f, std::size_t n) {
    return step_prandtl(s, cfg, dt, f, n);
}
MhdState advance(const MhdState& s, const SolverConfig& cfg, double dt, const Forcing& f, std::size_t n) {
    return step_mhd(s, cfg, dt, f, n);
}

template <class State>
RunResult<State> run_impl(State s, const SolverConfig& cfg, const RunOptions& opts) {
    if (cfg.t_end < s.t) throw Error("t_end lies before the initial time");
    RunResult<State> out{std::move(s), {}, 0};
    // Relative slack so that round-off in the accumulated time does not
    // produce a sliver step.
    const double eps = 1e-12 * std::max(1.0, std::abs(cfg.t_end));
    while (out.final_state.t < cfg.t_end - eps) {
        if (out.steps >= opts.max_steps) {
            std::ostringstream os;
            os << "step limit " << opts.max_steps << " reached at t=" << out.final_state.t;
            throw Error(os.str());
        }
        const std::size_t n = out.steps + 1;
        double dt = select_dt(out.final_state, cfg, n);
        const bool last = out.final_state.t + dt >= cfg.t_end - eps;
        if (last) dt = cfg.t_end - out.final_state.t;
        out.final_state = advance(out.final_state, cfg, dt, opts.forcing, n);
        if (last) out.final_state.t = cfg.t_end;
        out.steps = n;
        if (opts.snapshot_every > 0 && n % opts.snapshot_every == 0) {
            out.snapshots.push_back(take(out.final_state, n));
        }
    }
    return out;
}

} // namespace

RunResult<PrandtlState> run(PrandtlState s, const SolverConfig& cfg, const RunOptions& opts) {
    return run_impl(std::move(s), cfg, opts);
}

RunResult<MhdState> run(MhdState s, const SolverConfig& cfg, const RunOptions& opts) {
    return run_impl(std::move(s), cfg, opts);
}

} // namespace cancelfield::solver
