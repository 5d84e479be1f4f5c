#ifndef CHEMOFV_STEPPER_HPP
#define CHEMOFV_STEPPER_HPP

#include <limits>
#include <utility>
#include <vector>

#include "chemofv/diagnostics.hpp"
#include "chemofv/helmholtz.hpp"
#include "chemofv/sim_state.hpp"

namespace chemofv {

enum class RunVerdict { completed, blowup_detected, step_underflow };

const char* to_string(RunVerdict v);

/// Builds the initial state: validates u0 >= 0 and solves the signal chain.
SimState make_state(const Field& u0, const Params& p, const SolveConfig& ecfg);

/// Advances one step. The step size is
///   dt = min(dt_max, cfl / max_outflow_rate, dt_cap),
/// where the outflow rate combines the per-cell upwind outflow speeds with the
/// explicit diffusion rate, so accepted states stay nonnegative for cfl <= 0.9.
/// Transport and diffusion are explicit, the damping is semi-implicit, and the
/// signals are re-solved afterwards. dt_cap only aligns the step with an event
/// time (it may undercut dt_min without declaring underflow); a stability
/// demand below dt_min returns verdict step_underflow with the state unchanged.
/// A negative cell after the sweep throws InternalError: it is a bug, not a
/// result, and is never clamped.
StepOutcome step(SimState state, const Params& p, const StepConfig& scfg,
                 const SolveConfig& ecfg,
                 double dt_cap = std::numeric_limits<double>::infinity());

/// Running extrema maintained at every accepted step (the diagnostics series
/// only samples at the record cadence).
struct RunMonitors {
    double max_umax = 0.0;
    int max_umax_cell = -1;
    double max_umax_time = 0.0;
    double max_mean = 0.0;
    double max_mass_id_err = 0.0;
    double min_dt = std::numeric_limits<double>::infinity();
};

struct RunReport {
    std::vector<DiagnosticsRecord> series;
    RunVerdict verdict = RunVerdict::completed;
    double terminal_time = 0.0;
    double terminal_umax = 0.0;
    long steps = 0;
    RunMonitors monitors;
    SimState final_state;
    std::vector<std::pair<double, Field>> snapshots;     // (time, u) at requested times
    std::vector<std::pair<long, Field>> step_snapshots;  // (step, u) at the step cadence
};

/// Steps from u0 until t >= t_end or a non-advanced verdict. Diagnostics are
/// recorded every probes.cadence-th accepted step plus the terminal step; the
/// monitors cover every accepted step and the initial state. snapshot_times
/// (sorted, within (0, t_end]) are hit exactly by clipping dt;
/// snapshot_every_steps > 0 additionally stores u every k-th step.
RunReport run(const Field& u0, const Params& p, double t_end, const StepConfig& scfg,
              const SolveConfig& ecfg, const DiagnosticsConfig& probes,
              const std::vector<double>& snapshot_times = {},
              int snapshot_every_steps = 0);

} // namespace chemofv

#endif
