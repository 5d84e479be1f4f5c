#include "chemofv/stepper.hpp"

#include <algorithm>
#include <cmath>

#include "chemofv/advection.hpp"
#include "chemofv/reaction.hpp"

namespace chemofv {

const char* to_string(RunVerdict v) {
    switch (v) {
    case RunVerdict::completed: return "completed";
    case RunVerdict::blowup_detected: return "blowup_detected";
    case RunVerdict::step_underflow: return "step_underflow";
    }
    return "unknown";
}

StepConfig validate_step_config(const StepConfig& cfg) {
    if (!(cfg.cfl > 0.0 && cfg.cfl <= 0.9)) throw DomainError("cfl must lie in (0, 0.9]");
    if (!(cfg.dt_min > 0.0)) throw DomainError("dt_min must be positive");
    if (!(cfg.dt_min < cfg.dt_max)) throw DomainError("dt_min must be below dt_max");
    if (!(cfg.blowup_cutoff > 0.0)) throw DomainError("blowup_cutoff must be positive");
    return cfg;
}

SimState make_state(const Field& u0, const Params& p, const SolveConfig& ecfg) {
    validate_params(p);
    if (u0.min() < 0.0) throw DomainError("u0 must be nonnegative");
    SimState state;
    state.u = u0;
    auto [v, w] = solve_signals(u0, p, ecfg);
    state.v = std::move(v);
    state.w = std::move(w);
    return state;
}

StepOutcome step(SimState state, const Params& p, const StepConfig& scfg,
                 const SolveConfig& ecfg, double dt_cap) {
    validate_step_config(scfg);
    const Grid& g = state.u.grid();

    const double rate = max_outflow_rate(state.v, g, p.eps);
    double dt = scfg.dt_max;
    if (rate > 0.0) dt = std::min(dt, scfg.cfl / rate);
    if (dt < scfg.dt_min) return {std::move(state), StepVerdict::step_underflow};
    dt = std::min(dt, dt_cap);

    Field rhs = advection_divergence(state.u, state.v, g);
    if (p.eps > 0.0) {
        Field lap = laplacian(state.u, g);
        for (int k = 0; k < rhs.size(); ++k) rhs[k] += p.eps * lap[k];
    }
    Field u_new(g);
    for (int k = 0; k < u_new.size(); ++k) u_new[k] = state.u[k] + dt * rhs[k];
    u_new = reaction_update(u_new, p, dt);

    for (int k = 0; k < u_new.size(); ++k)
        if (u_new[k] < 0.0)
            throw InternalError("negative cell after explicit sweep (CFL breach)");

    auto [v, w] = solve_signals(u_new, p, ecfg, state.v, state.w);

    StepOutcome out;
    out.state.u = std::move(u_new);
    out.state.v = std::move(v);
    out.state.w = std::move(w);
    out.state.t = state.t + dt;
    out.state.dt_last = dt;
    out.state.step_count = state.step_count + 1;
    out.verdict = out.state.u.max() > scfg.blowup_cutoff ? StepVerdict::blowup_detected
                                                         : StepVerdict::advanced;
    return out;
}

namespace {

void update_monitors(RunMonitors& m, const SimState& state, const Params& p) {
    const Field& u = state.u;
    int arg = 0;
    double umax = u[0];
    for (int k = 1; k < u.size(); ++k)
        if (u[k] > umax) {
            umax = u[k];
            arg = k;
        }
    if (umax > m.max_umax || m.max_umax_cell < 0) {
        m.max_umax = umax;
        m.max_umax_cell = arg;
        m.max_umax_time = state.t;
    }
    m.max_mean = std::max(m.max_mean, u.mean());
    m.max_mass_id_err = std::max(m.max_mass_id_err, mass_identity_error(state, p));
    if (state.step_count > 0) m.min_dt = std::min(m.min_dt, state.dt_last);
}

} // namespace

RunReport run(const Field& u0, const Params& p, double t_end, const StepConfig& scfg,
              const SolveConfig& ecfg, const DiagnosticsConfig& probes,
              const std::vector<double>& snapshot_times, int snapshot_every_steps) {
    validate_params(p);
    validate_step_config(scfg);
    validate_solve_config(ecfg);
    validate_diagnostics_config(probes, u0.grid().dim);
    if (u0.min() < 0.0) throw DomainError("u0 must be nonnegative");
    if (!(u0.max() > 0.0)) throw DomainError("u0 must be positive somewhere");
    if (!(t_end >= 0.0)) throw DomainError("t_end must be nonnegative");

    RunReport report;
    SimState state = make_state(u0, p, ecfg);
    update_monitors(report.monitors, state, p);

    size_t next_snap = 0;
    const double snap_tol = 1e-12 * std::max(1.0, t_end);
    const auto due = [&](double t) {
        return next_snap < snapshot_times.size() && t >= snapshot_times[next_snap] - snap_tol;
    };

    double last_recorded_t = -1.0;
    const double t_done = t_end - snap_tol;

    while (state.t < t_done) {
        double dt_cap = t_end - state.t;
        if (next_snap < snapshot_times.size())
            dt_cap = std::min(dt_cap, snapshot_times[next_snap] - state.t);

        StepOutcome outcome = step(std::move(state), p, scfg, ecfg, dt_cap);
        state = std::move(outcome.state);

        if (outcome.verdict == StepVerdict::step_underflow) {
            report.verdict = RunVerdict::step_underflow;
            break;
        }

        update_monitors(report.monitors, state, p);
        while (due(state.t)) {
            report.snapshots.emplace_back(snapshot_times[next_snap], state.u);
            ++next_snap;
        }
        if (snapshot_every_steps > 0 && state.step_count % snapshot_every_steps == 0)
            report.step_snapshots.emplace_back(state.step_count, state.u);
        if (state.step_count % probes.cadence == 0) {
            report.series.push_back(record(state, p, probes));
            last_recorded_t = state.t;
        }
        if (outcome.verdict == StepVerdict::blowup_detected) {
            report.verdict = RunVerdict::blowup_detected;
            break;
        }
    }

    if (state.step_count > 0 && state.t != last_recorded_t)
        report.series.push_back(record(state, p, probes));

    report.terminal_time = state.t;
    report.terminal_umax = state.u.max();
    report.steps = state.step_count;
    report.final_state = std::move(state);
    return report;
}

} // namespace chemofv
