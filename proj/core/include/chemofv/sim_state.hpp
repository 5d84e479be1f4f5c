#ifndef CHEMOFV_SIM_STATE_HPP
#define CHEMOFV_SIM_STATE_HPP

#include "chemofv/field.hpp"

namespace chemofv {

/// Solution triple plus time bookkeeping. At every accepted step u is
/// componentwise nonnegative and v, w satisfy their discrete elliptic
/// equations to the configured residual tolerance.
struct SimState {
    Field u;
    Field v;
    Field w;
    double t = 0.0;
    double dt_last = 0.0;
    long step_count = 0;
};

enum class StepVerdict { advanced, blowup_detected, step_underflow };

/// Step control. blowup_cutoff and dt_min are the two finite proxies for the
/// extensibility criterion limsup ||u||_inf = +infinity; both are logged so a
/// blow-up verdict is auditable.
struct StepConfig {
    double cfl = 0.4;           // in (0, 0.9]
    double dt_max = 1e-2;
    double dt_min = 1e-12;
    double blowup_cutoff = 1e6; // u_max threshold declaring blow-up
};

StepConfig validate_step_config(const StepConfig& cfg);

struct StepOutcome {
    SimState state;
    StepVerdict verdict = StepVerdict::advanced;
};

} // namespace chemofv

#endif
