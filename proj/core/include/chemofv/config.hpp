#ifndef CHEMOFV_CONFIG_HPP
#define CHEMOFV_CONFIG_HPP

#include <string>

#include "chemofv/experiments.hpp"

namespace chemofv {

enum class RunMode { single, viscosity, threshold, transient, ar_check };

const char* to_string(RunMode m);
const char* to_string(SweepVariable v);

struct OutputConfig {
    std::string dir = "out";
    int snapshot_every = 0; // emit u_<step>.csv every k steps; 0 disables
};

/// Everything a run needs, parsed from `section.key = value` text. Unknown
/// keys are errors; all defaults are documented in the README. chi and xi are
/// consumed by ar_check mode only.
struct RunConfig {
    RunMode mode = RunMode::single;
    double t_end = 1.0; // single and ar_check horizon
    Params params;
    double chi = 0.0;
    double xi = 0.0;
    int grid_dim = 1;
    int grid_nx = 64;
    int grid_ny = 1;
    double grid_lx = 1.0;
    double grid_ly = 1.0;
    BumpSpec u0;
    StepConfig step;
    SolveConfig solve;
    DiagnosticsConfig diag;
    SweepVariable sweep_variable = SweepVariable::eps;
    std::vector<double> sweep_values;
    double sweep_t_end = 1.0;
    int sweep_seeds = 1;
    int sweep_workers = 1;
    double sweep_M = 0.0;
    OutputConfig output;

    Grid grid() const { return Grid::make(grid_dim, grid_nx, grid_ny, grid_lx, grid_ly); }
    SweepSpec sweep_spec() const;
    ARParams ar_params() const;
};

/// Strict parse: `section.key = value` lines, `#` comments, locale-independent
/// numbers. Throws ParseError (with line number) on malformed or unknown text
/// and ValidationError naming the first violated model constraint.
RunConfig parse_config(const std::string& text);

/// Canonical echo; parse(emit_config(cfg)) reproduces cfg exactly.
std::string emit_config(const RunConfig& cfg);

} // namespace chemofv

#endif
