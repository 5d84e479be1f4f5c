#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "chemofv/report_io.hpp"

namespace {

using namespace chemofv;

int resolve_workers(int cli_workers, int config_workers) {
    if (cli_workers > 0) return cli_workers;
    if (const char* env = std::getenv("SIM_WORKERS")) {
        const int w = std::atoi(env);
        if (w > 0) return w;
    }
    return config_workers;
}

Field build_u0(const RunConfig& cfg) {
    const Grid grid = cfg.grid();
    if (cfg.u0.uniform) return make_uniform(grid, cfg.u0.value);
    return make_bump(grid, {cfg.u0.cx, cfg.u0.cy}, cfg.u0.width, cfg.u0.target_ltheta,
                     cfg.params.theta);
}

int run_cli(const std::string& config_path, const std::string& out_override,
            int cli_workers, bool quiet) {
    std::ifstream in(config_path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read config file '" << config_path << "'\n";
        return 2;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();

    RunConfig cfg = parse_config(buffer.str());
    if (!out_override.empty()) cfg.output.dir = out_override;
    cfg.sweep_workers = resolve_workers(cli_workers, cfg.sweep_workers);

    switch (cfg.mode) {
    case RunMode::single: {
        const Field u0 = build_u0(cfg);
        const RunReport report = run(u0, cfg.params, cfg.t_end, cfg.step, cfg.solve,
                                     cfg.diag, {}, cfg.output.snapshot_every);
        emit_run_outputs(cfg.output.dir, cfg, report);
        if (!quiet)
            std::cout << "single: verdict=" << to_string(report.verdict)
                      << " t=" << report.terminal_time << " umax=" << report.terminal_umax
                      << " steps=" << report.steps << "\n";
        break;
    }
    case RunMode::viscosity: {
        const ViscosityResult result = viscosity_vanishing(cfg.sweep_spec());
        emit_viscosity_outputs(cfg.output.dir, cfg, result);
        if (!quiet) {
            std::cout << "viscosity: strictly_decreasing="
                      << (result.strictly_decreasing ? "yes" : "no") << " sup_err=";
            for (size_t k = 0; k < result.sup_err.size(); ++k)
                std::cout << (k ? "," : "") << result.sup_err[k];
            std::cout << "\n";
        }
        break;
    }
    case RunMode::threshold: {
        const ThresholdResult result = threshold_map(cfg.sweep_spec());
        emit_threshold_outputs(cfg.output.dir, cfg, result);
        if (!quiet)
            std::cout << "threshold: completed_below=" << result.all_completed_below
                      << " blowup_above=" << result.all_blowup_above
                      << " monotone_band=" << (result.monotone_band ? "yes" : "no") << "\n";
        break;
    }
    case RunMode::transient: {
        const TransientResult result = transient_growth(cfg.sweep_spec(), cfg.sweep_M);
        emit_transient_outputs(cfg.output.dir, cfg, result);
        if (!quiet) {
            std::cout << "transient: M=" << cfg.sweep_M;
            if (result.found)
                std::cout << " eps0=" << result.eps0;
            else
                std::cout << " eps0=none";
            std::cout << "\n";
        }
        break;
    }
    case RunMode::ar_check: {
        const Field u0 = build_u0(cfg);
        const ArCrossReport report =
            ar_crosscheck(cfg.ar_params(), u0, cfg.t_end, cfg.step, cfg.solve);
        emit_ar_check_outputs(cfg.output.dir, cfg, report);
        if (!quiet)
            std::cout << "ar_check: max_deviation=" << report.max_deviation
                      << " steps=" << report.steps << "\n";
        break;
    }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-volume chemotaxis simulator"};
    std::string config_path;
    std::string out_dir;
    int workers = 0;
    bool quiet = false;
    app.add_option("--config", config_path, "path to the run config")->required();
    app.add_option("--out", out_dir, "output directory (overrides output.dir)");
    app.add_option("--workers", workers, "sweep worker count (overrides SIM_WORKERS)");
    app.add_flag("--quiet", quiet, "suppress the summary line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return run_cli(config_path, out_dir, workers, quiet);
    } catch (const ParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const ExperimentError& e) {
        std::cerr << "experiment error: " << e.what() << "\n";
        return 2;
    } catch (const ConvergenceError& e) {
        std::cerr << "solver error: " << e.what()
                  << " (residual " << e.achieved_residual << ")\n";
        return 3;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
