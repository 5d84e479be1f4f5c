#include "chemofv/report_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace chemofv {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

std::string format_double17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string diagnostics_csv(const std::vector<DiagnosticsRecord>& series) {
    std::ostringstream out;
    out << "t,mass,mean,umax,ltheta,w1q,mass_id_err,dt\n";
    for (const auto& r : series) {
        out << format_double17(r.t) << ',' << format_double17(r.mass) << ','
            << format_double17(r.mean) << ',' << format_double17(r.umax) << ','
            << format_double17(r.ltheta) << ',' << format_double17(r.w1q) << ','
            << format_double17(r.mass_id_err) << ',' << format_double17(r.dt) << '\n';
    }
    return out.str();
}

std::string sweep_csv(const SweepResult& result, RunMode mode, double M) {
    std::ostringstream out;
    out << "value,seed,verdict,terminal_time,max_umax,final_t,final_mass,final_mean,"
           "final_umax,final_ltheta,final_w1q,final_mass_id_err,final_dt";
    if (mode == RunMode::viscosity) out << ",sup_err";
    if (mode == RunMode::transient) out << ",attained,attain_cell,attain_time";
    out << '\n';
    for (const auto& row : result.rows) {
        const auto& d = row.final_diag;
        out << format_double17(row.value) << ',' << row.seed << ','
            << to_string(row.verdict) << ',' << format_double17(row.terminal_time) << ','
            << format_double17(row.max_umax) << ',' << format_double17(d.t) << ','
            << format_double17(d.mass) << ',' << format_double17(d.mean) << ','
            << format_double17(d.umax) << ',' << format_double17(d.ltheta) << ','
            << format_double17(d.w1q) << ',' << format_double17(d.mass_id_err) << ','
            << format_double17(d.dt);
        if (mode == RunMode::viscosity) out << ',' << format_double17(row.sup_err);
        if (mode == RunMode::transient)
            out << ',' << (row.max_umax > M ? 1 : 0) << ',' << row.attain_cell << ','
                << format_double17(row.attain_time);
        out << '\n';
    }
    return out.str();
}

namespace {

void write_file(const fs::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << body;
    out.flush();
    if (!out) throw IoError("write failed for '" + path.string() + "'");
}

fs::path prepare_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    const fs::path p(dir);
    if (!fs::is_directory(p)) throw IoError("cannot create output directory '" + dir + "'");
    return p;
}

std::string field_csv(const Field& f) {
    std::ostringstream out;
    const Grid& g = f.grid();
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            if (i) out << ',';
            out << format_double17(f.at(i, j));
        }
        out << '\n';
    }
    return out.str();
}

ordered_json run_header(const RunConfig& cfg) {
    ordered_json h;
    h["version"] = "chemofv 0.1.0";
    h["mode"] = to_string(cfg.mode);
    std::ostringstream grid;
    grid << cfg.grid_dim << "d " << cfg.grid_nx << "x" << cfg.grid_ny << " ["
         << format_double17(cfg.grid_lx) << " x " << format_double17(cfg.grid_ly) << "]";
    h["grid"] = grid.str();
    return h;
}

} // namespace

void emit_run_outputs(const std::string& dir, const RunConfig& cfg, const RunReport& report) {
    const fs::path base = prepare_dir(dir);
    write_file(base / "config_echo.cfg", emit_config(cfg));
    write_file(base / "diagnostics.csv", diagnostics_csv(report.series));

    ordered_json v = run_header(cfg);
    v["verdict"] = to_string(report.verdict);
    v["terminal_time"] = report.terminal_time;
    v["terminal_umax"] = report.terminal_umax;
    v["steps"] = report.steps;
    v["max_umax"] = report.monitors.max_umax;
    v["max_mass_id_err"] = report.monitors.max_mass_id_err;
    write_file(base / "verdict.json", v.dump(2) + "\n");

    for (const auto& [step, field] : report.step_snapshots)
        write_file(base / ("u_" + std::to_string(step) + ".csv"), field_csv(field));
}

namespace {

void emit_sweep_common(const fs::path& base, const RunConfig& cfg,
                       const SweepResult& sweep, ordered_json verdict) {
    write_file(base / "config_echo.cfg", emit_config(cfg));
    write_file(base / "sweep.csv", sweep_csv(sweep, cfg.mode, cfg.sweep_M));
    write_file(base / "verdict.json", verdict.dump(2) + "\n");
}

} // namespace

void emit_viscosity_outputs(const std::string& dir, const RunConfig& cfg,
                            const ViscosityResult& result) {
    const fs::path base = prepare_dir(dir);
    ordered_json v = run_header(cfg);
    v["verdict"] = "completed";
    v["nonincreasing"] = result.nonincreasing;
    v["strictly_decreasing"] = result.strictly_decreasing;
    v["eps"] = result.eps_desc;
    v["sup_err"] = result.sup_err;
    emit_sweep_common(base, cfg, result.sweep, std::move(v));
}

void emit_threshold_outputs(const std::string& dir, const RunConfig& cfg,
                            const ThresholdResult& result) {
    const fs::path base = prepare_dir(dir);
    ordered_json v = run_header(cfg);
    v["verdict"] = "completed";
    v["has_completed"] = result.has_completed;
    v["has_blowup"] = result.has_blowup;
    v["all_completed_below"] = result.all_completed_below;
    v["all_blowup_above"] = result.all_blowup_above;
    v["monotone_band"] = result.monotone_band;
    emit_sweep_common(base, cfg, result.sweep, std::move(v));
}

void emit_transient_outputs(const std::string& dir, const RunConfig& cfg,
                            const TransientResult& result) {
    const fs::path base = prepare_dir(dir);
    ordered_json v = run_header(cfg);
    v["verdict"] = "completed";
    v["M"] = cfg.sweep_M;
    v["found"] = result.found;
    if (result.found) v["eps0"] = result.eps0;
    v["qualified_downward_closed"] = result.qualified_downward_closed;
    v["umax_monotone"] = result.umax_monotone;
    emit_sweep_common(base, cfg, result.sweep, std::move(v));
}

void emit_ar_check_outputs(const std::string& dir, const RunConfig& cfg,
                           const ArCrossReport& report) {
    const fs::path base = prepare_dir(dir);
    write_file(base / "config_echo.cfg", emit_config(cfg));
    ordered_json v = run_header(cfg);
    v["verdict"] = to_string(report.reduced_verdict);
    v["max_deviation"] = report.max_deviation;
    v["steps"] = report.steps;
    v["t_reached"] = report.t_reached;
    write_file(base / "verdict.json", v.dump(2) + "\n");
}

} // namespace chemofv
