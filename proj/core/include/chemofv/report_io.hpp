#ifndef CHEMOFV_REPORT_IO_HPP
#define CHEMOFV_REPORT_IO_HPP

#include <string>

#include "chemofv/config.hpp"
#include "chemofv/stepper.hpp"

namespace chemofv {

/// 17-significant-digit decimal text; re-parses to the bit-identical double.
std::string format_double17(double v);

/// diagnostics.csv body: pinned header t,mass,mean,umax,ltheta,w1q,mass_id_err,dt
/// and one row per record.
std::string diagnostics_csv(const std::vector<DiagnosticsRecord>& series);

/// sweep.csv body; viscosity adds a sup_err column, transient adds
/// attained/attain_cell/attain_time columns.
std::string sweep_csv(const SweepResult& result, RunMode mode, double M);

/// Writes config_echo.cfg, diagnostics.csv, verdict.json and any u_<step>.csv
/// snapshots for a single-mode run. Throws IoError on write failure.
void emit_run_outputs(const std::string& dir, const RunConfig& cfg, const RunReport& report);

void emit_viscosity_outputs(const std::string& dir, const RunConfig& cfg,
                            const ViscosityResult& result);
void emit_threshold_outputs(const std::string& dir, const RunConfig& cfg,
                            const ThresholdResult& result);
void emit_transient_outputs(const std::string& dir, const RunConfig& cfg,
                            const TransientResult& result);
void emit_ar_check_outputs(const std::string& dir, const RunConfig& cfg,
                           const ArCrossReport& report);

} // namespace chemofv

#endif
