#include "chemofv/config.hpp"

#include <charconv>
#include <cstdio>
#include <map>
#include <sstream>

namespace chemofv {

const char* to_string(RunMode m) {
    switch (m) {
    case RunMode::single: return "single";
    case RunMode::viscosity: return "viscosity";
    case RunMode::threshold: return "threshold";
    case RunMode::transient: return "transient";
    case RunMode::ar_check: return "ar_check";
    }
    return "unknown";
}

const char* to_string(SweepVariable v) {
    switch (v) {
    case SweepVariable::eps: return "eps";
    case SweepVariable::ltheta_norm: return "ltheta_norm";
    case SweepVariable::theta: return "theta";
    }
    return "unknown";
}

SweepSpec RunConfig::sweep_spec() const {
    SweepSpec spec;
    spec.base_params = params;
    spec.grid = grid();
    spec.base_u0 = u0;
    spec.variable = sweep_variable;
    spec.values = sweep_values;
    spec.t_end = sweep_t_end;
    spec.seeds = sweep_seeds;
    spec.workers = sweep_workers;
    spec.step = step;
    spec.solve = solve;
    spec.diag = diag;
    return spec;
}

ARParams RunConfig::ar_params() const {
    ARParams arp;
    arp.chi = chi;
    arp.xi = xi;
    arp.eps = params.eps;
    arp.r = params.r;
    arp.mu = params.mu;
    arp.theta = params.theta;
    arp.d1 = params.d1;
    arp.d2 = params.d2;
    arp.alpha = params.alpha;
    arp.beta = params.beta;
    arp.gamma = params.gamma;
    arp.delta = params.delta;
    return arp;
}

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& v, int line) {
    double out = 0.0;
    const char* first = v.data();
    const char* last = v.data() + v.size();
    const auto res = std::from_chars(first, last, out);
    if (res.ec != std::errc{} || res.ptr != last)
        throw ParseError("expected a number, got '" + v + "'", line);
    return out;
}

int parse_int(const std::string& v, int line) {
    int out = 0;
    const char* first = v.data();
    const char* last = v.data() + v.size();
    const auto res = std::from_chars(first, last, out);
    if (res.ec != std::errc{} || res.ptr != last)
        throw ParseError("expected an integer, got '" + v + "'", line);
    return out;
}

std::vector<double> parse_list(const std::string& v, int line) {
    std::vector<double> out;
    std::string item;
    std::istringstream in(v);
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty()) throw ParseError("empty entry in value list", line);
        out.push_back(parse_double(item, line));
    }
    if (out.empty()) throw ParseError("expected a comma-separated list", line);
    return out;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::map<std::string, int> seen;

    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (s.empty()) continue;
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw ParseError("expected 'key = value'", line);
        const std::string key = trim(s.substr(0, eq));
        const std::string val = trim(s.substr(eq + 1));
        if (key.empty()) throw ParseError("missing key", line);
        if (val.empty()) throw ParseError("missing value for '" + key + "'", line);
        if (seen.count(key)) throw ParseError("duplicate key '" + key + "'", line);
        seen[key] = line;

        if (key == "mode") {
            if (val == "single") cfg.mode = RunMode::single;
            else if (val == "viscosity") cfg.mode = RunMode::viscosity;
            else if (val == "threshold") cfg.mode = RunMode::threshold;
            else if (val == "transient") cfg.mode = RunMode::transient;
            else if (val == "ar_check") cfg.mode = RunMode::ar_check;
            else throw ParseError("unknown mode '" + val + "'", line);
        } else if (key == "t_end") cfg.t_end = parse_double(val, line);
        else if (key == "params.eps") cfg.params.eps = parse_double(val, line);
        else if (key == "params.r") cfg.params.r = parse_double(val, line);
        else if (key == "params.mu") cfg.params.mu = parse_double(val, line);
        else if (key == "params.theta") cfg.params.theta = parse_double(val, line);
        else if (key == "params.d1") cfg.params.d1 = parse_double(val, line);
        else if (key == "params.d2") cfg.params.d2 = parse_double(val, line);
        else if (key == "params.alpha") cfg.params.alpha = parse_double(val, line);
        else if (key == "params.beta") cfg.params.beta = parse_double(val, line);
        else if (key == "params.gamma") cfg.params.gamma = parse_double(val, line);
        else if (key == "params.delta") cfg.params.delta = parse_double(val, line);
        else if (key == "params.chi") cfg.chi = parse_double(val, line);
        else if (key == "params.xi") cfg.xi = parse_double(val, line);
        else if (key == "grid.dim") cfg.grid_dim = parse_int(val, line);
        else if (key == "grid.nx") cfg.grid_nx = parse_int(val, line);
        else if (key == "grid.ny") cfg.grid_ny = parse_int(val, line);
        else if (key == "grid.lx") cfg.grid_lx = parse_double(val, line);
        else if (key == "grid.ly") cfg.grid_ly = parse_double(val, line);
        else if (key == "u0.kind") {
            if (val == "uniform") cfg.u0.uniform = true;
            else if (val == "bump") cfg.u0.uniform = false;
            else throw ParseError("u0.kind must be 'uniform' or 'bump'", line);
        } else if (key == "u0.value") cfg.u0.value = parse_double(val, line);
        else if (key == "u0.center_x") cfg.u0.cx = parse_double(val, line);
        else if (key == "u0.center_y") cfg.u0.cy = parse_double(val, line);
        else if (key == "u0.width") cfg.u0.width = parse_double(val, line);
        else if (key == "u0.target_ltheta") cfg.u0.target_ltheta = parse_double(val, line);
        else if (key == "step.cfl") cfg.step.cfl = parse_double(val, line);
        else if (key == "step.dt_max") cfg.step.dt_max = parse_double(val, line);
        else if (key == "step.dt_min") cfg.step.dt_min = parse_double(val, line);
        else if (key == "step.blowup_cutoff") cfg.step.blowup_cutoff = parse_double(val, line);
        else if (key == "solve.rel_tol") cfg.solve.rel_tol = parse_double(val, line);
        else if (key == "solve.max_iter") cfg.solve.max_iter = parse_int(val, line);
        else if (key == "diag.q") cfg.diag.q = parse_double(val, line);
        else if (key == "diag.cadence") cfg.diag.cadence = parse_int(val, line);
        else if (key == "sweep.variable") {
            if (val == "eps") cfg.sweep_variable = SweepVariable::eps;
            else if (val == "ltheta_norm") cfg.sweep_variable = SweepVariable::ltheta_norm;
            else if (val == "theta") cfg.sweep_variable = SweepVariable::theta;
            else throw ParseError("unknown sweep.variable '" + val + "'", line);
        } else if (key == "sweep.values") cfg.sweep_values = parse_list(val, line);
        else if (key == "sweep.t_end") cfg.sweep_t_end = parse_double(val, line);
        else if (key == "sweep.seeds") cfg.sweep_seeds = parse_int(val, line);
        else if (key == "sweep.workers") cfg.sweep_workers = parse_int(val, line);
        else if (key == "sweep.M") cfg.sweep_M = parse_double(val, line);
        else if (key == "output.dir") cfg.output.dir = val;
        else if (key == "output.snapshot_every") cfg.output.snapshot_every = parse_int(val, line);
        else throw ParseError("unknown key '" + key + "'", line);
    }

    // Model-level validation; rethrow with the constraint message preserved.
    try {
        validate_params(cfg.params);
        cfg.grid();
        validate_step_config(cfg.step);
        validate_solve_config(cfg.solve);
        cfg.diag.theta = cfg.params.theta;
        validate_diagnostics_config(cfg.diag, cfg.grid_dim);
        if (!cfg.u0.uniform && !(cfg.u0.width > 0.0))
            throw DomainError("u0.width must be positive");
        if (cfg.u0.uniform && !(cfg.u0.value >= 0.0))
            throw DomainError("u0.value must be nonnegative");
        if (!(cfg.t_end >= 0.0)) throw DomainError("t_end must be nonnegative");
        if (cfg.mode != RunMode::single && cfg.mode != RunMode::ar_check) {
            if (cfg.sweep_values.empty())
                throw DomainError("sweep.values must be provided for sweep modes");
            if (!(cfg.sweep_t_end > 0.0)) throw DomainError("sweep.t_end must be positive");
            if (cfg.sweep_seeds < 1) throw DomainError("sweep.seeds must be at least 1");
            if (cfg.sweep_workers < 1) throw DomainError("sweep.workers must be at least 1");
        }
        if (cfg.mode == RunMode::viscosity && cfg.sweep_variable != SweepVariable::eps)
            throw DomainError("viscosity mode requires sweep.variable = eps");
        if (cfg.mode == RunMode::threshold && cfg.sweep_variable != SweepVariable::ltheta_norm)
            throw DomainError("threshold mode requires sweep.variable = ltheta_norm");
        if (cfg.mode == RunMode::transient) {
            if (cfg.sweep_variable != SweepVariable::eps)
                throw DomainError("transient mode requires sweep.variable = eps");
            if (!(cfg.sweep_M > 0.0)) throw DomainError("sweep.M must be positive");
        }
        if (cfg.mode == RunMode::ar_check) {
            validate_ar_params(cfg.ar_params());
        }
        if (cfg.output.snapshot_every < 0)
            throw DomainError("output.snapshot_every must be nonnegative");
    } catch (const DomainError& e) {
        throw ValidationError(e.what());
    }
    return cfg;
}

std::string emit_config(const RunConfig& cfg) {
    std::ostringstream out;
    out << "mode = " << to_string(cfg.mode) << "\n";
    out << "t_end = " << format_double(cfg.t_end) << "\n";
    out << "params.eps = " << format_double(cfg.params.eps) << "\n";
    out << "params.r = " << format_double(cfg.params.r) << "\n";
    out << "params.mu = " << format_double(cfg.params.mu) << "\n";
    out << "params.theta = " << format_double(cfg.params.theta) << "\n";
    out << "params.d1 = " << format_double(cfg.params.d1) << "\n";
    out << "params.d2 = " << format_double(cfg.params.d2) << "\n";
    out << "params.alpha = " << format_double(cfg.params.alpha) << "\n";
    out << "params.beta = " << format_double(cfg.params.beta) << "\n";
    out << "params.gamma = " << format_double(cfg.params.gamma) << "\n";
    out << "params.delta = " << format_double(cfg.params.delta) << "\n";
    if (cfg.chi != 0.0) out << "params.chi = " << format_double(cfg.chi) << "\n";
    if (cfg.xi != 0.0) out << "params.xi = " << format_double(cfg.xi) << "\n";
    out << "grid.dim = " << cfg.grid_dim << "\n";
    out << "grid.nx = " << cfg.grid_nx << "\n";
    out << "grid.ny = " << cfg.grid_ny << "\n";
    out << "grid.lx = " << format_double(cfg.grid_lx) << "\n";
    out << "grid.ly = " << format_double(cfg.grid_ly) << "\n";
    out << "u0.kind = " << (cfg.u0.uniform ? "uniform" : "bump") << "\n";
    out << "u0.value = " << format_double(cfg.u0.value) << "\n";
    out << "u0.center_x = " << format_double(cfg.u0.cx) << "\n";
    out << "u0.center_y = " << format_double(cfg.u0.cy) << "\n";
    out << "u0.width = " << format_double(cfg.u0.width) << "\n";
    out << "u0.target_ltheta = " << format_double(cfg.u0.target_ltheta) << "\n";
    out << "step.cfl = " << format_double(cfg.step.cfl) << "\n";
    out << "step.dt_max = " << format_double(cfg.step.dt_max) << "\n";
    out << "step.dt_min = " << format_double(cfg.step.dt_min) << "\n";
    out << "step.blowup_cutoff = " << format_double(cfg.step.blowup_cutoff) << "\n";
    out << "solve.rel_tol = " << format_double(cfg.solve.rel_tol) << "\n";
    out << "solve.max_iter = " << cfg.solve.max_iter << "\n";
    out << "diag.q = " << format_double(cfg.diag.q) << "\n";
    out << "diag.cadence = " << cfg.diag.cadence << "\n";
    if (!cfg.sweep_values.empty()) {
        out << "sweep.variable = " << to_string(cfg.sweep_variable) << "\n";
        out << "sweep.values = ";
        for (size_t k = 0; k < cfg.sweep_values.size(); ++k) {
            if (k) out << ",";
            out << format_double(cfg.sweep_values[k]);
        }
        out << "\n";
        out << "sweep.t_end = " << format_double(cfg.sweep_t_end) << "\n";
        out << "sweep.seeds = " << cfg.sweep_seeds << "\n";
        out << "sweep.workers = " << cfg.sweep_workers << "\n";
        if (cfg.sweep_M != 0.0) out << "sweep.M = " << format_double(cfg.sweep_M) << "\n";
    }
    out << "output.dir = " << cfg.output.dir << "\n";
    out << "output.snapshot_every = " << cfg.output.snapshot_every << "\n";
    return out.str();
}

} // namespace chemofv
