#include "chemofv/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <mutex>
#include <thread>

#include "chemofv/advection.hpp"
#include "chemofv/reaction.hpp"

namespace chemofv {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

double unit_real(uint64_t& s) {
    s = splitmix64(s);
    return static_cast<double>(s >> 11) * 0x1.0p-53;
}

void check_values(const std::vector<double>& values) {
    if (values.empty()) throw ExperimentError("sweep values must be nonempty");
    bool asc = true, desc = true;
    for (size_t k = 1; k < values.size(); ++k) {
        asc = asc && values[k] > values[k - 1];
        desc = desc && values[k] < values[k - 1];
    }
    if (!(asc || desc)) throw ExperimentError("sweep values must be strictly monotone");
}

// Runs fn(row_index) over [0, n) on up to `workers` threads; results land in
// caller-owned slots, so collection is order-independent.
template <typename Fn>
void run_rows(int n, int workers, Fn&& fn) {
    if (workers <= 1 || n <= 1) {
        for (int k = 0; k < n; ++k) fn(k);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const int k = next.fetch_add(1);
            if (k >= n) return;
            try {
                fn(k);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    const int count = std::min(workers, n);
    pool.reserve(static_cast<size_t>(count));
    for (int k = 0; k < count; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

bool is_blowup_like(RunVerdict v) {
    return v == RunVerdict::blowup_detected || v == RunVerdict::step_underflow;
}

SweepRow make_row(double value, int seed, const RunReport& report) {
    SweepRow row;
    row.value = value;
    row.seed = seed;
    row.verdict = report.verdict;
    row.terminal_time = report.terminal_time;
    row.max_umax = report.monitors.max_umax;
    if (!report.series.empty()) row.final_diag = report.series.back();
    row.attain_cell = report.monitors.max_umax_cell;
    row.attain_time = report.monitors.max_umax_time;
    return row;
}

} // namespace

Field build_sweep_u0(const SweepSpec& spec, double theta, int seed) {
    const Grid& g = spec.grid;
    const BumpSpec& b = spec.base_u0;
    if (b.uniform) return make_uniform(g, b.value);

    Point center{b.cx, b.cy};
    if (seed > 0) {
        uint64_t s = 0x5eedull ^ (static_cast<uint64_t>(seed) * 0x9e3779b97f4a7c15ull);
        const double mx = b.width + 2.0 * g.hx;
        if (g.lx - 2.0 * mx > 0.0) center.x = mx + (g.lx - 2.0 * mx) * unit_real(s);
        if (g.dim == 2) {
            const double my = b.width + 2.0 * g.hy;
            if (g.ly - 2.0 * my > 0.0) center.y = my + (g.ly - 2.0 * my) * unit_real(s);
        }
    }
    return make_bump(g, center, b.width, b.target_ltheta, theta);
}

ViscosityResult viscosity_vanishing(const SweepSpec& spec) {
    if (spec.variable != SweepVariable::eps)
        throw ExperimentError("viscosity_vanishing requires sweep variable eps");
    check_values(spec.values);
    for (double e : spec.values)
        if (!(e > 0.0)) throw ExperimentError("viscosity_vanishing requires eps values > 0");
    if (!(spec.t_end > 0.0)) throw ExperimentError("t_end must be positive");

    std::vector<double> eps_desc = spec.values;
    std::sort(eps_desc.begin(), eps_desc.end(), std::greater<>());

    constexpr int kProbeCount = 16;
    std::vector<double> snap_times;
    snap_times.reserve(kProbeCount);
    for (int k = 1; k <= kProbeCount; ++k)
        snap_times.push_back(spec.t_end * k / kProbeCount);

    const int seeds = std::max(1, spec.seeds);
    const int n_eps = static_cast<int>(eps_desc.size());

    ViscosityResult result;
    result.eps_desc = eps_desc;
    result.sup_err.assign(static_cast<size_t>(n_eps), 0.0);
    result.sweep.rows.resize(static_cast<size_t>(n_eps) * seeds);

    for (int seed = 0; seed < seeds; ++seed) {
        const Field u0 = build_sweep_u0(spec, spec.base_params.theta, seed);

        Params ref_params = spec.base_params;
        ref_params.eps = 0.0;
        const RunReport ref = run(u0, ref_params, spec.t_end, spec.step, spec.solve,
                                  spec.diag, snap_times);
        if (ref.verdict != RunVerdict::completed)
            throw ExperimentError("reference eps=0 run did not reach t_end");

        std::vector<RunReport> reports(static_cast<size_t>(n_eps));
        run_rows(n_eps, spec.workers, [&](int k) {
            Params p = spec.base_params;
            p.eps = eps_desc[static_cast<size_t>(k)];
            reports[static_cast<size_t>(k)] =
                run(u0, p, spec.t_end, spec.step, spec.solve, spec.diag, snap_times);
        });

        for (int k = 0; k < n_eps; ++k) {
            const RunReport& rep = reports[static_cast<size_t>(k)];
            if (rep.verdict != RunVerdict::completed)
                throw ExperimentError("viscosity run did not reach t_end");
            if (rep.snapshots.size() != ref.snapshots.size())
                throw ExperimentError("viscosity runs produced mismatched probes");
            double e = 0.0;
            for (size_t s = 0; s < ref.snapshots.size(); ++s) {
                const Field& a = rep.snapshots[s].second;
                const Field& b = ref.snapshots[s].second;
                for (int c = 0; c < a.size(); ++c)
                    e = std::max(e, std::abs(a[c] - b[c]));
            }
            SweepRow row = make_row(eps_desc[static_cast<size_t>(k)], seed, rep);
            row.sup_err = e;
            result.sweep.rows[static_cast<size_t>(k) * seeds + seed] = row;
            result.sup_err[static_cast<size_t>(k)] =
                std::max(result.sup_err[static_cast<size_t>(k)], e);
        }
    }

    result.nonincreasing = true;
    result.strictly_decreasing = true;
    for (size_t k = 1; k < result.sup_err.size(); ++k) {
        result.nonincreasing = result.nonincreasing && result.sup_err[k] <= result.sup_err[k - 1];
        result.strictly_decreasing =
            result.strictly_decreasing && result.sup_err[k] < result.sup_err[k - 1];
    }

    std::sort(result.sweep.rows.begin(), result.sweep.rows.end(),
              [](const SweepRow& a, const SweepRow& b) {
                  return a.value != b.value ? a.value < b.value : a.seed < b.seed;
              });
    return result;
}

ThresholdResult threshold_map(const SweepSpec& spec) {
    if (spec.variable != SweepVariable::ltheta_norm)
        throw ExperimentError("threshold_map requires sweep variable ltheta_norm");
    if (spec.base_params.eps != 0.0)
        throw ExperimentError("threshold_map requires eps = 0");
    if (!(spec.base_params.theta > 1.0 && spec.base_params.theta <= 2.0))
        throw ExperimentError("threshold_map requires theta in (1, 2]");
    if (spec.base_u0.uniform)
        throw ExperimentError("threshold_map sweeps bump norms, not uniform data");
    check_values(spec.values);

    std::vector<double> norms = spec.values;
    std::sort(norms.begin(), norms.end());
    const int seeds = std::max(1, spec.seeds);
    const int n = static_cast<int>(norms.size());

    ThresholdResult result;
    result.sweep.rows.resize(static_cast<size_t>(n) * seeds);

    run_rows(n * seeds, spec.workers, [&](int idx) {
        const int k = idx / seeds;
        const int seed = idx % seeds;
        SweepSpec local = spec;
        local.base_u0.target_ltheta = norms[static_cast<size_t>(k)];
        const Field u0 = build_sweep_u0(local, spec.base_params.theta, seed);
        const RunReport rep =
            run(u0, spec.base_params, spec.t_end, spec.step, spec.solve, spec.diag);
        result.sweep.rows[static_cast<size_t>(idx)] =
            make_row(norms[static_cast<size_t>(k)], seed, rep);
    });

    // Band edges over the ascending norm axis, aggregating seeds per value.
    std::vector<bool> all_completed(static_cast<size_t>(n), true);
    std::vector<bool> all_blowup(static_cast<size_t>(n), true);
    for (int k = 0; k < n; ++k)
        for (int seed = 0; seed < seeds; ++seed) {
            const auto& row = result.sweep.rows[static_cast<size_t>(k) * seeds + seed];
            const bool blew = is_blowup_like(row.verdict);
            all_completed[static_cast<size_t>(k)] =
                all_completed[static_cast<size_t>(k)] && !blew;
            all_blowup[static_cast<size_t>(k)] = all_blowup[static_cast<size_t>(k)] && blew;
            result.has_completed = result.has_completed || !blew;
            result.has_blowup = result.has_blowup || blew;
        }
    if (!result.has_completed && !result.has_blowup)
        throw ExperimentError("degenerate threshold sweep: no rows");

    result.all_completed_below = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < n && all_completed[static_cast<size_t>(k)]; ++k)
        result.all_completed_below = norms[static_cast<size_t>(k)];
    result.all_blowup_above = std::numeric_limits<double>::infinity();
    for (int k = n - 1; k >= 0 && all_blowup[static_cast<size_t>(k)]; --k)
        result.all_blowup_above = norms[static_cast<size_t>(k)];

    double lowest_blowup = std::numeric_limits<double>::infinity();
    double highest_completed = -std::numeric_limits<double>::infinity();
    for (const auto& row : result.sweep.rows) {
        if (is_blowup_like(row.verdict))
            lowest_blowup = std::min(lowest_blowup, row.value);
        else
            highest_completed = std::max(highest_completed, row.value);
    }
    result.monotone_band = !(highest_completed > lowest_blowup);
    return result;
}

TransientResult transient_growth(const SweepSpec& spec, double M) {
    if (spec.variable != SweepVariable::eps)
        throw ExperimentError("transient_growth requires sweep variable eps");
    if (!(M > 0.0)) throw ExperimentError("transient_growth requires M > 0");
    check_values(spec.values);

    std::vector<double> eps_desc = spec.values;
    std::sort(eps_desc.begin(), eps_desc.end(), std::greater<>());
    const int seeds = std::max(1, spec.seeds);
    const int n = static_cast<int>(eps_desc.size());

    TransientResult result;
    result.sweep.rows.resize(static_cast<size_t>(n) * seeds);

    run_rows(n * seeds, spec.workers, [&](int idx) {
        const int k = idx / seeds;
        const int seed = idx % seeds;
        Params p = spec.base_params;
        p.eps = eps_desc[static_cast<size_t>(k)];
        const Field u0 = build_sweep_u0(spec, p.theta, seed);
        const RunReport rep = run(u0, p, spec.t_end, spec.step, spec.solve, spec.diag);
        result.sweep.rows[static_cast<size_t>(idx)] =
            make_row(eps_desc[static_cast<size_t>(k)], seed, rep);
    });

    // Qualification per eps value (max over seeds), scanned from large eps down.
    std::vector<double> umax_desc(static_cast<size_t>(n), 0.0);
    for (int k = 0; k < n; ++k)
        for (int seed = 0; seed < seeds; ++seed)
            umax_desc[static_cast<size_t>(k)] =
                std::max(umax_desc[static_cast<size_t>(k)],
                         result.sweep.rows[static_cast<size_t>(k) * seeds + seed].max_umax);

    int first_qualifying = -1;
    for (int k = 0; k < n; ++k)
        if (umax_desc[static_cast<size_t>(k)] > M) {
            first_qualifying = k;
            break;
        }
    if (first_qualifying >= 0) {
        result.found = true;
        result.eps0 = eps_desc[static_cast<size_t>(first_qualifying)];
        result.qualified_downward_closed = true;
        for (int k = first_qualifying; k < n; ++k)
            result.qualified_downward_closed =
                result.qualified_downward_closed && umax_desc[static_cast<size_t>(k)] > M;
    }
    result.umax_monotone = true;
    for (int k = 1; k < n; ++k)
        result.umax_monotone =
            result.umax_monotone &&
            umax_desc[static_cast<size_t>(k)] >= umax_desc[static_cast<size_t>(k - 1)];

    std::sort(result.sweep.rows.begin(), result.sweep.rows.end(),
              [](const SweepRow& a, const SweepRow& b) {
                  return a.value != b.value ? a.value < b.value : a.seed < b.seed;
              });
    return result;
}

ArCrossReport ar_crosscheck(const ARParams& arp, const Field& u0, double t_end,
                            const StepConfig& scfg, const SolveConfig& ecfg,
                            double chi_perturbation) {
    const Params reduced = ar_reduce(arp);
    validate_step_config(scfg);
    const Grid& g = u0.grid();

    SimState red = make_state(u0, reduced, ecfg);

    // AR signals: z from (d1, beta, alpha*u), w from (d2, delta, gamma*u);
    // the transport potential is chi*z - xi*w.
    Field u_ar = u0;
    const auto solve_ar = [&](const Field& u, const Field& zg, const Field& wg) {
        Field sz(g), sw(g);
        for (int k = 0; k < u.size(); ++k) {
            sz[k] = arp.alpha * u[k];
            sw[k] = arp.gamma * u[k];
        }
        Field z = solve_helmholtz({g, arp.d1, arp.beta, std::move(sz)}, ecfg, zg);
        Field w = solve_helmholtz({g, arp.d2, arp.delta, std::move(sw)}, ecfg, wg);
        return std::make_pair(std::move(z), std::move(w));
    };
    auto [z_ar, w_ar] = solve_ar(u_ar, Field(g, 0.0), Field(g, 0.0));

    Params ar_scalar = reduced; // same r, mu, theta, eps for the reaction/diffusion
    ArCrossReport report;

    const auto deviation = [&] {
        double dev = 0.0;
        for (int k = 0; k < u_ar.size(); ++k)
            dev = std::max(dev, std::abs(u_ar[k] - red.u[k]));
        return dev;
    };
    report.max_deviation = deviation();

    const double t_done = t_end * (1.0 - 1e-15);
    while (red.t < t_done) {
        // dt decided by the reduced system so the comparison isolates the
        // algebraic reduction from step-control differences.
        const double rate = max_outflow_rate(red.v, g, reduced.eps);
        double dt = scfg.dt_max;
        if (rate > 0.0) dt = std::min(dt, scfg.cfl / rate);
        if (dt < scfg.dt_min) {
            report.reduced_verdict = RunVerdict::step_underflow;
            break;
        }
        dt = std::min(dt, t_end - red.t);

        StepOutcome out = step(std::move(red), reduced, scfg, ecfg, dt);
        red = std::move(out.state);

        Field v_eff(g);
        const double chi = arp.chi * chi_perturbation;
        for (int k = 0; k < v_eff.size(); ++k)
            v_eff[k] = chi * z_ar[k] - arp.xi * w_ar[k];
        Field rhs = advection_divergence(u_ar, v_eff, g);
        if (arp.eps > 0.0) {
            Field lap = laplacian(u_ar, g);
            for (int k = 0; k < rhs.size(); ++k) rhs[k] += arp.eps * lap[k];
        }
        for (int k = 0; k < u_ar.size(); ++k) u_ar[k] += dt * rhs[k];
        u_ar = reaction_update(u_ar, ar_scalar, dt);
        for (int k = 0; k < u_ar.size(); ++k)
            if (u_ar[k] < 0.0)
                throw InternalError("negative cell in AR sweep (CFL breach)");
        std::tie(z_ar, w_ar) = solve_ar(u_ar, z_ar, w_ar);

        ++report.steps;
        report.max_deviation = std::max(report.max_deviation, deviation());

        if (out.verdict == StepVerdict::blowup_detected ||
            u_ar.max() > scfg.blowup_cutoff) {
            report.reduced_verdict = RunVerdict::blowup_detected;
            break;
        }
    }
    report.t_reached = red.t;
    return report;
}

} // namespace chemofv
