#include "chemofv/diagnostics.hpp"

#include <cmath>
#include <limits>

namespace chemofv {

DiagnosticsConfig validate_diagnostics_config(const DiagnosticsConfig& cfg, int dim) {
    if (!(cfg.q > dim)) throw DomainError("diagnostics q must exceed the grid dimension");
    if (!(cfg.theta > 1.0)) throw DomainError("theta must exceed 1");
    if (cfg.cadence < 1) throw DomainError("cadence must be at least 1");
    return cfg;
}

namespace {

// x^p with fast paths for the common even integer exponents.
inline double pow_fast(double x, double p) {
    if (p == 2.0) return x * x;
    if (p == 4.0) {
        const double x2 = x * x;
        return x2 * x2;
    }
    return x > 0.0 ? std::pow(x, p) : 0.0;
}

inline double rel_gap(double a, double b) {
    const double m = std::max(std::abs(a), std::abs(b));
    return m > 0.0 ? std::abs(a - b) / m : 0.0;
}

} // namespace

double integral_pow(const Field& f, double p) {
    double s = 0.0;
    for (int k = 0; k < f.size(); ++k) s += pow_fast(f[k], p);
    return f.grid().cell_area() * s;
}

double grad_integral_pow(const Field& f, double q) {
    const Grid& g = f.grid();
    const int nx = g.nx;
    const int ny = g.ny;
    const double* fd = f.data();
    const bool even4 = (q == 4.0);
    double s = 0.0;
    for (int j = 0; j < ny; ++j) {
        const int row = j * nx;
        for (int i = 0; i < nx; ++i) {
            const int k = row + i;
            double gx;
            if (nx == 1)
                gx = 0.0;
            else if (i == 0)
                gx = (fd[k + 1] - fd[k]) / g.hx;
            else if (i == nx - 1)
                gx = (fd[k] - fd[k - 1]) / g.hx;
            else
                gx = (fd[k + 1] - fd[k - 1]) / (2.0 * g.hx);
            double gy = 0.0;
            if (g.dim == 2 && ny > 1) {
                if (j == 0)
                    gy = (fd[k + nx] - fd[k]) / g.hy;
                else if (j == ny - 1)
                    gy = (fd[k] - fd[k - nx]) / g.hy;
                else
                    gy = (fd[k + nx] - fd[k - nx]) / (2.0 * g.hy);
            }
            const double sq = gx * gx + gy * gy;
            s += even4 ? sq * sq : std::pow(sq, q / 2.0);
        }
    }
    return g.cell_area() * s;
}

double mass_identity_error(const SimState& state, const Params& p) {
    const double iu = state.u.integral();
    const double iv = state.v.integral();
    const double iw = state.w.integral();
    return std::max(rel_gap(p.beta * iv, p.alpha * iw),
                    rel_gap(p.delta * iw, p.gamma * iu));
}

DiagnosticsRecord record(const SimState& state, const Params& p,
                         const DiagnosticsConfig& cfg) {
    DiagnosticsRecord rec;
    rec.t = state.t;
    rec.mass = state.u.integral();
    rec.mean = rec.mass / state.u.grid().volume();
    rec.umax = state.u.max();
    rec.ltheta = integral_pow(state.u, cfg.theta);
    rec.w1q = integral_pow(state.u, cfg.q) + grad_integral_pow(state.u, cfg.q);
    rec.mass_id_err = mass_identity_error(state, p);
    rec.dt = state.dt_last;
    return rec;
}

double blowup_time_bound(const BlowupBoundInputs& inp) {
    if (!(inp.a > 0.0)) throw DomainError("a must be positive");
    if (!(inp.b >= 0.0)) throw DomainError("b must be nonnegative");
    if (!(inp.d > 0.0)) throw DomainError("d must be positive");
    if (!(inp.kappa > 1.0)) throw DomainError("kappa must exceed 1");
    const double threshold = std::pow(2.0 * inp.b / inp.d, 1.0 / inp.kappa);
    if (!(inp.a > threshold))
        throw DomainError("hypothesis a > (2b/d)^(1/kappa) violated");
    return 2.0 / ((inp.kappa - 1.0) * std::pow(inp.a, inp.kappa - 1.0) * inp.d);
}

double bernoulli_envelope(double y0, double C, double t) {
    if (C == 0.0) return y0;
    const double e = (1.0 / (y0 * y0) + 1.0) * std::exp(-2.0 * C * t) - 1.0;
    return 1.0 / std::sqrt(std::abs(e));
}

EnvelopeFit bernoulli_envelope_fit(std::span<const DiagnosticsRecord> series, double q) {
    if (!(q >= 1.0)) throw DomainError("q must be at least 1");
    if (series.empty()) throw DomainError("envelope fit needs a nonempty series");
    for (const auto& rec : series)
        if (!(rec.w1q > 0.0)) throw DomainError("envelope fit needs positive w1q values");
    for (size_t k = 1; k < series.size(); ++k)
        if (!(series[k].t > series[k - 1].t))
            throw DomainError("envelope fit needs strictly increasing times");

    double C = 0.0;
    for (size_t k = 1; k < series.size(); ++k) {
        const double y = series[k - 1].w1q;
        const double dy = series[k].w1q - y;
        const double dt = series[k].t - series[k - 1].t;
        C = std::max(C, dy / (dt * (y + y * y * y)));
    }

    EnvelopeFit fit;
    fit.C = C;
    if (C == 0.0) {
        fit.valid_until = std::numeric_limits<double>::infinity();
    } else {
        const double y0 = series.front().w1q;
        fit.valid_until = std::log(1.0 / (y0 * y0) + 1.0) / (2.0 * C);
    }
    return fit;
}

bool check_mean_bound(std::span<const DiagnosticsRecord> series, double m1) {
    const double cap = m1 * (1.0 + 1e-6);
    for (const auto& rec : series)
        if (rec.mean > cap) return false;
    return true;
}

} // namespace chemofv
