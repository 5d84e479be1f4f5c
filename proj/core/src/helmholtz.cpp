#include "chemofv/helmholtz.hpp"

#include <cmath>
#include <vector>

namespace chemofv {

SolveConfig validate_solve_config(const SolveConfig& cfg) {
    if (!(cfg.rel_tol > 0.0 && cfg.rel_tol <= 1e-4))
        throw DomainError("rel_tol must lie in (0, 1e-4]");
    if (cfg.max_iter < 0) throw DomainError("max_iter must be nonnegative");
    return cfg;
}

void apply_helmholtz_operator(const Grid& grid, double d, double c,
                              const double* x, double* y) {
    const int nx = grid.nx;
    const int ny = grid.ny;
    const double wx = d / (grid.hx * grid.hx);
    const double wy = d / (grid.hy * grid.hy);

    for (int j = 0; j < ny; ++j) {
        const double* row = x + static_cast<size_t>(j) * nx;
        double* out = y + static_cast<size_t>(j) * nx;
        for (int i = 0; i < nx; ++i) {
            double v = c * row[i];
            if (i > 0) v += wx * (row[i] - row[i - 1]);
            if (i < nx - 1) v += wx * (row[i] - row[i + 1]);
            out[i] = v;
        }
        if (grid.dim == 2) {
            if (j > 0) {
                const double* south = x + static_cast<size_t>(j - 1) * nx;
                for (int i = 0; i < nx; ++i) out[i] += wy * (row[i] - south[i]);
            }
            if (j < ny - 1) {
                const double* north = x + static_cast<size_t>(j + 1) * nx;
                for (int i = 0; i < nx; ++i) out[i] += wy * (row[i] - north[i]);
            }
        }
    }
}

double residual(const HelmholtzProblem& prob, const Field& phi) {
    if (phi.grid() != prob.grid || prob.s.grid() != prob.grid)
        throw DomainError("residual: field shapes do not match the problem grid");
    const int n = prob.grid.cells();
    std::vector<double> ax(static_cast<size_t>(n));
    apply_helmholtz_operator(prob.grid, prob.d, prob.c, phi.data(), ax.data());
    double sq = 0.0;
    for (int k = 0; k < n; ++k) {
        const double r = prob.s[k] - ax[k]; // = d*Lap(phi) - c*phi + s
        sq += r * r;
    }
    return std::sqrt(sq);
}

namespace {

double norm2(const std::vector<double>& v) {
    double sq = 0.0;
    for (double x : v) sq += x * x;
    return std::sqrt(sq);
}

} // namespace

Field solve_helmholtz(const HelmholtzProblem& prob, const SolveConfig& cfg,
                      const Field& initial_guess) {
    validate_solve_config(cfg);
    if (!(prob.d > 0.0)) throw DomainError("helmholtz d must be positive");
    if (!(prob.c > 0.0)) throw DomainError("helmholtz c must be positive");
    if (prob.s.grid() != prob.grid)
        throw DomainError("helmholtz source grid mismatch");
    if (initial_guess.grid() != prob.grid)
        throw DomainError("helmholtz initial guess grid mismatch");

    const Grid& g = prob.grid;
    const int n = g.cells();
    const int max_iter = cfg.max_iter > 0 ? cfg.max_iter : 20 * (g.nx + g.ny);

    double s_norm_sq = 0.0;
    for (int k = 0; k < n; ++k) s_norm_sq += prob.s[k] * prob.s[k];
    const double s_norm = std::sqrt(s_norm_sq);
    if (s_norm == 0.0) return Field(g, 0.0); // c > 0 forces the zero solution

    const double target = cfg.rel_tol * s_norm;

    Field phi = initial_guess;
    std::vector<double> r(static_cast<size_t>(n));
    std::vector<double> p(static_cast<size_t>(n));
    std::vector<double> ap(static_cast<size_t>(n));

    apply_helmholtz_operator(g, prob.d, prob.c, phi.data(), ap.data());
    for (int k = 0; k < n; ++k) r[static_cast<size_t>(k)] = prob.s[k] - ap[static_cast<size_t>(k)];

    double rr = 0.0;
    for (double x : r) rr += x * x;
    if (std::sqrt(rr) <= target) return phi;

    p = r;
    for (int it = 0; it < max_iter; ++it) {
        apply_helmholtz_operator(g, prob.d, prob.c, p.data(), ap.data());
        double pap = 0.0;
        for (int k = 0; k < n; ++k) pap += p[static_cast<size_t>(k)] * ap[static_cast<size_t>(k)];
        const double alpha = rr / pap;
        double* phid = phi.data();
        for (int k = 0; k < n; ++k) {
            phid[k] += alpha * p[static_cast<size_t>(k)];
            r[static_cast<size_t>(k)] -= alpha * ap[static_cast<size_t>(k)];
        }
        double rr_next = 0.0;
        for (double x : r) rr_next += x * x;
        if (std::sqrt(rr_next) <= target) return phi;
        const double beta = rr_next / rr;
        rr = rr_next;
        for (int k = 0; k < n; ++k)
            p[static_cast<size_t>(k)] = r[static_cast<size_t>(k)] + beta * p[static_cast<size_t>(k)];
    }
    throw ConvergenceError("helmholtz solve exhausted max_iter", norm2(r), max_iter);
}

Field solve_helmholtz(const HelmholtzProblem& prob, const SolveConfig& cfg) {
    return solve_helmholtz(prob, cfg, Field(prob.grid, 0.0));
}

std::pair<Field, Field> solve_signals(const Field& u, const Params& p,
                                      const SolveConfig& cfg, const Field& v_guess,
                                      const Field& w_guess) {
    if (u.min() < 0.0) throw DomainError("solve_signals: u must be nonnegative");
    const Grid& g = u.grid();

    Field su(g);
    for (int k = 0; k < su.size(); ++k) su[k] = p.gamma * u[k];
    Field w = solve_helmholtz({g, p.d2, p.delta, std::move(su)}, cfg, w_guess);

    Field sw(g);
    for (int k = 0; k < sw.size(); ++k) sw[k] = p.alpha * w[k];
    Field v = solve_helmholtz({g, p.d1, p.beta, std::move(sw)}, cfg, v_guess);

    return {std::move(v), std::move(w)};
}

std::pair<Field, Field> solve_signals(const Field& u, const Params& p,
                                      const SolveConfig& cfg) {
    return solve_signals(u, p, cfg, Field(u.grid(), 0.0), Field(u.grid(), 0.0));
}

} // namespace chemofv
