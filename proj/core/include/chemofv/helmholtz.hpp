#ifndef CHEMOFV_HELMHOLTZ_HPP
#define CHEMOFV_HELMHOLTZ_HPP

#include <utility>

#include "chemofv/field.hpp"
#include "chemofv/params.hpp"

namespace chemofv {

/// Steady Neumann Helmholtz problem 0 = d*Lap(phi) - c*phi + s on a Grid,
/// discretized with the 2dim+1-point Laplacian and mirrored ghost cells so
/// the zero-flux condition is exact: summing the discrete equation gives
/// c * integral(phi) = integral(s) up to solver residual.
struct HelmholtzProblem {
    Grid grid;
    double d = 1.0; // diffusivity, > 0
    double c = 1.0; // decay rate, > 0
    Field s;        // source on the same grid
};

/// Iteration control for the conjugate-gradient solve.
/// max_iter = 0 resolves to the per-problem default 20*(nx+ny).
struct SolveConfig {
    double rel_tol = 1e-10; // in (0, 1e-4]
    int max_iter = 0;
};

SolveConfig validate_solve_config(const SolveConfig& cfg);

/// Solves the SPD system (-d*Lap_h + c) phi = s by conjugate gradients until
/// ||d*Lap_h(phi) - c*phi + s||_2 <= rel_tol * ||s||_2. An optional initial
/// guess warm-starts the iteration; the stopping contract is unchanged.
/// Throws ConvergenceError (with the residual reached) on iteration cap.
Field solve_helmholtz(const HelmholtzProblem& prob, const SolveConfig& cfg);
Field solve_helmholtz(const HelmholtzProblem& prob, const SolveConfig& cfg,
                      const Field& initial_guess);

/// Euclidean norm of the discrete residual d*Lap_h(phi) - c*phi + s.
double residual(const HelmholtzProblem& prob, const Field& phi);

/// Triangular signal chain of the model: w solves (d2, delta, gamma*u),
/// then v solves (d1, beta, alpha*w).
std::pair<Field, Field> solve_signals(const Field& u, const Params& p,
                                      const SolveConfig& cfg);
std::pair<Field, Field> solve_signals(const Field& u, const Params& p,
                                      const SolveConfig& cfg, const Field& v_guess,
                                      const Field& w_guess);

/// y = (-d*Lap_h + c) x with mirrored ghosts. Exposed for residual checks.
void apply_helmholtz_operator(const Grid& grid, double d, double c,
                              const double* x, double* y);

} // namespace chemofv

#endif
