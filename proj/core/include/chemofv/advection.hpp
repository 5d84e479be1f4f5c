#ifndef CHEMOFV_ADVECTION_HPP
#define CHEMOFV_ADVECTION_HPP

#include "chemofv/field.hpp"

namespace chemofv {

/// Discrete -div(u grad v): face velocities from differences of v, first-order
/// donor upwinding of u, conservative divergence of the face fluxes. Boundary
/// faces carry zero flux, so the output sums to zero exactly.
Field advection_divergence(const Field& u, const Field& v, const Grid& grid);

/// Five-point (three-point in 1D) Laplacian with mirrored ghost cells; the
/// zero-flux faces make it exactly conservative.
Field laplacian(const Field& u, const Grid& grid);

/// max over faces of |grad_h v| (the advection speed scale).
double grad_inf_norm(const Field& v, const Grid& grid);

/// max over cells of the explicit-update outflow rate
///   sum over outflowing faces of |q_f|/h  +  eps*(2/hx^2 + 2/hy^2),
/// the reciprocal time scale that bounds a positivity-preserving step: any
/// dt <= cfl / rate with cfl < 1 keeps u nonnegative under the upwind sweep.
double max_outflow_rate(const Field& v, const Grid& grid, double eps);

} // namespace chemofv

#endif
