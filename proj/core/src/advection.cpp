#include "chemofv/advection.hpp"

#include <algorithm>
#include <cmath>

namespace chemofv {

namespace {

void check_shapes(const Field& u, const Field& v, const Grid& grid) {
    if (u.grid() != grid || v.grid() != grid)
        throw DomainError("advection: field shapes do not match the grid");
}

} // namespace

Field advection_divergence(const Field& u, const Field& v, const Grid& grid) {
    check_shapes(u, v, grid);
    Field out(grid, 0.0);
    const int nx = grid.nx;
    const int ny = grid.ny;
    const double inv_hx = 1.0 / grid.hx;
    const double inv_hy = 1.0 / grid.hy;
    const double* ud = u.data();
    const double* vd = v.data();
    double* od = out.data();

    // x-faces; transport velocity is the up-gradient component (v_R - v_L)/hx,
    // the donor is the cell the mass leaves.
    for (int j = 0; j < ny; ++j) {
        const int row = j * nx;
        for (int i = 0; i < nx - 1; ++i) {
            const double q = (vd[row + i + 1] - vd[row + i]) * inv_hx;
            const double flux = q > 0.0 ? q * ud[row + i] : q * ud[row + i + 1];
            od[row + i] -= flux * inv_hx;
            od[row + i + 1] += flux * inv_hx;
        }
    }
    if (grid.dim == 2) {
        for (int j = 0; j < ny - 1; ++j) {
            const int row = j * nx;
            for (int i = 0; i < nx; ++i) {
                const double q = (vd[row + nx + i] - vd[row + i]) * inv_hy;
                const double flux = q > 0.0 ? q * ud[row + i] : q * ud[row + nx + i];
                od[row + i] -= flux * inv_hy;
                od[row + nx + i] += flux * inv_hy;
            }
        }
    }
    return out;
}

Field laplacian(const Field& u, const Grid& grid) {
    if (u.grid() != grid) throw DomainError("laplacian: field shape mismatch");
    Field out(grid, 0.0);
    const int nx = grid.nx;
    const int ny = grid.ny;
    const double wx = 1.0 / (grid.hx * grid.hx);
    const double wy = 1.0 / (grid.hy * grid.hy);
    const double* ud = u.data();
    double* od = out.data();

    for (int j = 0; j < ny; ++j) {
        const int row = j * nx;
        for (int i = 0; i < nx - 1; ++i) {
            const double d = (ud[row + i + 1] - ud[row + i]) * wx;
            od[row + i] += d;
            od[row + i + 1] -= d;
        }
    }
    if (grid.dim == 2) {
        for (int j = 0; j < ny - 1; ++j) {
            const int row = j * nx;
            for (int i = 0; i < nx; ++i) {
                const double d = (ud[row + nx + i] - ud[row + i]) * wy;
                od[row + i] += d;
                od[row + nx + i] -= d;
            }
        }
    }
    return out;
}

double grad_inf_norm(const Field& v, const Grid& grid) {
    if (v.grid() != grid) throw DomainError("grad_inf_norm: field shape mismatch");
    const int nx = grid.nx;
    const int ny = grid.ny;
    const double inv_hx = 1.0 / grid.hx;
    const double inv_hy = 1.0 / grid.hy;
    const double* vd = v.data();
    double m = 0.0;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx - 1; ++i)
            m = std::max(m, std::abs(vd[j * nx + i + 1] - vd[j * nx + i]) * inv_hx);
    if (grid.dim == 2)
        for (int j = 0; j < ny - 1; ++j)
            for (int i = 0; i < nx; ++i)
                m = std::max(m, std::abs(vd[(j + 1) * nx + i] - vd[j * nx + i]) * inv_hy);
    return m;
}

double max_outflow_rate(const Field& v, const Grid& grid, double eps) {
    if (v.grid() != grid) throw DomainError("max_outflow_rate: field shape mismatch");
    const int nx = grid.nx;
    const int ny = grid.ny;
    const double inv_hx = 1.0 / grid.hx;
    const double inv_hy = 1.0 / grid.hy;
    const double* vd = v.data();

    double diffusion = 0.0;
    if (eps > 0.0) {
        diffusion = 2.0 * eps * inv_hx * inv_hx;
        if (grid.dim == 2) diffusion += 2.0 * eps * inv_hy * inv_hy;
    }

    double worst = 0.0;
    for (int j = 0; j < ny; ++j) {
        const int row = j * nx;
        for (int i = 0; i < nx; ++i) {
            const int k = row + i;
            double rate = diffusion;
            if (i > 0) {
                const double q = (vd[k] - vd[k - 1]) * inv_hx; // >0 flows into k
                if (q < 0.0) rate += -q * inv_hx;
            }
            if (i < nx - 1) {
                const double q = (vd[k + 1] - vd[k]) * inv_hx; // >0 flows out of k
                if (q > 0.0) rate += q * inv_hx;
            }
            if (grid.dim == 2) {
                if (j > 0) {
                    const double q = (vd[k] - vd[k - nx]) * inv_hy;
                    if (q < 0.0) rate += -q * inv_hy;
                }
                if (j < ny - 1) {
                    const double q = (vd[k + nx] - vd[k]) * inv_hy;
                    if (q > 0.0) rate += q * inv_hy;
                }
            }
            worst = std::max(worst, rate);
        }
    }
    return worst;
}

} // namespace chemofv
