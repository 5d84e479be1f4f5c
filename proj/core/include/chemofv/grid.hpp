#ifndef CHEMOFV_GRID_HPP
#define CHEMOFV_GRID_HPP

#include "chemofv/errors.hpp"

namespace chemofv {

/// Uniform cell-centered mesh on an interval (dim = 1) or a rectangle (dim = 2).
/// Cell (i, j) is centered at ((i + 1/2) hx, (j + 1/2) hy); zero-flux boundaries
/// are realized with mirrored ghost cells in every operator built on this grid.
struct Grid {
    int dim = 1;
    int nx = 1;
    int ny = 1;
    double lx = 1.0;
    double ly = 1.0;
    double hx = 1.0;
    double hy = 1.0;

    static Grid interval(int nx, double lx) { return make(1, nx, 1, lx, 1.0); }

    static Grid rectangle(int nx, int ny, double lx, double ly) {
        return make(2, nx, ny, lx, ly);
    }

    static Grid make(int dim, int nx, int ny, double lx, double ly) {
        if (dim != 1 && dim != 2) throw DomainError("grid dim must be 1 or 2");
        if (nx < 1) throw DomainError("nx must be at least 1");
        if (dim == 1 && ny != 1) throw DomainError("1D grids require ny = 1");
        if (dim == 2 && ny < 1) throw DomainError("ny must be at least 1");
        if (!(lx > 0.0)) throw DomainError("lx must be positive");
        if (!(ly > 0.0)) throw DomainError("ly must be positive");
        Grid g;
        g.dim = dim;
        g.nx = nx;
        g.ny = (dim == 1) ? 1 : ny;
        g.lx = lx;
        g.ly = ly;
        g.hx = lx / nx;
        g.hy = ly / g.ny;
        return g;
    }

    int cells() const { return nx * ny; }
    double cell_area() const { return hx * hy; }
    double volume() const { return lx * ly; }

    double x_center(int i) const { return (i + 0.5) * hx; }
    double y_center(int j) const { return (j + 0.5) * hy; }

    int index(int i, int j) const { return i + nx * j; }

    bool operator==(const Grid&) const = default;
};

} // namespace chemofv

#endif
