#include "chemofv/initial_data.hpp"

#include <cmath>

namespace chemofv {

Field make_uniform(const Grid& grid, double value) {
    if (!(value >= 0.0)) throw DomainError("uniform value must be nonnegative");
    return Field(grid, value);
}

Field make_bump(const Grid& grid, Point center, double width, double target_ltheta,
                double theta) {
    if (!(width > 0.0)) throw DomainError("bump width must be positive");
    if (!(target_ltheta > 0.0)) throw DomainError("target L^theta norm must be positive");
    if (!(theta > 0.0)) throw DomainError("theta must be positive");
    if (!(center.x > 0.0 && center.x < grid.lx))
        throw DomainError("bump center must lie inside the domain");
    if (grid.dim == 2 && !(center.y > 0.0 && center.y < grid.ly))
        throw DomainError("bump center must lie inside the domain");

    const double domain_size = (grid.dim == 2) ? std::max(grid.lx, grid.ly) : grid.lx;
    if (width >= domain_size) {
        // Uniform request: closed-form constant solving the norm equation.
        return Field(grid, std::pow(target_ltheta / grid.volume(), 1.0 / theta));
    }

    if (2.0 * width < 4.0 * grid.hx ||
        (grid.dim == 2 && 2.0 * width < 4.0 * grid.hy))
        throw DomainError("bump support spans fewer than 4 cells");

    Field f(grid);
    const double half_pi = std::acos(0.0);
    for (int j = 0; j < grid.ny; ++j) {
        const double dy = (grid.dim == 2) ? grid.y_center(j) - center.y : 0.0;
        for (int i = 0; i < grid.nx; ++i) {
            const double dx = grid.x_center(i) - center.x;
            const double rho = std::sqrt(dx * dx + dy * dy);
            if (rho < width) {
                const double c = std::cos(half_pi * rho / width);
                f.at(i, j) = c * c;
            }
        }
    }

    double power_sum = 0.0;
    for (int k = 0; k < f.size(); ++k)
        if (f[k] > 0.0) power_sum += std::pow(f[k], theta);
    power_sum *= grid.cell_area();
    if (!(power_sum > 0.0))
        throw DomainError("bump support contains no cell centers");

    const double amplitude = std::pow(target_ltheta / power_sum, 1.0 / theta);
    for (int k = 0; k < f.size(); ++k) f[k] *= amplitude;
    return f;
}

} // namespace chemofv
