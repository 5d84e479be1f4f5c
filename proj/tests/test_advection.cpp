#include <cmath>
#include <vector>

#include <doctest.h>

#include "chemofv/advection.hpp"
#include "support/oracles.hpp"

using namespace chemofv;

namespace {

Field random_field(const Grid& g, oracles::Rng& rng, double lo, double hi) {
    Field f(g);
    for (int k = 0; k < f.size(); ++k) f[k] = rng.uniform(lo, hi);
    return f;
}

// Independent flux-by-flux evaluation: for every interior face compute the
// up-gradient velocity and the donor value, then scatter the conservative
// divergence. Written cell-by-cell on purpose.
std::vector<double> upwind_reference(const Field& u, const Field& v, const Grid& g) {
    std::vector<double> out(static_cast<size_t>(g.cells()), 0.0);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            double total = 0.0;
            // face toward +x
            if (i + 1 < g.nx) {
                const double q = (v.at(i + 1, j) - v.at(i, j)) / g.hx;
                const double donor = q > 0.0 ? u.at(i, j) : u.at(i + 1, j);
                total -= q * donor / g.hx;
            }
            // face toward -x
            if (i - 1 >= 0) {
                const double q = (v.at(i, j) - v.at(i - 1, j)) / g.hx;
                const double donor = q > 0.0 ? u.at(i - 1, j) : u.at(i, j);
                total += q * donor / g.hx;
            }
            if (g.dim == 2) {
                if (j + 1 < g.ny) {
                    const double q = (v.at(i, j + 1) - v.at(i, j)) / g.hy;
                    const double donor = q > 0.0 ? u.at(i, j) : u.at(i, j + 1);
                    total -= q * donor / g.hy;
                }
                if (j - 1 >= 0) {
                    const double q = (v.at(i, j) - v.at(i, j - 1)) / g.hy;
                    const double donor = q > 0.0 ? u.at(i, j - 1) : u.at(i, j);
                    total += q * donor / g.hy;
                }
            }
            out[static_cast<size_t>(g.index(i, j))] = total;
        }
    return out;
}

} // namespace

TEST_CASE("constant potential moves nothing") {
    const Grid g = Grid::rectangle(12, 9, 1.0, 1.0);
    oracles::Rng rng(2);
    const Field u = random_field(g, rng, 0.0, 3.0);
    const Field out = advection_divergence(u, Field(g, 4.2), g);
    for (int k = 0; k < out.size(); ++k) CHECK(out[k] == 0.0);
}

TEST_CASE("fluxes telescope to zero total mass change") {
    oracles::Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        const Grid g = (trial % 2 == 0) ? Grid::rectangle(17, 11, 1.0, 0.7)
                                        : Grid::interval(53, 2.0);
        const Field u = random_field(g, rng, 0.0, 5.0);
        const Field v = random_field(g, rng, -2.0, 2.0);
        const Field out = advection_divergence(u, v, g);
        double sum = 0.0, scale = 0.0;
        for (int k = 0; k < out.size(); ++k) {
            sum += out[k];
            scale += std::abs(out[k]);
        }
        CHECK(std::abs(sum) <= 1e-12 * std::max(1.0, scale));
    }
}

TEST_CASE("1D hand-built case matches the face enumeration") {
    const Grid g = Grid::interval(8, 1.0);
    Field u(g, std::vector<double>{0.0, 1.0, 2.0, 0.5, 3.0, 0.0, 1.5, 2.5});
    Field v(g, std::vector<double>{0.1, 0.4, 0.2, 0.9, 0.9, 0.3, 0.8, 0.0});
    const Field out = advection_divergence(u, v, g);
    const auto ref = upwind_reference(u, v, g);
    for (int k = 0; k < out.size(); ++k)
        CHECK(out[k] == doctest::Approx(ref[static_cast<size_t>(k)]).epsilon(1e-13));
}

TEST_CASE("2D random cases match the face enumeration") {
    oracles::Rng rng(31);
    for (int trial = 0; trial < 6; ++trial) {
        const Grid g = Grid::rectangle(7, 9, 1.0, 1.4);
        const Field u = random_field(g, rng, 0.0, 2.0);
        const Field v = random_field(g, rng, -1.0, 1.0);
        const Field out = advection_divergence(u, v, g);
        const auto ref = upwind_reference(u, v, g);
        for (int k = 0; k < out.size(); ++k)
            CHECK(out[k] ==
                  doctest::Approx(ref[static_cast<size_t>(k)]).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("outflow-rate CFL keeps the explicit sweep nonnegative") {
    oracles::Rng rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        const Grid g = (trial % 2 == 0) ? Grid::rectangle(10, 10, 1.0, 1.0)
                                        : Grid::interval(40, 1.0);
        const double eps = (trial % 3 == 0) ? rng.uniform(0.0, 0.5) : 0.0;
        const Field u = random_field(g, rng, 0.0, 4.0);
        const Field v = random_field(g, rng, -3.0, 3.0); // adversarial potentials
        const double rate = max_outflow_rate(v, g, eps);
        REQUIRE(rate > 0.0);
        const double dt = 0.9 / rate;

        Field rhs = advection_divergence(u, v, g);
        if (eps > 0.0) {
            const Field lap = laplacian(u, g);
            for (int k = 0; k < rhs.size(); ++k) rhs[k] += eps * lap[k];
        }
        for (int k = 0; k < u.size(); ++k) CHECK(u[k] + dt * rhs[k] >= 0.0);
    }
}

TEST_CASE("laplacian conserves mass and kills constants") {
    const Grid g = Grid::rectangle(14, 10, 1.0, 2.0);
    oracles::Rng rng(8);
    const Field u = random_field(g, rng, -1.0, 1.0);
    const Field lap = laplacian(u, g);
    double sum = 0.0;
    for (int k = 0; k < lap.size(); ++k) sum += lap[k];
    CHECK(std::abs(sum) <= 1e-11);

    const Field flat = laplacian(Field(g, 2.5), g);
    for (int k = 0; k < flat.size(); ++k) CHECK(flat[k] == 0.0);
}

TEST_CASE("grad_inf_norm sees the steepest face") {
    const Grid g = Grid::interval(4, 1.0); // h = 1/4
    Field v(g, std::vector<double>{0.0, 1.0, 0.25, 0.25});
    CHECK(grad_inf_norm(v, g) == doctest::Approx(4.0)); // |1-0|/0.25
}
