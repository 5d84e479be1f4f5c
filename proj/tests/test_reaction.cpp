#include <cmath>

#include <doctest.h>

#include "chemofv/reaction.hpp"
#include "support/oracles.hpp"

using namespace chemofv;

TEST_CASE("zero is a fixed point") {
    const Grid g = Grid::interval(8, 1.0);
    const Field out = reaction_update(Field(g, 0.0), Params{}, 0.1);
    for (int k = 0; k < out.size(); ++k) CHECK(out[k] == 0.0);
}

TEST_CASE("carrying state is an exact fixed point") {
    const Grid g = Grid::interval(8, 1.0);
    for (double theta : {2.0, 1.7}) {
        Params p;
        p.r = 2.3;
        p.mu = 0.7;
        p.theta = theta;
        const double star = std::pow(p.r / p.mu, 1.0 / (theta - 1.0));
        const Field out = reaction_update(Field(g, star), p, 0.05);
        for (int k = 0; k < out.size(); ++k)
            CHECK(out[k] == doctest::Approx(star).epsilon(1e-14));
    }
}

TEST_CASE("update preserves nonnegativity for any dt") {
    oracles::Rng rng(17);
    const Grid g = Grid::interval(32, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        Params p;
        p.r = rng.uniform(0.1, 4.0);
        p.mu = rng.uniform(0.1, 4.0);
        p.theta = rng.uniform(1.1, 3.0);
        Field u(g);
        for (int k = 0; k < u.size(); ++k) u[k] = rng.uniform(0.0, 10.0);
        const Field out = reaction_update(u, p, rng.uniform(1e-6, 10.0));
        for (int k = 0; k < out.size(); ++k) CHECK(out[k] >= 0.0);
    }
}

TEST_CASE("trajectory tracks the closed-form Bernoulli solution at first order") {
    const Grid g = Grid::interval(4, 1.0);
    for (double theta : {2.0, 1.5}) {
        Params p;
        p.r = 1.2;
        p.mu = 0.5;
        p.theta = theta;
        const double t_end = 2.0;

        auto run_error = [&](double dt) {
            Field u(g, 3.0);
            const long steps = static_cast<long>(std::llround(t_end / dt));
            for (long s = 0; s < steps; ++s) u = reaction_update(u, p, dt);
            const double exact = oracles::bernoulli_exact(3.0, p.r, p.mu, theta, t_end);
            return std::abs(u[0] - exact);
        };

        const double coarse = run_error(1e-3);
        const double fine = run_error(5e-4);
        CHECK(coarse < 5e-3);                // O(dt) global accuracy at dt = 1e-3
        CHECK(coarse / fine > 1.6);          // and the error scales linearly
        CHECK(coarse / fine < 2.6);
    }
}
