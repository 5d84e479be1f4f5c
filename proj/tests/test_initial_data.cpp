#include <cmath>
#include <vector>

#include <doctest.h>

#include "chemofv/initial_data.hpp"

using namespace chemofv;

TEST_CASE("bump hits the target L^theta power exactly") {
    const Grid g = Grid::rectangle(64, 64, 1.0, 1.0);
    const Field f = make_bump(g, {0.5, 0.5}, 0.2, 8.0, 2.0);

    double power = 0.0;
    for (int k = 0; k < f.size(); ++k) power += f[k] * f[k];
    power *= g.cell_area();
    CHECK(power == doctest::Approx(8.0).epsilon(1e-10));
    CHECK(f.min() >= 0.0);
}

TEST_CASE("bump support vanishes outside the radius") {
    const Grid g = Grid::interval(256, 2.0);
    const Field f = make_bump(g, {1.0, 0.0}, 0.25, 1.0, 2.0);
    for (int i = 0; i < g.nx; ++i) {
        if (std::abs(g.x_center(i) - 1.0) >= 0.25) CHECK(f[i] == 0.0);
    }
    CHECK(f.max() > 0.0);
}

TEST_CASE("unresolvable bump width is rejected") {
    const Grid g = Grid::interval(16, 1.0); // h = 1/16
    CHECK_THROWS_AS(make_bump(g, {0.5, 0.0}, 0.06, 1.0, 2.0), DomainError);
    CHECK_NOTHROW(make_bump(g, {0.5, 0.0}, 0.2, 1.0, 2.0));
}

TEST_CASE("domain-wide width degenerates to the norm-solving constant") {
    const Grid g = Grid::rectangle(16, 16, 1.0, 2.0);
    const Field f = make_bump(g, {0.5, 1.0}, 2.5, 8.0, 2.0);
    const double expected = std::sqrt(8.0 / g.volume());
    for (int k = 0; k < f.size(); ++k) CHECK(f[k] == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("bump validates center and arguments") {
    const Grid g = Grid::interval(64, 1.0);
    CHECK_THROWS_AS(make_bump(g, {1.5, 0.0}, 0.1, 1.0, 2.0), DomainError);
    CHECK_THROWS_AS(make_bump(g, {0.5, 0.0}, -0.1, 1.0, 2.0), DomainError);
    CHECK_THROWS_AS(make_bump(g, {0.5, 0.0}, 0.1, -1.0, 2.0), DomainError);
}

TEST_CASE("field length must match the grid") {
    const Grid g = Grid::interval(8, 1.0);
    CHECK_THROWS_AS(Field(g, std::vector<double>(7, 0.0)), DomainError);
}
