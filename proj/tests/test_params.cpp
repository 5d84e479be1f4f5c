#include <doctest.h>

#include "chemofv/initial_data.hpp"
#include "chemofv/params.hpp"
#include "support/oracles.hpp"

using namespace chemofv;

TEST_CASE("validate_params accepts the admissible class") {
    Params p;
    p.eps = 0.01;
    CHECK_NOTHROW(validate_params(p));
    p.eps = 0.0; // hyperbolic limit is admissible
    CHECK_NOTHROW(validate_params(p));

    // Idempotent and value-preserving.
    const Params q = validate_params(validate_params(p));
    CHECK(q.r == p.r);
    CHECK(q.theta == p.theta);
}

TEST_CASE("validate_params names the first violated constraint") {
    Params p;
    p.theta = 1.0;
    CHECK_THROWS_WITH_AS(validate_params(p), "theta must exceed 1", DomainError);
    p = Params{};
    p.eps = -0.1;
    CHECK_THROWS_AS(validate_params(p), DomainError);
    p = Params{};
    p.r = 0.0;
    CHECK_THROWS_AS(validate_params(p), DomainError);
    p = Params{};
    p.delta = -2.0;
    CHECK_THROWS_AS(validate_params(p), DomainError);
}

TEST_CASE("m1 on uniform data") {
    const Grid g = Grid::interval(32, 1.0);
    Params p;
    p.r = 1.0;
    p.mu = 1.0;
    p.theta = 2.0;
    CHECK(m1(p, make_uniform(g, 2.0)) == doctest::Approx(2.0).epsilon(1e-14));

    p.r = 4.0;
    p.theta = 3.0; // carrying scale sqrt(4) = 2 dominates the mean 0.5
    CHECK(m1(p, make_uniform(g, 0.5)) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("m1 on a bump with unit domain") {
    const Grid g = Grid::interval(128, 1.0);
    // L^1 target: with theta = 1 the bump integral is the rescaling target.
    const Field u0 = make_bump(g, {0.5, 0.0}, 0.2, 3.0, 1.0);

    // Independent quadrature of the constructed bump.
    double integral = 0.0;
    for (int k = 0; k < u0.size(); ++k) integral += u0[k];
    integral *= g.hx * g.hy;
    CHECK(integral == doctest::Approx(3.0).epsilon(1e-12));

    Params p;
    p.r = 1.0;
    p.mu = 100.0;
    p.theta = 2.0; // carrying scale 0.01
    CHECK(m1(p, u0) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("validate_params is total on finite inputs") {
    oracles::Rng rng(401);
    int accepted = 0;
    for (int trial = 0; trial < 200; ++trial) {
        Params p;
        p.eps = rng.uniform(-1.0, 2.0);
        p.r = rng.uniform(-1.0, 2.0);
        p.mu = rng.uniform(-1.0, 2.0);
        p.theta = rng.uniform(0.0, 3.0);
        p.d1 = rng.uniform(-1.0, 2.0);
        p.d2 = rng.uniform(-1.0, 2.0);
        p.alpha = rng.uniform(-1.0, 2.0);
        p.beta = rng.uniform(-1.0, 2.0);
        p.gamma = rng.uniform(-1.0, 2.0);
        p.delta = rng.uniform(-1.0, 2.0);
        try {
            validate_params(p);
            ++accepted;
        } catch (const DomainError&) {
        }
    }
    CHECK(accepted > 0); // some draws land in the admissible class
}

TEST_CASE("m1 rejects negative cells") {
    const Grid g = Grid::interval(8, 1.0);
    Field u0(g, 1.0);
    u0[3] = -1e-12;
    CHECK_THROWS_AS(m1(Params{}, u0), DomainError);
}

TEST_CASE("m1 dominates both scales with equality in one") {
    oracles::Rng rng(41);
    const Grid g = Grid::interval(16, 2.0);
    for (int trial = 0; trial < 25; ++trial) {
        Params p;
        p.r = rng.uniform(0.1, 5.0);
        p.mu = rng.uniform(0.1, 5.0);
        p.theta = rng.uniform(1.1, 3.0);
        Field u0(g);
        for (int k = 0; k < u0.size(); ++k) u0[k] = rng.uniform(0.0, 4.0);
        const double value = m1(p, u0);
        const double mean = u0.mean();
        const double carrying = std::pow(p.r / p.mu, 1.0 / (p.theta - 1.0));
        CHECK(value >= mean);
        CHECK(value >= carrying);
        CHECK((value == mean || value == carrying));
    }
}

TEST_CASE("ar_reduce follows the printed transform") {
    ARParams arp;
    arp.chi = 1.0;
    arp.xi = 1.0;
    arp.gamma = 1.0;
    arp.alpha = 1.0;
    arp.d1 = 2.0;
    arp.d2 = 1.0;
    arp.delta = 1.0;
    arp.beta = 1.0;
    const Params p = ar_reduce(arp);
    CHECK(p.alpha == doctest::Approx(1.0).epsilon(1e-15)); // 1*(2*1/1 - 1)
    CHECK(p.r == arp.r);
    CHECK(p.d1 == arp.d1);

    ARParams arp2;
    arp2.chi = 2.0;
    arp2.xi = 1.0;
    arp2.gamma = 2.0;
    arp2.alpha = 1.0;
    arp2.d1 = 1.0;
    arp2.d2 = 1.0;
    arp2.delta = 3.0;
    arp2.beta = 1.0;
    CHECK(arp2.xi * arp2.gamma == arp2.chi * arp2.alpha); // compatibility holds: 2 = 2
    CHECK(ar_reduce(arp2).alpha == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("ar_reduce rejects degenerate and sign-flipped transforms") {
    ARParams arp; // d1*delta == d2*beta
    CHECK_THROWS_AS(ar_reduce(arp), DomainError);

    ARParams neg;
    neg.d1 = 1.0;
    neg.d2 = 1.0;
    neg.delta = 0.5;
    neg.beta = 1.0; // alpha_bar = -0.5
    CHECK_THROWS_AS(ar_reduce(neg), DomainError);

    ARParams incompatible;
    incompatible.chi = 1.1;
    incompatible.d1 = 2.0;
    CHECK_THROWS_AS(validate_ar_params(incompatible), DomainError);
}
