#include <cstring>

#include <doctest.h>

#include "chemofv/report_io.hpp"
#include "support/oracles.hpp"

using namespace chemofv;

TEST_CASE("minimal config parses with documented defaults") {
    const std::string text =
        "mode = single\n"
        "grid.dim = 1\n"
        "grid.nx = 64\n"
        "u0.kind = uniform\n"
        "u0.value = 2.0\n";
    const RunConfig cfg = parse_config(text);
    CHECK(cfg.mode == RunMode::single);
    CHECK(cfg.grid_nx == 64);
    CHECK(cfg.u0.uniform);
    CHECK(cfg.params.r == 1.0);
    CHECK(cfg.params.theta == 2.0);
    CHECK(cfg.step.cfl == 0.4);
    CHECK(cfg.step.dt_max == 1e-2);
    CHECK(cfg.step.blowup_cutoff == 1e6);
    CHECK(cfg.solve.rel_tol == 1e-10);
    CHECK(cfg.diag.q == 4.0);
    CHECK(cfg.diag.cadence == 1);
    CHECK(cfg.t_end == 1.0);
}

TEST_CASE("constraint violations become ValidationError with the constraint name") {
    const std::string text =
        "mode = single\n"
        "params.theta = 0.5\n"
        "u0.kind = uniform\n"
        "u0.value = 1.0\n";
    CHECK_THROWS_WITH_AS(parse_config(text), "theta must exceed 1", ValidationError);
}

TEST_CASE("unknown keys are parse errors with their line number") {
    const std::string text =
        "mode = single\n"
        "u0.kind = uniform\n"
        "params.foo = 1.0\n";
    try {
        parse_config(text);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("duplicate keys and malformed numbers are rejected") {
    CHECK_THROWS_AS(parse_config("mode = single\nmode = single\n"), ParseError);
    CHECK_THROWS_AS(parse_config("params.r = fast\n"), ParseError);
    CHECK_THROWS_AS(parse_config("params.r\n"), ParseError);
}

TEST_CASE("comments and blank lines are ignored") {
    const std::string text =
        "# full-line comment\n"
        "\n"
        "mode = single   # trailing comment\n"
        "u0.kind = uniform\n"
        "u0.value = 1.5\n";
    const RunConfig cfg = parse_config(text);
    CHECK(cfg.u0.value == 1.5);
}

TEST_CASE("config echo round-trips") {
    const std::string text =
        "mode = viscosity\n"
        "params.eps = 0.125\n"
        "params.mu = 0.75\n"
        "grid.dim = 2\n"
        "grid.nx = 48\n"
        "grid.ny = 32\n"
        "grid.ly = 0.6600000000000001\n"
        "u0.kind = bump\n"
        "u0.center_x = 0.337\n"
        "u0.center_y = 0.25\n"
        "u0.width = 0.21\n"
        "u0.target_ltheta = 17.25\n"
        "step.cfl = 0.35\n"
        "solve.rel_tol = 1e-11\n"
        "sweep.variable = eps\n"
        "sweep.values = 0.1,0.05,0.025\n"
        "sweep.t_end = 0.4\n"
        "sweep.seeds = 2\n"
        "output.dir = here\n";
    const std::string once = emit_config(parse_config(text));
    const std::string twice = emit_config(parse_config(once));
    CHECK(once == twice);
}

TEST_CASE("17-digit floats re-parse to the identical double") {
    oracles::Rng rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        double x;
        if (trial == 0) x = 0.0;
        else if (trial == 1) x = 1e-300;
        else if (trial == 2) x = -1.0 / 3.0;
        else x = rng.uniform(-1e6, 1e6) * std::pow(10.0, rng.uniform(-12.0, 12.0));
        const std::string s = format_double17(x);
        const double y = std::strtod(s.c_str(), nullptr);
        CHECK(std::memcmp(&x, &y, sizeof x) == 0);
    }
}

TEST_CASE("empty series emits a header-only csv") {
    CHECK(diagnostics_csv({}) == "t,mass,mean,umax,ltheta,w1q,mass_id_err,dt\n");
}

TEST_CASE("diagnostics csv carries the pinned header and one row per record") {
    std::vector<DiagnosticsRecord> series(2);
    series[0].t = 0.25;
    series[1].t = 0.5;
    series[1].umax = 1.0 / 3.0;
    const std::string csv = diagnostics_csv(series);
    CHECK(csv.rfind("t,mass,mean,umax,ltheta,w1q,mass_id_err,dt\n", 0) == 0);
    size_t rows = 0;
    for (char c : csv)
        if (c == '\n') ++rows;
    CHECK(rows == 3); // header + 2 records

    // A value survives the round trip bit for bit.
    const auto pos = csv.rfind("0.5,");
    REQUIRE(pos != std::string::npos);
    const std::string u = csv.substr(csv.find(',', csv.find(',', csv.find(',', pos) + 1) + 1) + 1);
    const double back = std::strtod(u.c_str(), nullptr);
    const double expect = 1.0 / 3.0;
    CHECK(std::memcmp(&back, &expect, sizeof back) == 0);
}

TEST_CASE("sweep modes demand their sweep block") {
    const std::string text =
        "mode = threshold\n"
        "u0.kind = bump\n";
    CHECK_THROWS_AS(parse_config(text), ValidationError);

    const std::string wrong_var =
        "mode = threshold\n"
        "u0.kind = bump\n"
        "sweep.variable = eps\n"
        "sweep.values = 1.0,2.0\n";
    CHECK_THROWS_AS(parse_config(wrong_var), ValidationError);
}

TEST_CASE("ar_check mode validates the sensitivities") {
    const std::string incompatible =
        "mode = ar_check\n"
        "u0.kind = uniform\n"
        "u0.value = 1.0\n"
        "params.chi = 1.0\n"
        "params.xi = 2.0\n"
        "params.d1 = 2.0\n";
    CHECK_THROWS_AS(parse_config(incompatible), ValidationError);

    const std::string good =
        "mode = ar_check\n"
        "u0.kind = uniform\n"
        "u0.value = 1.0\n"
        "params.chi = 2.0\n"
        "params.xi = 1.0\n"
        "params.gamma = 2.0\n"
        "params.delta = 3.0\n";
    CHECK_NOTHROW(parse_config(good));
}
