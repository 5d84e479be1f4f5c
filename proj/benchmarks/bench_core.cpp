#include <benchmark/benchmark.h>

#include "chemofv/advection.hpp"
#include "chemofv/initial_data.hpp"
#include "chemofv/stepper.hpp"

using namespace chemofv;

namespace {

Field bump_on(const Grid& g) {
    return make_bump(g, {0.45 * g.lx, 0.55 * g.ly}, 0.15 * g.lx, 10.0, 2.0);
}

void BM_HelmholtzSolve(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Grid g = Grid::rectangle(n, n, 1.0, 1.0);
    const Field s = bump_on(g);
    SolveConfig cfg;
    for (auto _ : state) {
        Field phi = solve_helmholtz({g, 1.0, 1.0, s}, cfg);
        benchmark::DoNotOptimize(phi.data());
    }
    state.SetItemsProcessed(state.iterations() * g.cells());
}
BENCHMARK(BM_HelmholtzSolve)->Arg(64)->Arg(128);

void BM_HelmholtzWarmStart(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Grid g = Grid::rectangle(n, n, 1.0, 1.0);
    const Field s = bump_on(g);
    SolveConfig cfg;
    const Field warm = solve_helmholtz({g, 1.0, 1.0, s}, cfg);
    for (auto _ : state) {
        Field phi = solve_helmholtz({g, 1.0, 1.0, s}, cfg, warm);
        benchmark::DoNotOptimize(phi.data());
    }
    state.SetItemsProcessed(state.iterations() * g.cells());
}
BENCHMARK(BM_HelmholtzWarmStart)->Arg(64)->Arg(128);

void BM_AdvectionSweep(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Grid g = Grid::rectangle(n, n, 1.0, 1.0);
    const Field u = bump_on(g);
    const Field v = solve_helmholtz({g, 1.0, 1.0, u}, SolveConfig{});
    for (auto _ : state) {
        Field rhs = advection_divergence(u, v, g);
        benchmark::DoNotOptimize(rhs.data());
    }
    state.SetItemsProcessed(state.iterations() * g.cells());
}
BENCHMARK(BM_AdvectionSweep)->Arg(128)->Arg(256);

void BM_FullStep(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Grid g = Grid::rectangle(n, n, 1.0, 1.0);
    Params p;
    p.eps = 0.01;
    SimState sim = make_state(bump_on(g), p, SolveConfig{});
    StepConfig scfg;
    for (auto _ : state) {
        StepOutcome out = step(std::move(sim), p, scfg, SolveConfig{});
        sim = std::move(out.state);
        benchmark::DoNotOptimize(sim.u.data());
    }
    state.SetItemsProcessed(state.iterations() * g.cells());
}
BENCHMARK(BM_FullStep)->Arg(64)->Arg(128);

} // namespace

BENCHMARK_MAIN();
