#include <benchmark/benchmark.h>

#include <random>

#include "polarcheck/dual_polar.hpp"
#include "polarcheck/half_spin.hpp"
#include "polarcheck/theorems.hpp"

using namespace polarcheck;

namespace {

std::vector<Subspace> random_subspaces(unsigned d, unsigned q, unsigned rows, size_t count) {
    std::mt19937_64 rng(1);
    std::vector<Subspace> out;
    out.reserve(count);
    while (out.size() < count) {
        std::vector<Vec> m;
        for (unsigned r = 0; r < rows; ++r) {
            Vec v(d);
            for (auto& x : v) x = uint8_t(rng() % q);
            m.push_back(std::move(v));
        }
        out.push_back(rref(m, d, q));
    }
    return out;
}

}  // namespace

static void BM_rref_gf2(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const unsigned d = unsigned(state.range(0));
    std::vector<Vec> rows;
    for (unsigned r = 0; r < d / 2; ++r) {
        Vec v(d);
        for (auto& x : v) x = uint8_t(rng() & 1);
        rows.push_back(std::move(v));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(rref(rows, d, 2));
    }
}
BENCHMARK(BM_rref_gf2)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_intersection_dim(benchmark::State& state) {
    const unsigned q = unsigned(state.range(0));
    auto subs = random_subspaces(10, q, 5, 64);
    size_t i = 0;
    for (auto _ : state) {
        const Subspace& a = subs[i % subs.size()];
        const Subspace& b = subs[(i * 7 + 3) % subs.size()];
        benchmark::DoNotOptimize(intersection_dim(a, b));
        ++i;
    }
}
BENCHMARK(BM_intersection_dim)->Arg(2)->Arg(3);

static void BM_polar_space_build(benchmark::State& state) {
    const bool quadric = state.range(0) != 0;
    for (auto _ : state) {
        Form f = quadric ? Form::hyperbolic_quadric(4, 2) : Form::symplectic(3, 2);
        benchmark::DoNotOptimize(PolarSpace::build(std::move(f)));
    }
}
BENCHMARK(BM_polar_space_build)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_dual_polar_adjacency(benchmark::State& state) {
    PolarSpace ps = PolarSpace::build(Form::hyperbolic_quadric(4, 2));
    for (auto _ : state) {
        DualPolarSpace dps(ps, 1);
        benchmark::DoNotOptimize(dps.size());
    }
}
BENCHMARK(BM_dual_polar_adjacency)->Unit(benchmark::kMillisecond);

static void BM_witness_characterization(benchmark::State& state) {
    PolarSpace ps = PolarSpace::build(Form::hyperbolic_quadric(4, 2));
    auto families = split_families(ps, 1);
    CharacterizationOptions opt;
    opt.exhaustive = true;
    opt.threads = int(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_witness_characterization(families.first, opt));
    }
}
BENCHMARK(BM_witness_characterization)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_bfs_dual_polar(benchmark::State& state) {
    PolarSpace ps = PolarSpace::build(Form::hyperbolic_quadric(4, 2));
    DualPolarSpace dps(ps, 1);
    int src = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bfs_distances(dps.adjacency(), src));
        src = (src + 1) % dps.size();
    }
}
BENCHMARK(BM_bfs_dual_polar);

BENCHMARK_MAIN();
