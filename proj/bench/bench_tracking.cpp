// Serial reference loop versus OpenMP path distribution.

#include "wronski/homotopy.hpp"
#include "wronski/lattice.hpp"
#include "wronski/wronski.hpp"

#include <benchmark/benchmark.h>

using namespace wronski;

namespace {

struct Instance {
    NumericSystem target;
    StartSystem start;
    Complex gamma;
};

Instance make(const PolynomialSystem& system) {
    Instance in;
    in.target = to_numeric(system);
    in.start = total_degree_start(in.target);
    in.gamma = gamma_from_seed(0);
    return in;
}

const Instance& reference_instance(bool center) {
    static const Instance ideal_instance = [] {
        const auto config = simplex_lattice_points(2, 3);
        const Lifting lifting{{12, 3, 0, 0, 8, 1, 0, 9, 5, 15}};
        const auto coloring = vertex_coloring(as_simplicial_complex(regular_subdivision(config, lifting)));
        return make(wronski_center_ideal(config, lifting, coloring));
    }();
    static const Instance system_instance = [] {
        const auto config = simplex_lattice_points(2, 3);
        const Lifting lifting{{12, 3, 0, 0, 8, 1, 0, 9, 5, 15}};
        const auto coloring = vertex_coloring(as_simplicial_complex(regular_subdivision(config, lifting)));
        return make(wronski_system(config, lifting, coloring, CoefficientChoice{{{19, 8, -19}, {39, 7, 42}}}, 1));
    }();
    return center ? ideal_instance : system_instance;
}

void track(benchmark::State& state, bool center, Schedule schedule) {
    const auto& in = reference_instance(center);
    const Homotopy h{&in.start.system, &in.target, in.gamma};
    const TrackerSettings settings;
    for (auto _ : state) {
        auto outcomes = track_all(h, in.start.solutions, settings, schedule);
        benchmark::DoNotOptimize(outcomes);
    }
    state.counters["paths"] = static_cast<double>(in.start.solutions.size());
    state.counters["paths_per_s"] =
        benchmark::Counter(static_cast<double>(in.start.solutions.size()), benchmark::Counter::kIsIterationInvariantRate);
}

void BM_WronskiSystemSerial(benchmark::State& s) { track(s, false, Schedule::Serial); }
void BM_WronskiSystemParallel(benchmark::State& s) { track(s, false, Schedule::Parallel); }
void BM_CenterIdealSerial(benchmark::State& s) { track(s, true, Schedule::Serial); }
void BM_CenterIdealParallel(benchmark::State& s) { track(s, true, Schedule::Parallel); }

}  // namespace

BENCHMARK(BM_WronskiSystemSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WronskiSystemParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CenterIdealSerial)->Unit(benchmark::kMillisecond)->Iterations(2);
BENCHMARK(BM_CenterIdealParallel)->Unit(benchmark::kMillisecond)->Iterations(2);

BENCHMARK_MAIN();
