// Serial reference vs OpenMP seed loop of the torus search.

#include "hsk/torus.hpp"

#include <benchmark/benchmark.h>

using namespace hsk;

namespace {

const CompiledSystem& system_for(int which) {
  static const CompiledSystem branches(build_system(params_from_ac(2, 1).eigenmatrix()));
  static const CompiledSystem full(build_system(EigenmatrixTemplate(2, 1, -2, 0, 8)));
  return which == 0 ? branches : full;
}

template <bool Parallel>
void BM_seeds(benchmark::State& state) {
  const CompiledSystem& cs = system_for(static_cast<int>(state.range(0)));
  TorusOptions opt;
  opt.grid = static_cast<int>(state.range(1));
  std::size_t seeds = 0;
  for (auto _ : state) {
    auto r = Parallel ? solve_seeds_parallel(cs, opt, TorusMode::automatic)
                      : solve_seeds_serial(cs, opt, TorusMode::automatic);
    seeds = r.size();
    benchmark::DoNotOptimize(r.data());
  }
  state.counters["seeds"] = static_cast<double>(seeds);
  state.SetItemsProcessed(static_cast<int64_t>(seeds) * state.iterations());
}

}  // namespace

// range(0): 0 = branch mode at (a,c) = (2,1), 1 = full mode at a case (ii) template
BENCHMARK(BM_seeds<false>)->Name("seeds/serial")->Args({0, 64})->Args({1, 24})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_seeds<true>)->Name("seeds/parallel")->Args({0, 64})->Args({1, 24})->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  configure_threads_from_env();
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
