#include <benchmark/benchmark.h>

#include "kitaev/analytic.hpp"
#include "kitaev/spin_ed.hpp"

namespace {

using namespace kitaev;

const SpinOperator& hamiltonian16() {
  static const SpinOperator h = build_hamiltonian(LatticeSpec(2, 4, 1), {0.5, 0.5, 1.0});
  return h;
}

void BM_matvec_serial(benchmark::State& state) {
  const auto& h = hamiltonian16();
  Eigen::VectorXd v = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(h.dimension())), out;
  for (auto _ : state) {
    h.apply_serial(v, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_matvec_serial);

void BM_matvec_parallel(benchmark::State& state) {
  const auto& h = hamiltonian16();
  Eigen::VectorXd v = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(h.dimension())), out;
  for (auto _ : state) {
    h.apply(v, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_matvec_parallel);

void BM_vl_density_serial(benchmark::State& state) {
  const QuadratureGrid g{256, 256};
  for (auto _ : state) benchmark::DoNotOptimize(vl_ground_energy_density_serial({0.4, 0.3, 0.3}, g));
}
BENCHMARK(BM_vl_density_serial);

void BM_vl_density_parallel(benchmark::State& state) {
  const QuadratureGrid g{256, 256};
  for (auto _ : state) benchmark::DoNotOptimize(vl_ground_energy_density({0.4, 0.3, 0.3}, g));
}
BENCHMARK(BM_vl_density_parallel);

void BM_ed_gap_16_spins(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ed_gap(LatticeSpec(2, 4, 1), {0.5, 0.5, 1.0}).gap);
}
BENCHMARK(BM_ed_gap_16_spins)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
