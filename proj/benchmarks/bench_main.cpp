#include <benchmark/benchmark.h>

#include "quclass/charfun.hpp"
#include "quclass/geometry.hpp"
#include "quclass/povm.hpp"
#include "quclass/rng.hpp"
#include "quclass/sampler.hpp"

using namespace quclass;

static void BM_HermEig(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  CMat h(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      h(i, j) = i == j ? cplx(rng.normal()) : cplx(rng.normal(), rng.normal());
      h(j, i) = std::conj(h(i, j));
    }
  for (auto _ : state) benchmark::DoNotOptimize(herm_eig(h));
}
BENCHMARK(BM_HermEig)->Arg(3)->Arg(4)->Arg(8)->Arg(16);

static void BM_CriticalEtaQutrit(benchmark::State& state) {
  const auto b = basis::qutrit_builtin();
  for (auto _ : state) benchmark::DoNotOptimize(povm::critical_eta(b, state.range(0) != 0));
}
BENCHMARK(BM_CriticalEtaQutrit)->Arg(0)->Arg(1);

static void BM_MhCharfunQutrit(benchmark::State& state) {
  const auto b = basis::qutrit_builtin();
  const auto rho = states::random_state(3, states::StateKind::Mixed, 1).mat();
  const charfun::TVector t{{0.3, -0.7, 1.1, 0.2, -0.5, 0.9, -1.3, 0.4}};
  for (auto _ : state) benchmark::DoNotOptimize(charfun::mh_charfun(rho, b, t));
}
BENCHMARK(BM_MhCharfunQutrit);

static void BM_VertexEnumeration(benchmark::State& state) {
  const auto h = geometry::h_polytope(state.range(0) == 2 ? basis::pauli_basis() : basis::qutrit_builtin());
  for (auto _ : state) benchmark::DoNotOptimize(geometry::enumerate_vertices(h));
}
BENCHMARK(BM_VertexEnumeration)->Arg(2)->Arg(3);

static void BM_Sample(benchmark::State& state) {
  povm::JointDistribution d;
  d.p.assign(81, 1.0 / 81);
  for (auto _ : state) benchmark::DoNotOptimize(sampler::sample(d, 100000, 1));
}
BENCHMARK(BM_Sample);
BENCHMARK_MAIN();
