#include <benchmark/benchmark.h>

#include "beable/algebra.hpp"
#include "beable/classicality.hpp"
#include "beable/weyl.hpp"
#include "beable/witness.hpp"

namespace {

using namespace beable;

std::vector<OperatorMatrix> factor_gens(int p, int q, int which) {
    const WeylSystem w = clock_shift(which == 0 ? p : q);
    std::vector<OperatorMatrix> gens;
    for (const OperatorMatrix* g : {&w.clock, &w.shift})
        gens.push_back(which == 0 ? kron(*g, identity(q)) : kron(identity(p), *g));
    return gens;
}

void BM_GenerateAlgebra(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const auto gens = factor_gens(d, d, 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(generate_algebra(gens, Eigen::Index(d) * d, {}));
}
BENCHMARK(BM_GenerateAlgebra)->Arg(2)->Arg(3);

void BM_Theorem1Construct(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const StarAlgebra n1 = generate_algebra(factor_gens(d, d, 0), Eigen::Index(d) * d, {});
    const StarAlgebra n2 = generate_algebra(factor_gens(d, d, 1), Eigen::Index(d) * d, {});
    for (auto _ : state) benchmark::DoNotOptimize(theorem1_construct(n1, n2));
}
BENCHMARK(BM_Theorem1Construct)->Arg(2)->Arg(3);

void BM_ClassicalityCheck(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const FiniteEPRState st = finite_epr_state(d, 0, 0);
    const auto pair = clock_observable_pair(st);
    const StarAlgebra b = generate_algebra({pair.first}, Eigen::Index(d) * d, {});
    for (auto _ : state) benchmark::DoNotOptimize(classicality_check(st.phi, b, {}));
}
BENCHMARK(BM_ClassicalityCheck)->Arg(2)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
