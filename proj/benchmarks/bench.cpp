#include <benchmark/benchmark.h>

#include <random>

#include "pincalc/decide.hpp"
#include "pincalc/oracle.hpp"
#include "pincalc/steenrod.hpp"

namespace {

using namespace pincalc;

void BM_kunneth_full(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    ManifoldDescriptor a = rp(n), b = rp(n);
    for (auto _ : state) {
        ManifoldDescriptor p = product(a, b);
        benchmark::DoNotOptimize(p.ring->dim(2));
    }
}
BENCHMARK(BM_kunneth_full)->Arg(3)->Arg(5)->Arg(8);

void BM_product_degree2(benchmark::State& state) {
    ManifoldDescriptor a = torus(3), b = torus(3);
    for (auto _ : state) {
        ManifoldDescriptor p = product(a, b, 2);
        benchmark::DoNotOptimize(p.lift_l2.dim());
    }
}
BENCHMARK(BM_product_degree2);

void BM_decide_report(benchmark::State& state) {
    ManifoldDescriptor a = mk(5), b = mk(5);
    for (auto _ : state) {
        DecisionReport r = full_report_product(a, b, 2);
        benchmark::DoNotOptimize(r.pin_c.exists);
    }
}
BENCHMARK(BM_decide_report);

void BM_lipschitz_search(benchmark::State& state) {
    // pin^c fails here, so the search scans until it finds l(a1) + l(a2)
    ManifoldDescriptor n = product(product(rp(2), rp(2)), sphere(1), 2);
    for (auto _ : state) {
        LipschitzResult lip = decide_lipschitz(n);
        benchmark::DoNotOptimize(lip.status);
    }
}
BENCHMARK(BM_lipschitz_search);

void BM_wu_solve(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    ManifoldDescriptor t = torus(n);
    for (auto _ : state) {
        WuData wu = wu_classes(t);
        benchmark::DoNotOptimize(wu.reconstructed_sw.size());
    }
}
BENCHMARK(BM_wu_solve)->Arg(3)->Arg(5)->Arg(7);

void BM_smith_form(benchmark::State& state) {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> entry(-6, 6);
    const int n = static_cast<int>(state.range(0));
    IntMatrix m(n, n);
    for (auto& x : m.a) x = entry(rng);
    for (auto _ : state) {
        SmithForm s = smith_form(m);
        benchmark::DoNotOptimize(s.rank);
    }
}
BENCHMARK(BM_smith_form)->Arg(6)->Arg(12)->Arg(20);

void BM_subspace_membership(benchmark::State& state) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coin(0, 1);
    const std::size_t n = 64;
    std::vector<Bitvec> rows;
    for (std::size_t r = 0; r < 20; ++r) {
        Bitvec v(n);
        for (std::size_t i = 0; i < n; ++i)
            if (coin(rng)) v.set(i);
        rows.push_back(v);
    }
    Z2Subspace s(2, n, rows);
    Bitvec probe(n);
    probe.set(3);
    probe.set(40);
    for (auto _ : state) {
        benchmark::DoNotOptimize(s.contains(Z2Class(2, probe)));
    }
}
BENCHMARK(BM_subspace_membership);

}  // namespace

BENCHMARK_MAIN();
