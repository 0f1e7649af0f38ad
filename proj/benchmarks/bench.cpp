#include "finsler/ricci.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace finsler;

namespace {

LieAlgebra bench_so3(double c) {
    LieAlgebra alg(3, c);
    alg.cc(0, 1, 2) = 1;
    alg.cc(1, 0, 2) = -1;
    alg.cc(1, 2, 0) = 1;
    alg.cc(2, 1, 0) = -1;
    alg.cc(2, 0, 1) = 1;
    alg.cc(0, 2, 1) = -1;
    return alg;
}

void DeriveZetaSquare(benchmark::State& state) {
    PhiFamily phi = make_phi(PhiKind::Square);
    for (auto _ : state) {
        ZetaSet z = generic_zeta(qtp(phi), phi.name());
        benchmark::DoNotOptimize(z);
    }
}
BENCHMARK(DeriveZetaSquare)->Unit(benchmark::kMillisecond);

void CompareZetaSquare(benchmark::State& state) {
    ZetaSet gen = generic_zeta(qtp(make_phi(PhiKind::Square)), "square");
    ZetaSet tab = table_zeta(TableKind::Square);
    for (auto _ : state) {
        ZetaComparison cmp = compare_zeta(gen, tab);
        benchmark::DoNotOptimize(cmp);
    }
}
BENCHMARK(CompareZetaSquare)->Unit(benchmark::kMillisecond);

void EvalCompiledZeta(benchmark::State& state) {
    CompiledZetaSet z = compile_zeta(generic_zeta(qtp(make_phi(PhiKind::Square)), "square"));
    double s = 0.0;
    for (auto _ : state) {
        auto v = z.eval(s, 0.25);
        benchmark::DoNotOptimize(v);
        s = s < 0.4 ? s + 1e-4 : 0.0;
    }
}
BENCHMARK(EvalCompiledZeta);

void ContractedScalarsSo3(benchmark::State& state) {
    LieAlgebra alg = bench_so3(0.5);
    std::vector<double> z{0.3, -0.2, 0.9};
    for (auto _ : state) {
        ContractedScalars sc = contracted_scalars(alg, z);
        benchmark::DoNotOptimize(sc);
    }
}
BENCHMARK(ContractedScalarsSo3);

void RicciHomogeneousSo3(benchmark::State& state) {
    LieAlgebra alg = bench_so3(0.5);
    std::vector<double> z{1.0, 0.0, 0.0};
    ricci_homogeneous(alg, TableKind::Square, z, AlphaRicciMode::lie_group()); // warm the cache
    for (auto _ : state) {
        RicciReport r = ricci_homogeneous(alg, TableKind::Square, z, AlphaRicciMode::lie_group());
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(RicciHomogeneousSo3);

void ScanSo3(benchmark::State& state) {
    LieAlgebra alg = bench_so3(0.5);
    PhiFamily phi = make_phi(PhiKind::Square);
    riemannian_implication(alg, phi, 1);
    for (auto _ : state) {
        ScanReport r = riemannian_implication(alg, phi, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(ScanSo3)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
