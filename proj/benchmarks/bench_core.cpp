#include "gcdlab/gengcd.hpp"
#include "gcdlab/heights.hpp"
#include "gcdlab/hilbert.hpp"
#include "gcdlab/lrs.hpp"
#include "gcdlab/harness/lrs_scan.hpp"

#include <benchmark/benchmark.h>

using namespace gcdlab;

namespace {

PowerSum geo(long r) { return PowerSum::geometric(r); }

void BM_LogRealSign(benchmark::State& state) {
    const LogReal a = LogReal::log_of(Integer(1025)) - LogReal::log_prime(2, 10);
    for (auto _ : state) benchmark::DoNotOptimize(a.sign());
}
BENCHMARK(BM_LogRealSign);

void BM_Height(benchmark::State& state) {
    const Rational x = make_rational(987654321, 123456789);
    for (auto _ : state) benchmark::DoNotOptimize(height(x));
}
BENCHMARK(BM_Height);

void BM_LogGcdBig(benchmark::State& state) {
    const long k = state.range(0);
    const Rational a = Rational(pow(Integer(2), static_cast<unsigned long>(k)) * k + 1);
    const Rational b = Rational(pow(Integer(2), static_cast<unsigned long>(k + 7)) + 1);
    for (auto _ : state) benchmark::DoNotOptimize(log_gcd(a, b));
}
BENCHMARK(BM_LogGcdBig)->Arg(64)->Arg(256)->Arg(1024);

void BM_TruncatedIdeal(benchmark::State& state) {
    const MultiPoly f = MultiPoly::parse("x1^2 - 3*x2 + 1", 2), g = MultiPoly::parse("x1*x2 + x2^2 - 2", 2);
    const long m = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(TruncatedIdeal(f, g, m).Nprime());
}
BENCHMARK(BM_TruncatedIdeal)->Arg(4)->Arg(8)->Arg(12);

void BM_GreedyBasis(benchmark::State& state) {
    const TruncatedIdeal T(MultiPoly::parse("x1^2 - x2", 2), MultiPoly::parse("x1*x2 + 3", 2), 6);
    const TorusPoint u({Rational(8, 3), Rational(-1, 16)});
    for (auto _ : state) benchmark::DoNotOptimize(greedy_monomial_basis(T, u, Place::archimedean()));
}
BENCHMARK(BM_GreedyBasis);

void BM_LrsCoprime(benchmark::State& state) {
    const PowerSum F = (geo(2) - geo(1)) * (geo(3) + geo(1)), G = (geo(2) - geo(1)) * (geo(5) + geo(1));
    for (auto _ : state) benchmark::DoNotOptimize(lrs_coprime(F, G));
}
BENCHMARK(BM_LrsCoprime);

void BM_ScanGrid(benchmark::State& state) {
    harness::ScanConfig cfg;
    cfg.F = PowerSum::index() * geo(2) + geo(1);
    cfg.G = geo(2) + geo(1);
    cfg.epsilon = Rational(3, 5);
    cfg.N = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(harness::run_lrs_scan(cfg));
    state.SetItemsProcessed(state.iterations() * cfg.N * cfg.N);
}
BENCHMARK(BM_ScanGrid)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
