#include <benchmark/benchmark.h>

#include <random>

#include "hpq/fft.hpp"
#include "hpq/kac.hpp"
#include "hpq/l1.hpp"
#include "hpq/mackey.hpp"
#include "hpq/quantize.hpp"

using namespace hpq;

namespace {

PhaseGrid small_grid(int nu, int na) {
    PhaseGrid g;
    g.n_u = nu;
    g.du = 12.0 / nu;
    g.u_min = -6.0;
    g.n_a = na;
    g.da = 32.0 / na;
    g.a_min = -16.0;
    return g;
}

RhoGrid rho_for(const PhaseGrid& pg, double u_min) {
    RhoGrid r;
    r.du = pg.du;
    r.u_min = u_min;
    r.n = static_cast<int>((6.0 - u_min) / pg.du + 0.5);
    return r;
}

void BM_KernelFastPath(benchmark::State& state) {
    const PhaseGrid pg = PhaseGrid::standard();
    const RhoGrid rg = RhoGrid::standard();
    const GridFunction f = GridFunction::gaussian(pg, 0.2, 0.3, 1.0, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(quantize(f, +1, 1.0, rg, KernelPath::fast));
    }
}
BENCHMARK(BM_KernelFastPath)->Unit(benchmark::kMillisecond);

void BM_KernelQuadraturePath(benchmark::State& state) {
    const PhaseGrid pg = small_grid(128, 256);
    const RhoGrid rg = rho_for(pg, -9.0);
    const GridFunction f = GridFunction::gaussian(pg, 0.2, 0.3, 1.0, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(quantize(f, +1, 1.0, rg, KernelPath::quadrature));
    }
}
BENCHMARK(BM_KernelQuadraturePath)->Unit(benchmark::kMillisecond);

void BM_Convolve(benchmark::State& state) {
    const PhaseGrid pg = small_grid(static_cast<int>(state.range(0)),
                                    static_cast<int>(2 * state.range(0)));
    const GridFunction f = GridFunction::gaussian(pg, 0.3, 0.5, 1.0, 1.0);
    const GridFunction g = GridFunction::gaussian(pg, -0.2, -0.4, 0.8, 1.2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(convolve(f, g));
    }
}
BENCHMARK(BM_Convolve)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_FFT(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::vector<cplx> v(static_cast<std::size_t>(state.range(0)));
    for (auto& z : v) z = cplx(d(rng), d(rng));
    for (auto _ : state) {
        std::vector<cplx> w = v;
        fft_pow2(w, -1);
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(BM_FFT)->Arg(1024)->Arg(8192);

void BM_KacReportS3(benchmark::State& state) {
    const FiniteGroup g = SemidirectProduct::s3().as_group();
    for (auto _ : state) {
        benchmark::DoNotOptimize(kac::kac_axiom_report(g));
    }
}
BENCHMARK(BM_KacReportS3)->Unit(benchmark::kMillisecond);

void BM_GeneratorCheck(benchmark::State& state) {
    const SemidirectProduct g = SemidirectProduct::z4_z2();
    const auto labels = mackey::classify_dual(g);
    mackey::FiniteRep rep;
    for (const auto& l : labels)
        if (l.dim == 2) rep = mackey::induced_rep(g, l);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mackey::generator_check(g, rep));
    }
}
BENCHMARK(BM_GeneratorCheck)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
