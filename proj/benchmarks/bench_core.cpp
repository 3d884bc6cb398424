#include <benchmark/benchmark.h>

#include <random>

#include "linset/linpoly.hpp"
#include "linset/redei.hpp"
#include "linset/sampling.hpp"
#include "linset/spread.hpp"

namespace {

void BM_FieldMul(benchmark::State& state) {
    linset::FieldCtx f(2, 1, static_cast<int>(state.range(0)));
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::uint32_t> dist(1, f.order() - 1);
    for (auto _ : state) {
        auto a = f.from_code(dist(rng)), b = f.from_code(dist(rng));
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_FieldMul)->Arg(6)->Arg(12);

void BM_OreDivision(benchmark::State& state) {
    linset::FieldCtx f(2, 1, 6);
    std::mt19937_64 rng(2);
    for (auto _ : state) {
        auto a = linset::random_linpoly(f, rng);
        auto b = linset::random_linpoly(f, rng);
        if (b.is_zero()) continue;
        benchmark::DoNotOptimize(linset::sym_divrem(a, b));
    }
}
BENCHMARK(BM_OreDivision);

void BM_RedeiDivision(benchmark::State& state) {
    linset::FieldCtx f(2, 1, static_cast<int>(state.range(0)));
    auto v = linset::trace_kernel_subspace(f, {});
    auto tr = linset::LinPoly::trace_poly(f);
    std::vector<linset::AffinePoint> pts;
    for (const auto& x : v.enumerate()) pts.push_back({x[0], tr.eval(x[0])});
    auto r = linset::redei_build(f, pts);
    for (auto _ : state) benchmark::DoNotOptimize(linset::divide_xqn(r));
}
BENCHMARK(BM_RedeiDivision)->Arg(3)->Arg(4)->Arg(5);

void BM_BOperator(benchmark::State& state) {
    linset::FieldCtx f(2, 1, 4);
    auto mu = linset::construct_vbvlak(f, 4);
    for (auto _ : state) benchmark::DoNotOptimize(linset::b_operator(mu));
}
BENCHMARK(BM_BOperator);

}  // namespace

BENCHMARK_MAIN();
