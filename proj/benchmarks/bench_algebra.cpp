#include <benchmark/benchmark.h>

#include "cayley/grassmann.hpp"
#include "cayley/hilbert.hpp"
#include "cayley/zero_dim.hpp"

using namespace cayley;

static void BM_BuchbergerKatsura3_Q(benchmark::State& state) {
    auto R = PolyRing<Rationals>::make({"x", "y", "z", "w"}, Rationals{});
    std::vector<Polynomial<Rationals>> gens = {
        parse_poly<Rationals>("x + 2*y + 2*z + 2*w - 1", R),
        parse_poly<Rationals>("x^2 + 2*y^2 + 2*z^2 + 2*w^2 - x", R),
        parse_poly<Rationals>("2*x*y + 2*y*z + 2*z*w - y", R),
        parse_poly<Rationals>("y^2 + 2*x*z + 2*y*w - z", R)};
    for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens));
}
BENCHMARK(BM_BuchbergerKatsura3_Q);

static void BM_BuchbergerCyclic4_F101(benchmark::State& state) {
    auto R = PolyRing<PrimeField>::make({"a", "b", "c", "d"}, PrimeField(101));
    std::vector<Polynomial<PrimeField>> gens = {
        parse_poly<PrimeField>("a + b + c + d", R),
        parse_poly<PrimeField>("a*b + b*c + c*d + d*a", R),
        parse_poly<PrimeField>("a*b*c + b*c*d + c*d*a + d*a*b", R),
        parse_poly<PrimeField>("a*b*c*d - 1", R)};
    for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens));
}
BENCHMARK(BM_BuchbergerCyclic4_F101);

static void BM_TwoPointsSaturation(benchmark::State& state) {
    GrassmannContext<Rationals> ctx(2, 4, Rationals{});
    auto gens = pluecker_ideal(ctx).gens();
    auto V = v_ideal(ctx);
    for (const auto& g : V.gens()) gens.push_back(g);
    for (auto _ : state) {
        Ideal<Rationals> I(ctx.ring(), gens);
        benchmark::DoNotOptimize(saturate(I, irrelevant_ideal(ctx.ring())));
    }
}
BENCHMARK(BM_TwoPointsSaturation);

static void BM_HilbertG25_F7(benchmark::State& state) {
    GrassmannContext<PrimeField> ctx(2, 5, PrimeField(7));
    auto I = pluecker_ideal(ctx);
    for (auto _ : state) {
        Ideal<PrimeField> fresh(ctx.ring(), I.gens());
        benchmark::DoNotOptimize(hilbert_data(fresh));
    }
}
BENCHMARK(BM_HilbertG25_F7);

BENCHMARK_MAIN();
