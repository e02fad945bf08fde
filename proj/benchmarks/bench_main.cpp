#include "liealg/properties.hpp"

#include <benchmark/benchmark.h>

using namespace liealg;

namespace {

void BM_RationalMulAdd(benchmark::State& state) {
    Rational a(355, 113), b(-22, 7), acc;
    for (auto _ : state) {
        acc = acc * a + b;
        if (acc.to_mpq().get_den().get_ui() > 1000000) acc = Rational(1, 3);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_RationalMulAdd);

void BM_FrobeniusForm(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    Rng rng(1);
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(rng.range(-3, 3));
    for (auto _ : state) benchmark::DoNotOptimize(frobenius_form(m));
}
BENCHMARK(BM_FrobeniusForm)->Arg(3)->Arg(6)->Arg(10);

void BM_PropSimilar(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    Rng rng(2);
    Mat a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = Scalar(rng.range(-2, 2));
    Mat c = random_unimodular(n, rng, 3 * n);
    Mat b = c * a.scaled(Scalar(Rational(-3, 2))) * inverse(c);
    for (auto _ : state) benchmark::DoNotOptimize(prop_similar(a, b));
}
BENCHMARK(BM_PropSimilar)->Arg(2)->Arg(3)->Arg(5);

void BM_Classify(benchmark::State& state) {
    std::vector<ClassLabel> pts = sweep_points();
    const ClassLabel& l = pts[static_cast<std::size_t>(state.range(0)) % pts.size()];
    StructureTensor t = scramble(build(l), 9).tensor;
    state.SetLabel(l.str());
    for (auto _ : state) benchmark::DoNotOptimize(classify_n2(t));
}
BENCHMARK(BM_Classify)->DenseRange(0, 90, 15);

void BM_NormalizeCodim2(benchmark::State& state) {
    const Codim2Entry& e = codim2_catalog()[static_cast<std::size_t>(state.range(0))];
    StructureTensor t = scramble(codim2_tensor(e.abar), 4).tensor;
    state.SetLabel(e.name);
    for (auto _ : state) benchmark::DoNotOptimize(normalize_codim2(LieAlgebra(t)));
}
BENCHMARK(BM_NormalizeCodim2)->DenseRange(0, 4);

void BM_LieAlgebraSeries(benchmark::State& state) {
    StructureTensor t = scramble(build(ClassLabel::with_k(Family::G6p2k_2_2, 3)), 5).tensor;
    for (auto _ : state) benchmark::DoNotOptimize(LieAlgebra(t));
}
BENCHMARK(BM_LieAlgebraSeries);

}  // namespace

BENCHMARK_MAIN();
