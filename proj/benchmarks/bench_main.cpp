// Micro-benchmarks for the hot paths: series evaluation, word actions on the
// phi field, epsilon limits and matrix words.

#include <benchmark/benchmark.h>

#include "qgarnier/generators.hpp"
#include "qgarnier/perturb.hpp"
#include "qgarnier/qhyper.hpp"
#include "qgarnier/weyl_matrices.hpp"
#include "qgarnier/words.hpp"
#include "qgarnier/verify/sampling.hpp"

namespace {

using namespace qgarnier;
using namespace qgarnier::tok;

PhiState<ExactQ> seeded_phi(int n) {
    return PhiState<ExactQ>::generate(n, [](long j, long i) { return ExactQ(2 * j + i + 3) / ExactQ(j + 2 * i + 5); });
}

void BM_EvalX(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const long digits = state.range(1);
    const PrecisionScope prec(static_cast<unsigned>(digits + 15));
    const auto cp = verify::sample_cparams(1, n);
    const auto cfg = make_series_config(digits);
    for (auto _ : state) benchmark::DoNotOptimize(eval_x(cp, cfg));
}
BENCHMARK(BM_EvalX)->Args({1, 45})->Args({2, 45})->Args({2, 90})->Unit(benchmark::kMicrosecond);

void BM_ApplyFundamental(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto phi = seeded_phi(n);
    const GroupWord w = {r(0), s(1), pi(), sp(0), rho()};
    for (auto _ : state) benchmark::DoNotOptimize(apply_word(w, phi));
}
BENCHMARK(BM_ApplyFundamental)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

void BM_ApplyTauC(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto phi = seeded_phi(n);
    const GroupWord w = derived_word(tau_c(), n);
    for (auto _ : state) benchmark::DoNotOptimize(apply_word(w, phi));
    state.counters["tokens"] = static_cast<double>(w.size());
}
BENCHMARK(BM_ApplyTauC)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

void BM_PerturbLimit(benchmark::State& state) {
    const PerturbQ e = PerturbQ::eps();
    PerturbQ num = 1, den = 1;
    for (int k = 1; k <= state.range(0); ++k) {
        num *= PerturbQ::linear(ExactQ(k), ExactQ(1, k + 1));
        den *= PerturbQ::linear(ExactQ(k + 1), ExactQ(1, k + 2));
    }
    for (auto _ : state) benchmark::DoNotOptimize(limit_eps0(e * num / (e * den)));
}
BENCHMARK(BM_PerturbLimit)->Arg(2)->Arg(6)->Arg(12);

void BM_WordMatrix(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto cp = verify::sample_cparams(3, n);
    const GroupWord w = {tau_c(), sigma(), pi1(), sigmap()};
    for (auto _ : state) benchmark::DoNotOptimize(word_matrix(w, cp));
}
BENCHMARK(BM_WordMatrix)->DenseRange(1, 2)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
