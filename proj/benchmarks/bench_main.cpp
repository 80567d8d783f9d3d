#include <benchmark/benchmark.h>

#include "twisted_hecke/bosa.hpp"
#include "twisted_hecke/dloper.hpp"
#include "twisted_hecke/flagk.hpp"
#include "twisted_hecke/matschub.hpp"

using namespace th;

namespace {

WeylPtr G(const char* name) { return WeylGroup::make(RootSystem::parse(name)); }

Weight slope_for(const WeylGroup& W) {
    Weight l(static_cast<std::size_t>(W.system().dim()));
    for (std::size_t k = 0; k < l.size(); ++k) l[k] = QRat(static_cast<long>(3 * k + 1), 7 + 4 * static_cast<long>(k));
    return l;
}

void BM_mc_w0(benchmark::State& st, const char* name, Route route) {
    const WeylPtr W = G(name);
    const Weight l = slope_for(*W);
    for (auto _ : st) benchmark::DoNotOptimize(mc_cell(W, W->longest(), l, route));
}
BENCHMARK_CAPTURE(BM_mc_w0, A3_right, "A3", Route::Right);
BENCHMARK_CAPTURE(BM_mc_w0, A4_right, "A4", Route::Right);
BENCHMARK_CAPTURE(BM_mc_w0, A4_left, "A4", Route::Left);
BENCHMARK_CAPTURE(BM_mc_w0, G2_right, "G2", Route::Right);

void BM_lrr_w0(benchmark::State& st, const char* name) {
    const WeylPtr W = G(name);
    const Weight l = slope_for(*W);
    const Word word = W->normal_form(W->longest());
    for (auto _ : st) benchmark::DoNotOptimize(mc_via_lrr(W, word, l));
}
BENCHMARK_CAPTURE(BM_lrr_w0, A3, "A3");
BENCHMARK_CAPTURE(BM_lrr_w0, A4, "A4");

void BM_braid(benchmark::State& st, BraidForm form) {
    std::vector<QRat> p = {QRat(1, 3), QRat(-5, 4), QRat(2, 7)};
    if (form != BraidForm::A) p.pop_back();
    for (auto _ : st) benchmark::DoNotOptimize(verify_braid(form, p, Variant::Plain));
}
BENCHMARK_CAPTURE(BM_braid, A, BraidForm::A);
BENCHMARK_CAPTURE(BM_braid, C2, BraidForm::C2);
BENCHMARK_CAPTURE(BM_braid, G2, BraidForm::G2)->Unit(benchmark::kMillisecond);

void BM_matrix_w0(benchmark::State& st, Route route) {
    const WeylPtr W = G("A3");
    const Weight l = slope_for(*W);
    for (auto _ : st) benchmark::DoNotOptimize(mc_matrix(W, W->longest(), l, route));
}
BENCHMARK_CAPTURE(BM_matrix_w0, left, Route::Left)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_matrix_w0, right, Route::Right)->Unit(benchmark::kMillisecond);

void BM_kirwan_w0(benchmark::State& st) {
    const WeylPtr W = G("A3");
    const RatFunc f = mc_matrix(W, W->longest(), slope_for(*W)) / bb_factor(3);
    for (auto _ : st) benchmark::DoNotOptimize(kirwan(W, f));
}
BENCHMARK(BM_kirwan_w0)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
