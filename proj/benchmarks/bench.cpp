#include <benchmark/benchmark.h>

#include "rrbtk/bridge.hpp"
#include "rrbtk/cohomology.hpp"
#include "rrbtk/extension.hpp"

using namespace rrbtk;

namespace {

RRBGroup base_z2_id() {
    auto z2 = FiniteGroup::cyclic(2);
    auto phi = GroupAction::trivial(z2, z2, Variance::Hom);
    return RRBGroup::make(z2, z2, phi, {0, 1});
}

RRBModule trivial_module() {
    RRBGroup base = base_z2_id();
    RRBGroup coeff = base_z2_id();
    return RRBModule::trivial(base, coeff);
}

void bm_operator_enumeration_s3(benchmark::State& state) {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    GroupAction ad = GroupAction::adjoint(s3);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_rb_operators(s3, s3, ad));
}
BENCHMARK(bm_operator_enumeration_s3);

void bm_automorphism_group_s3(benchmark::State& state) {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(s3));
}
BENCHMARK(bm_automorphism_group_s3);

void bm_h2_smith(benchmark::State& state) {
    RRBModule m = trivial_module();
    for (auto _ : state) benchmark::DoNotOptimize(h2(m).order);
}
BENCHMARK(bm_h2_smith);

void bm_h2_enumeration(benchmark::State& state) {
    RRBModule m = trivial_module();
    for (auto _ : state) benchmark::DoNotOptimize(h_order_by_enumeration(m, 2));
}
BENCHMARK(bm_h2_enumeration);

void bm_extension_enumeration(benchmark::State& state) {
    RRBModule m = trivial_module();
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_ext(m).size());
}
BENCHMARK(bm_extension_enumeration);

void bm_ybe_check_z6(benchmark::State& state) {
    RRBGroup r = from_opposite(FiniteGroup::cyclic(6));
    SkewLeftBrace b = induced_brace(r);
    for (auto _ : state) benchmark::DoNotOptimize(ybe_solution(b).n);
}
BENCHMARK(bm_ybe_check_z6);

void bm_counterexample_p2(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(pi_non_surjectivity_check(2).rrb_extension_count);
}
BENCHMARK(bm_counterexample_p2);

}  // namespace

BENCHMARK_MAIN();
