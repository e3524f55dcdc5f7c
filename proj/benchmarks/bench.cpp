#include <benchmark/benchmark.h>

#include "lpbc/ensconcement.hpp"
#include "lpbc/harness.hpp"
#include "lpbc/localization.hpp"
#include "lpbc/partial_meet.hpp"
#include "lpbc/semantics.hpp"

using namespace lpbc;

namespace {

Program prog(const std::string& text) { return parse_program(text).program; }

const Vocabulary kABC({"a", "b", "c"});

void bm_se_models(benchmark::State& state) {
    Program p = prog("a.\nb :- a.\nc :- not b.\n:- a, c.");
    for (auto _ : state) benchmark::DoNotOptimize(se_models(p, kABC));
}
BENCHMARK(bm_se_models);

void bm_answer_sets(benchmark::State& state) {
    Program p = prog("a ; b.\nc :- not a.\n:- b, c.");
    for (auto _ : state) benchmark::DoNotOptimize(answer_sets(p, kABC));
}
BENCHMARK(bm_answer_sets);

void bm_pm_revise(benchmark::State& state) {
    Program p = prog("a.\nb :- a.\nc :- not b.\n:- a, c.");
    Program q = prog(":- a.");
    SelectionPolicy full = SelectionPolicy::full_meet();
    for (auto _ : state) benchmark::DoNotOptimize(pm_revise(p, q, full));
}
BENCHMARK(bm_pm_revise);

void bm_ens_revise(benchmark::State& state) {
    Program p = prog("a.\nb :- a.\nc :- not b.");
    Program q = prog(":- a.");
    Ensconcement e = validate_ensconcement(
        p, {prog("a."), prog("b :- a.\nc :- not b.")}, kABC);
    for (auto _ : state) benchmark::DoNotOptimize(ens_revise(p, e, q));
}
BENCHMARK(bm_ens_revise);

void bm_localized_revise(benchmark::State& state) {
    Program p = prog("a.\nb :- a.\nc :- not b.\n:- a, c.");
    Program q = prog(":- a.");
    ChangeOperator op;
    op.kind = ChangeKind::Revision;
    op.apply = [](const Program& base, const Program& qq) {
        return pm_revise(base, qq, SelectionPolicy::full_meet());
    };
    for (auto _ : state) benchmark::DoNotOptimize(localized_change(p, op, q));
}
BENCHMARK(bm_localized_revise);

void bm_postulate_sweep(benchmark::State& state) {
    Corpus corpus = Corpus::standard();
    corpus.pool.resize(6);
    corpus.max_rules = 3;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            check_revision_postulates(HarnessOp::PmFullMeet, corpus));
}
BENCHMARK(bm_postulate_sweep);

}  // namespace

BENCHMARK_MAIN();
