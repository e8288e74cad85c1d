#include <hopfkit/analysis.hpp>
#include <hopfkit/characters.hpp>
#include <hopfkit/constructions.hpp>
#include <hopfkit/quotients.hpp>

#include <benchmark/benchmark.h>

using namespace hopfkit;

namespace {

const QTPair& double_of_s3() {
  static const QTPair qt = drinfeld_double(*group_algebra(FiniteGroup::symmetric(3)));
  return qt;
}

}  // namespace

static void BM_VerifyHopfAxioms(benchmark::State& state) {
  const HopfPtr h = group_algebra(FiniteGroup::cyclic(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(verify_hopf_axioms(*h).ok());
}
BENCHMARK(BM_VerifyHopfAxioms)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_VerifyHopfAxiomsAC2(benchmark::State& state) {
  const HopfPtr h = a_c2();
  for (auto _ : state) benchmark::DoNotOptimize(verify_hopf_axioms(*h).ok());
}
BENCHMARK(BM_VerifyHopfAxiomsAC2)->Unit(benchmark::kMillisecond);

static void BM_VerifyQtDoubleS3(benchmark::State& state) {
  const QTPair& qt = double_of_s3();
  for (auto _ : state) benchmark::DoNotOptimize(verify_qt(qt.hopf(), qt.r()).ok());
}
BENCHMARK(BM_VerifyQtDoubleS3)->Unit(benchmark::kMillisecond);

static void BM_CanonicalQuotientAC2(benchmark::State& state) {
  const QTPair qt = QTPair::make(a_c2(), a_c2_r_family(1, 2, 3, CycloScalar(4)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_quotient(qt).k);
}
BENCHMARK(BM_CanonicalQuotientAC2)->Unit(benchmark::kMillisecond);

static void BM_EnumerateQtGroup(benchmark::State& state) {
  const FiniteGroup g = FiniteGroup::builtin(state.range(0) == 0 ? "S3" : "Z7xZ3");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_qt_group(g).size());
}
BENCHMARK(BM_EnumerateQtGroup)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_CharactersDoubleS3(benchmark::State& state) {
  const QTPair& qt = double_of_s3();
  const CharacterHint hint{CharacterHint::Kind::Double, FiniteGroup::symmetric(3)};
  for (auto _ : state) benchmark::DoNotOptimize(characters(qt.hopf(), hint).characters.size());
}
BENCHMARK(BM_CharactersDoubleS3)->Unit(benchmark::kMillisecond);

static void BM_SMatrixDoubleS3(benchmark::State& state) {
  const QTPair& qt = double_of_s3();
  const CharacterSet chars = characters(qt.hopf(), {CharacterHint::Kind::Double, FiniteGroup::symmetric(3)});
  for (auto _ : state) benchmark::DoNotOptimize(s_matrix(qt, chars).nondegenerate);
}
BENCHMARK(BM_SMatrixDoubleS3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
