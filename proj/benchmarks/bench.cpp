#include <benchmark/benchmark.h>

#include "grouplarge/ball.hpp"
#include "grouplarge/filtration.hpp"
#include "grouplarge/free_partitions.hpp"
#include "grouplarge/verifier.hpp"

using namespace grouplarge;

namespace {

void BM_ball_enumeration(benchmark::State& state) {
  const Alphabet f2 = Alphabet::of_rank(2);
  const int radius = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_in_ball(f2, radius, [&](const Word&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(ball_size(2, radius)));
}
BENCHMARK(BM_ball_enumeration)->Arg(6)->Arg(8)->Arg(10);

void BM_reduce_mul(benchmark::State& state) {
  const auto ball = enumerate_ball(Alphabet::of_rank(2), 6);
  std::size_t i = 0, j = ball.size() / 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mul(ball[i], ball[j]));
    i = (i + 1) % ball.size();
    j = (j + 7) % ball.size();
  }
}
BENCHMARK(BM_reduce_mul);

void BM_left_coverage(benchmark::State& state) {
  const PartitionScheme scheme = letter3_scheme(Alphabet::of_rank(2));
  const auto domain = enumerate_ball(scheme.alphabet, static_cast<int>(state.range(0)));
  const std::function<bool(const Word&)> member = [&scheme](const Word& g) {
    return scheme.coverage_member({CellTag::Letter, 0}, Side::Left, g);
  };
  const auto witness = scheme.witness({CellTag::Letter, 0}, Side::Left);
  for (auto _ : state) {
    const auto rec = check_left_coverage<Word>(witness, member, domain, word_ops());
    benchmark::DoNotOptimize(rec.failure_count);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(domain.size() * witness.size()));
}
BENCHMARK(BM_left_coverage)->Arg(6)->Arg(8);

void BM_canonical_rep(benchmark::State& state) {
  const DirectSumModel model(4, 9);
  const auto carrier = model.carrier();
  for (auto _ : state) {
    for (const auto g : carrier) benchmark::DoNotOptimize(canonical_rep(model, g).g1);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(carrier.size()));
}
BENCHMARK(BM_canonical_rep);

void BM_filtration_verify(benchmark::State& state) {
  const DirectSumModel model(3, static_cast<int>(state.range(0)));
  const auto pi = default_pi(model);
  for (auto _ : state) {
    const auto report = verify_theorem21(model, pi, 1);
    benchmark::DoNotOptimize(report.coverage.size());
  }
}
BENCHMARK(BM_filtration_verify)->Arg(5)->Arg(7);

}  // namespace

BENCHMARK_MAIN();
