#include <random>
#include <sstream>

#include <benchmark/benchmark.h>

#include "xlmatch/pipeline.h"
#include "xlmatch/synth.h"

namespace xlmatch {
namespace {

OccurrenceMatrix random_matrix(Eigen::Index rows, Eigen::Index cols) {
  std::mt19937_64 rng(1);
  std::bernoulli_distribution bit(0.3);
  Eigen::MatrixXd cells(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) cells(i, j) = bit(rng) ? 1.0 : 0.0;
  }
  std::vector<Side> sides(static_cast<std::size_t>(rows), Side::kLeft);
  for (std::size_t i = sides.size() / 2; i < sides.size(); ++i) sides[i] = Side::kRight;
  return OccurrenceMatrix(cells, sides);
}

void BM_TruncatedSvd(benchmark::State& state) {
  const auto rows = state.range(0);
  const auto m = random_matrix(rows, rows * 10);
  const auto f = default_rank(m.rows(), m.cols());
  for (auto _ : state) benchmark::DoNotOptimize(truncated_svd(m, f));
}
BENCHMARK(BM_TruncatedSvd)->Arg(20)->Arg(50)->Arg(100);

// Corpus for a noisy synthetic run with the given entity count.
struct Loaded {
  Corpus corpus;
  Prepared prepared;
};

Loaded load(std::size_t entities) {
  auto spec = SynthSpec::noisy(1);
  spec.n_entities = entities;
  std::istringstream in(generate(spec).corpus_jsonl);
  Loaded out{parse_corpus(in).corpus, {}};
  out.prepared = prepare(out.corpus, {});
  return out;
}

void BM_Prepare(benchmark::State& state) {
  auto spec = SynthSpec::noisy(1);
  spec.n_entities = static_cast<std::size_t>(state.range(0));
  std::istringstream in(generate(spec).corpus_jsonl);
  const auto corpus = parse_corpus(in).corpus;
  for (auto _ : state) benchmark::DoNotOptimize(prepare(corpus, {}));
}
BENCHMARK(BM_Prepare)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_ScoreAllPairs(benchmark::State& state) {
  const auto run = load(static_cast<std::size_t>(state.range(0)));
  const auto& signals = run.prepared.types.front().signals;
  for (auto _ : state) benchmark::DoNotOptimize(score_all_pairs(signals));
}
BENCHMARK(BM_ScoreAllPairs)->Arg(200);

void BM_Alignment(benchmark::State& state) {
  const auto run = load(static_cast<std::size_t>(state.range(0)));
  const auto& signals = run.prepared.types.front().signals;
  for (auto _ : state) benchmark::DoNotOptimize(attribute_alignment(signals, {}));
}
BENCHMARK(BM_Alignment)->Arg(200)->Arg(1000);

}  // namespace
}  // namespace xlmatch

BENCHMARK_MAIN();
