#include "xlmatch/synth.h"

#include <gtest/gtest.h>

#include "support/corpus_builder.h"
#include "xlmatch/errors.h"
#include "xlmatch/pipeline.h"

namespace xlmatch {
namespace {

double measured_overlap(const SynthSpec& spec, std::size_t* duals = nullptr) {
  const auto synth = generate(spec);
  const auto corpus = testing::load(synth.corpus_jsonl).corpus;
  const auto prepared = prepare(corpus, {});
  double sum = 0;
  std::size_t n = 0;
  for (const auto& ctx : prepared.types) {
    const auto* truth = synth.truth.find(ctx.types);
    if (truth == nullptr) continue;
    sum += mean_overlap(ctx.duals, *truth) * static_cast<double>(ctx.duals.size());
    n += ctx.duals.size();
  }
  if (duals != nullptr) *duals = n;
  return n == 0 ? 0.0 : sum / static_cast<double>(n);
}

TEST(Synth, SameSeedSameBytes) {
  const auto a = generate(SynthSpec::noisy(11));
  const auto b = generate(SynthSpec::noisy(11));
  EXPECT_EQ(a.corpus_jsonl, b.corpus_jsonl);
  std::ostringstream ta, tb;
  a.truth.write_tsv(ta);
  b.truth.write_tsv(tb);
  EXPECT_EQ(ta.str(), tb.str());
  EXPECT_NE(generate(SynthSpec::noisy(12)).corpus_jsonl, a.corpus_jsonl);
}

TEST(Synth, CleanCorpusHasParallelSchemas) {
  std::size_t duals = 0;
  EXPECT_DOUBLE_EQ(measured_overlap(SynthSpec::clean(5), &duals), 1.0);
  EXPECT_EQ(duals, 200u);
}

TEST(Synth, OverlapKnobMeasured) {
  auto spec = SynthSpec::clean(5);
  spec.schema_overlap = 0.4;
  std::size_t duals = 0;
  const double o = measured_overlap(spec, &duals);
  EXPECT_GE(duals, 200u);
  EXPECT_NEAR(o, 0.4, 0.05);
}

TEST(Synth, CleanTruthHasEverySet) {
  const auto synth = generate(SynthSpec::clean(2));
  EXPECT_EQ(synth.truth.size(), 10u);
  EXPECT_EQ(synth.left_language, "xa");
  const auto corpus = testing::load(synth.corpus_jsonl).corpus;
  EXPECT_EQ(corpus.languages(), (std::vector<std::string>{"xa", "xb"}));
}

TEST(Synth, SeveralTypes) {
  auto spec = SynthSpec::clean(3);
  spec.n_types = 3;
  spec.n_entities = 50;
  const auto synth = generate(spec);
  EXPECT_EQ(synth.truth.by_type().size(), 3u);
}

TEST(Synth, Validation) {
  auto bad = SynthSpec::clean();
  bad.presence = 1.5;
  EXPECT_THROW(bad.validate(), ParameterError);
  bad = SynthSpec::clean();
  bad.n_entities = 0;
  EXPECT_THROW(generate(bad), ParameterError);
  bad = SynthSpec::clean();
  bad.blocks = 11;
  EXPECT_THROW(bad.validate(), ParameterError);
  bad = SynthSpec::clean();
  bad.extra_attributes = 31;
  EXPECT_THROW(bad.validate(), ParameterError);
  EXPECT_NO_THROW(SynthSpec::noisy().validate());
}

}  // namespace
}  // namespace xlmatch
