#include "xlmatch/pipeline.h"

#include <gtest/gtest.h>

#include "support/corpus_builder.h"
#include "xlmatch/errors.h"
#include "xlmatch/synth.h"

namespace xlmatch {
namespace {

TEST(Pipeline, LanguagesDefaultToSortedCorpusLanguages) {
  const auto corpus = testing::corpus_of(testing::frequency_fixture());
  const auto p = prepare(corpus, {});
  EXPECT_EQ(p.left_language, "en");
  EXPECT_EQ(p.right_language, "pt");
  ASSERT_EQ(p.types.size(), 1u);
  EXPECT_EQ(p.types[0].types, (TypePair{"actor", "ator"}));
  EXPECT_EQ(p.dual_count, 10u);
  EXPECT_EQ(p.types[0].groups.size(), 5u);
  EXPECT_EQ(p.types[0].frequencies.left.at("a1"), 6.0);
  EXPECT_EQ(p.types[0].frequencies.right.at("a'3"), 2.0);
}

TEST(Pipeline, ExplicitLanguagesSwapSides) {
  const auto corpus = testing::corpus_of(testing::frequency_fixture());
  RunConfig cfg;
  cfg.left_language = "pt";
  cfg.right_language = "en";
  const auto p = prepare(corpus, cfg);
  ASSERT_EQ(p.types.size(), 1u);
  EXPECT_EQ(p.types[0].types, (TypePair{"ator", "actor"}));
}

TEST(Pipeline, SameLanguageRejected) {
  const auto corpus = testing::corpus_of(testing::frequency_fixture());
  RunConfig cfg;
  cfg.left_language = cfg.right_language = "en";
  EXPECT_THROW(prepare(corpus, cfg), ParameterError);
}

TEST(Pipeline, EmptyCorpusHasNoTypes) {
  const auto p = prepare(Corpus(std::vector<Article>{}), {});
  EXPECT_TRUE(p.types.empty());
}

TEST(Pipeline, SvdRankClampedToMatrix) {
  const auto corpus = testing::corpus_of(testing::frequency_fixture());
  RunConfig cfg;
  cfg.alignment.svd_f = 100;
  const auto p = prepare(corpus, cfg);
  EXPECT_EQ(p.types[0].model.rank(), 5u);
}

TEST(Pipeline, EvaluateFrequencyFixture) {
  const auto corpus = testing::corpus_of(testing::frequency_fixture());
  const auto p = prepare(corpus, {});
  GroundTruth truth;
  const TypePair types{"actor", "ator"};
  truth.add(types, {"a1", "a'1"});
  truth.add(types, {"a1", "a'2"});
  truth.add(types, {"a2", "a'3"});
  const auto report = evaluate(p, {{types, {{"a1", "a'1"}, {"a2", "a'3"}}}}, truth, 0);
  EXPECT_EQ(report.weighted.precision, 1.0);
  EXPECT_NEAR(report.weighted.recall, 0.775, 1e-9);
  EXPECT_EQ(report.types[0].correct, 2u);
}

TEST(Pipeline, EvaluateMissingTypeThrows) {
  const auto corpus = testing::corpus_of(testing::frequency_fixture());
  const auto p = prepare(corpus, {});
  GroundTruth truth;
  truth.add({"film", "filme"}, {"a", "b"});
  EXPECT_THROW(evaluate(p, {}, truth, 0), EvaluationError);
  GroundTruth other;
  other.add({"actor", "ator"}, {"a1", "a'1"});
  EXPECT_THROW(evaluate(p, {}, other, 0), EvaluationError);
}

TEST(Pipeline, PresentTruthDropsAbsentAttributes) {
  const auto corpus = testing::corpus_of(testing::frequency_fixture());
  const auto p = prepare(corpus, {});
  const PairSet truth = {{"a1", "a'1"}, {"ghost", "a'1"}};
  EXPECT_EQ(present_truth(p.types[0], truth), (PairSet{{"a1", "a'1"}}));
}

TEST(Pipeline, CleanSyntheticRecovery) {
  const auto synth = generate(SynthSpec::clean(9));
  const auto corpus = testing::load(synth.corpus_jsonl).corpus;
  const RunConfig cfg;
  const auto report = run_and_evaluate(prepare(corpus, cfg), synth.truth, cfg);
  EXPECT_GE(report.weighted.f, 0.95);
  EXPECT_GT(report.map.lsi, report.map.random);
}

}  // namespace
}  // namespace xlmatch
