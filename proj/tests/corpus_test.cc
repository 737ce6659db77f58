#include "xlmatch/corpus.h"

#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "support/corpus_builder.h"
#include "xlmatch/errors.h"

namespace xlmatch {
namespace {

using testing::Record;

TEST(NormalizeValue, SplitsOnDelimiters) {
  EXPECT_EQ(normalize_value("1963, Irlanda"), (std::vector<std::string>{"1963", "irlanda"}));
  EXPECT_EQ(normalize_value("John Lone / Joan Chen"),
            (std::vector<std::string>{"john lone", "joan chen"}));
  EXPECT_EQ(normalize_value("a; b\xC2\xB7" "c\nd"),
            (std::vector<std::string>{"a", "b", "c", "d"}));
}

TEST(NormalizeValue, EmptyInput) {
  EXPECT_TRUE(normalize_value("").empty());
  EXPECT_TRUE(normalize_value(" , ;").empty());
}

TEST(NormalizeValue, CustomDelimiters) {
  NormalizationOptions opts;
  opts.delimiters = {"|"};
  EXPECT_EQ(normalize_value("a, b|c", opts), (std::vector<std::string>{"a, b", "c"}));
}

TEST(NormalizeValue, BreakTagSplits) {
  EXPECT_EQ(normalize_value("Rome<br>Paris"), (std::vector<std::string>{"rome", "paris"}));
}

TEST(Infobox, DuplicateNamesMerge) {
  Infobox box;
  box.add({"born", "1950", {"1950"}, {}});
  box.add({"born", "Rome", {"rome"}, {"rome"}});
  ASSERT_EQ(box.size(), 1u);
  EXPECT_EQ(box.find("born")->components, (std::vector<std::string>{"1950", "rome"}));
  EXPECT_EQ(box.find("born")->links, (std::vector<std::string>{"rome"}));
}

TEST(Corpus, LoadsWellFormedRecords) {
  const auto r = testing::load(testing::to_jsonl({
      {"e1", "en", "Ireland", "country", {{"Capital", "Dublin"}}, {}},
      {"p1", "pt", "Irlanda", "país", {}, {{"en", "e1"}}},
  }));
  EXPECT_EQ(r.corpus.size(), 2u);
  EXPECT_EQ(r.report.skipped(), 0u);
  EXPECT_EQ(r.corpus.find("e1")->title, "ireland");
  EXPECT_TRUE(r.corpus.find("e1")->infobox.contains("capital"));
}

TEST(Corpus, AttributeNamesNormalized) {
  const auto c = testing::corpus_of({{"e1", "en", "X", "film", {{" Directed by ", "Y"}}, {}}});
  EXPECT_EQ(c.find("e1")->infobox.pairs()[0].name, "directed by");
}

TEST(Corpus, MalformedLineSkipped) {
  auto text = testing::to_jsonl({{"e1", "en", "A", "t", {}, {}}});
  text += "{not json\n";
  text += testing::to_jsonl({{"e2", "en", "B", "t", {}, {}}});
  const auto r = testing::load(text);
  EXPECT_EQ(r.corpus.size(), 2u);
  EXPECT_EQ(r.report.skipped(), 1u);
  EXPECT_EQ(r.report.malformed, 1u);
  ASSERT_EQ(r.report.skipped_lines.size(), 1u);
  EXPECT_EQ(r.report.skipped_lines[0], 2u);
}

TEST(Corpus, MissingFieldIsMalformed) {
  const auto r = testing::load(R"({"id":"e1","lang":"en","title":"A"})" "\n");
  EXPECT_EQ(r.corpus.size(), 0u);
  EXPECT_EQ(r.report.malformed, 1u);
}

TEST(Corpus, DuplicateIdKeepsFirst) {
  const auto r = testing::load(testing::to_jsonl({
      {"e1", "en", "First", "t", {}, {}},
      {"e1", "en", "Second", "t", {}, {}},
  }));
  EXPECT_EQ(r.corpus.size(), 1u);
  EXPECT_EQ(r.report.duplicate_ids, 1u);
  EXPECT_EQ(r.corpus.find("e1")->title, "first");
}

TEST(Corpus, ThirdLanguageSkipped) {
  const auto r = testing::load(testing::to_jsonl({
      {"e1", "en", "A", "t", {}, {}},
      {"p1", "pt", "A", "t", {}, {}},
      {"d1", "de", "A", "t", {}, {}},
  }));
  EXPECT_EQ(r.corpus.size(), 2u);
  EXPECT_EQ(r.report.foreign_language, 1u);
}

TEST(Corpus, FixedLanguages) {
  LoadOptions opts;
  opts.languages = {"en", "de"};
  const auto r = testing::load(testing::to_jsonl({
                                   {"e1", "en", "A", "t", {}, {}},
                                   {"p1", "pt", "A", "t", {}, {}},
                                   {"d1", "de", "A", "t", {}, {}},
                               }),
                               opts);
  EXPECT_EQ(r.corpus.languages(), (std::vector<std::string>{"de", "en"}));
}

TEST(Corpus, CrossLinksMadeReciprocal) {
  const auto r = testing::load(testing::to_jsonl({
      {"e1", "en", "A", "t", {}, {}},
      {"p1", "pt", "A", "t", {}, {{"en", "e1"}, {"en", "missing"}}},
  }));
  const auto& links = r.corpus.find("e1")->cross_links;
  ASSERT_EQ(links.size(), 1u);
  EXPECT_EQ(links[0].target_id, "p1");
  EXPECT_EQ(r.report.reciprocal_links_added, 1u);
  EXPECT_EQ(r.report.dangling_links, 1u);
}

TEST(Corpus, IterationOrderIndependentOfFileOrder) {
  const std::vector<Record> a = {{"b", "en", "B", "t", {}, {}}, {"a", "en", "A", "t", {}, {}}};
  const std::vector<Record> b = {{"a", "en", "A", "t", {}, {}}, {"b", "en", "B", "t", {}, {}}};
  const auto ca = testing::corpus_of(a);
  const auto cb = testing::corpus_of(b);
  ASSERT_EQ(ca.size(), cb.size());
  for (std::size_t i = 0; i < ca.size(); ++i) EXPECT_EQ(ca.articles()[i].id, cb.articles()[i].id);
  EXPECT_EQ(ca.articles()[0].id, "a");
}

TEST(Corpus, ExplicitLinksFieldAndMarkupLinks) {
  const auto r = testing::load(
      R"({"id":"e1","lang":"en","title":"A","type":"film","infobox":[)"
      R"({"name":"director","value":"[[Bernardo Bertolucci|Bertolucci]]","links":["Rome"]}]})"
      "\n");
  const auto* v = r.corpus.find("e1")->infobox.find("director");
  ASSERT_NE(v, nullptr);
  EXPECT_EQ(v->components, (std::vector<std::string>{"bertolucci"}));
  EXPECT_EQ(v->links, (std::vector<std::string>{"bernardo bertolucci", "rome"}));
}

TEST(Corpus, MissingFileThrows) {
  EXPECT_THROW(load_corpus("/nonexistent/corpus.jsonl"), IoError);
}

TEST(Corpus, LoadFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "xlmatch_corpus_test.jsonl";
  {
    std::ofstream out(path);
    out << testing::to_jsonl({{"e1", "en", "A", "t", {}, {}}});
  }
  EXPECT_EQ(load_corpus(path).corpus.size(), 1u);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace xlmatch
