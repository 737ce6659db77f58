#include "xlmatch/dictionary.h"

#include <sstream>

#include <gtest/gtest.h>

#include "support/corpus_builder.h"
#include "xlmatch/errors.h"

namespace xlmatch {
namespace {

TEST(Dictionary, EntryFromCrossLink) {
  const auto c = testing::corpus_of({
      {"pt1", "pt", "Irlanda", "país", {}, {{"en", "en1"}}},
      {"en1", "en", "Ireland", "country", {}, {}},
  });
  const auto d = build_dictionary(c, "pt", "en");
  ASSERT_EQ(d.size(), 1u);
  ASSERT_NE(d.lookup("irlanda"), nullptr);
  EXPECT_EQ(*d.lookup("irlanda"), "ireland");
  EXPECT_EQ(d.from(), "pt");
  EXPECT_EQ(d.to(), "en");
}

TEST(Dictionary, ReverseDirection) {
  const auto c = testing::corpus_of({
      {"pt1", "pt", "Irlanda", "país", {}, {{"en", "en1"}}},
      {"en1", "en", "Ireland", "country", {}, {}},
  });
  const auto d = build_dictionary(c, "en", "pt");
  ASSERT_NE(d.lookup("ireland"), nullptr);
  EXPECT_EQ(*d.lookup("ireland"), "irlanda");
}

TEST(Dictionary, NoCrossLinksEmpty) {
  const auto c = testing::corpus_of({
      {"pt1", "pt", "Irlanda", "país", {}, {}},
      {"en1", "en", "Ireland", "country", {}, {}},
  });
  EXPECT_TRUE(build_dictionary(c, "pt", "en").empty());
}

TEST(Dictionary, MajorityTarget) {
  const auto c = testing::corpus_of({
      {"pt1", "pt", "Mercúrio", "t", {}, {{"en", "planet"}}},
      {"pt2", "pt", "Mercúrio", "t", {}, {{"en", "planet"}}},
      {"pt3", "pt", "Mercúrio", "t", {}, {{"en", "element"}}},
      {"planet", "en", "Mercury (planet)", "t", {}, {}},
      {"element", "en", "Mercury (element)", "t", {}, {}},
  });
  const auto d = build_dictionary(c, "pt", "en");
  ASSERT_NE(d.lookup("mercúrio"), nullptr);
  EXPECT_EQ(*d.lookup("mercúrio"), "mercury (planet)");
}

TEST(Dictionary, TieGoesToSmallestTarget) {
  const auto c = testing::corpus_of({
      {"pt1", "pt", "Mercúrio", "t", {}, {{"en", "planet"}}},
      {"pt2", "pt", "Mercúrio", "t", {}, {{"en", "element"}}},
      {"planet", "en", "Mercury (planet)", "t", {}, {}},
      {"element", "en", "Mercury (element)", "t", {}, {}},
  });
  EXPECT_EQ(*build_dictionary(c, "pt", "en").lookup("mercúrio"), "mercury (element)");
}

TEST(Dictionary, TsvRoundTrip) {
  TranslationDictionary d("pt", "en");
  d.insert("irlanda", "ireland");
  d.insert("estados unidos", "united states");
  std::stringstream s;
  d.write_tsv(s);
  EXPECT_EQ(s.str(), "estados unidos\tunited states\nirlanda\tireland\n");
  const auto back = TranslationDictionary::read_tsv(s, "pt", "en");
  EXPECT_EQ(back.entries(), d.entries());
}

TEST(Dictionary, TsvRejectsBadLine) {
  std::istringstream s("no tab here\n");
  EXPECT_THROW(TranslationDictionary::read_tsv(s, "pt", "en"), ParseError);
}

TEST(Dictionary, InsertReplaces) {
  TranslationDictionary d("pt", "en");
  d.insert("a", "b");
  d.insert("a", "c");
  EXPECT_EQ(d.size(), 1u);
  EXPECT_EQ(*d.lookup("a"), "c");
}

TEST(TranslateVector, Example) {
  TranslationDictionary d("pt", "en");
  d.insert("1963 irlanda", "1963 ireland");
  d.insert("18 de dezembro 1950", "december 18 1950");
  d.insert("estados unidos", "united states");
  const TermVector v{{"1963 irlanda", 1}, {"18 de dezembro 1950", 1}, {"estados unidos", 1}};
  const TermVector expected{{"1963 ireland", 1}, {"december 18 1950", 1}, {"united states", 1}};
  EXPECT_EQ(translate_vector(v, d), expected);
}

TEST(TranslateVector, EmptyDictionaryIdentity) {
  const TermVector v{{"a", 1}, {"b", 3}};
  EXPECT_EQ(translate_vector(v, TranslationDictionary("pt", "en")), v);
}

TEST(TranslateVector, FixedPoint) {
  TranslationDictionary d("pt", "en");
  d.insert("paris", "paris");
  const TermVector v{{"paris", 2}};
  EXPECT_EQ(translate_vector(v, d), v);
}

TEST(TranslateVector, CollisionsSumFrequencies) {
  TranslationDictionary d("pt", "en");
  d.insert("eua", "united states");
  const TermVector v{{"eua", 1}, {"united states", 2}};
  const auto t = translate_vector(v, d);
  ASSERT_EQ(t.size(), 1u);
  EXPECT_DOUBLE_EQ(t.at("united states"), 3.0);
  EXPECT_DOUBLE_EQ(total_mass(t), total_mass(v));
}

}  // namespace
}  // namespace xlmatch
