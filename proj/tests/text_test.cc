#include "xlmatch/text.h"

#include <gtest/gtest.h>

namespace xlmatch {
namespace {

TEST(Text, LowercasesAsciiAndLatin1) {
  EXPECT_EQ(to_lower_utf8("Directed BY"), "directed by");
  EXPECT_EQ(to_lower_utf8("CÔNJUGE"), "cônjuge");
  EXPECT_EQ(to_lower_utf8("ÉTAT"), "état");
}

TEST(Text, LowercasesGreekAndCyrillic) {
  EXPECT_EQ(to_lower_utf8("ΑΒΓ"), "αβγ");
  EXPECT_EQ(to_lower_utf8("МОСКВА"), "москва");
}

TEST(Text, CollapsesWhitespace) {
  EXPECT_EQ(collapse_whitespace("  a \t b\n\nc  "), "a b c");
  EXPECT_EQ(collapse_whitespace(""), "");
}

TEST(Text, NormalizeText) {
  EXPECT_EQ(normalize_text("  Estados   Unidos "), "estados unidos");
}

TEST(Text, AttributeNamesDropTrailingColon) {
  EXPECT_EQ(normalize_attribute_name("Born:"), "born");
  EXPECT_EQ(normalize_attribute_name(" Directed by "), "directed by");
}

TEST(Text, StripMarkupKeepsAnchorsAndCollectsTargets) {
  const auto m = strip_markup("[[Bernardo Bertolucci|Bertolucci]] and [[Rome]]");
  EXPECT_EQ(m.text, "Bertolucci and Rome");
  ASSERT_EQ(m.link_targets.size(), 2u);
  EXPECT_EQ(m.link_targets[0], "bernardo bertolucci");
  EXPECT_EQ(m.link_targets[1], "rome");
}

TEST(Text, StripMarkupTemplatesTagsAndQuotes) {
  EXPECT_EQ(strip_markup("{{birth date|1950|12|18}}").text, "1950 12 18");
  EXPECT_EQ(strip_markup("a<br>b").text, "a\nb");
  EXPECT_EQ(strip_markup("a<br/>b").text, "a\nb");
  EXPECT_EQ(strip_markup("<small>x</small>").text, "x");
  EXPECT_EQ(strip_markup("'''bold'''").text, "bold");
}

TEST(Text, StripMarkupNested) {
  const auto m = strip_markup("{{nowrap|[[Rome|Roma]]}}");
  EXPECT_EQ(m.text, "Roma");
  ASSERT_EQ(m.link_targets.size(), 1u);
  EXPECT_EQ(m.link_targets[0], "rome");
}

TEST(Text, SplitAnyKeepsEmptyPieces) {
  const auto parts = split_any("a,,b;c", {",", ";"});
  ASSERT_EQ(parts.size(), 4u);
  EXPECT_EQ(parts[1], "");
  EXPECT_EQ(parts[3], "c");
}

TEST(Text, SplitAnyMultiByteDelimiter) {
  const auto parts = split_any("a\xC2\xB7" "b", {"\xC2\xB7"});
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], "a");
  EXPECT_EQ(parts[1], "b");
}

}  // namespace
}  // namespace xlmatch
