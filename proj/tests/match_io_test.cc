#include "xlmatch/match_io.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "support/table_signals.h"
#include "xlmatch/errors.h"
#include "xlmatch/file_util.h"

namespace xlmatch {
namespace {

TEST(MatchIo, RoundTripAndProvenance) {
  const auto s = testing::actor_signals();
  const auto r = attribute_alignment(s, {});
  const auto text = matches_to_json(r.matches, s, "en", "pt");
  const auto doc = nlohmann::json::parse(text);
  ASSERT_EQ(doc.size(), 3u);
  // Sorted by member lists: born~nascimento first.
  EXPECT_EQ(doc[0]["members"][0]["attribute"], "born");
  EXPECT_EQ(doc[0]["members"][0]["lang"], "en");
  EXPECT_EQ(doc[0]["provenance"][0]["phase"], "certain");
  EXPECT_DOUBLE_EQ(doc[0]["provenance"][0]["lsi"].get<double>(), 0.99);

  std::istringstream in(text);
  const auto members = read_matches_json(in, "en", "pt");
  ASSERT_EQ(members.size(), 3u);
  EXPECT_EQ(members[1].size(), 3u);
  EXPECT_EQ(members[1][0], (AttributeKey{Side::kLeft, "died"}));
}

TEST(MatchIo, StableOutput) {
  const auto s = testing::actor_signals();
  EXPECT_EQ(matches_to_json(attribute_alignment(s, {}).matches, s, "en", "pt"),
            matches_to_json(attribute_alignment(s, {}).matches, s, "en", "pt"));
}

TEST(MatchIo, RejectsForeignLanguageAndBadShape) {
  std::istringstream foreign(R"([{"members":[{"lang":"de","attribute":"x"}]}])");
  EXPECT_THROW(read_matches_json(foreign, "en", "pt"), ParseError);
  std::istringstream not_array(R"({"members":[]})");
  EXPECT_THROW(read_matches_json(not_array, "en", "pt"), ParseError);
  std::istringstream broken("[");
  EXPECT_THROW(read_matches_json(broken, "en", "pt"), ParseError);
}

TEST(MatchIo, ManifestRoundTrip) {
  Manifest m{"en", "pt", {{{"actor", "ator"}, "matches_actor__ator.json", 3}}};
  std::istringstream in(manifest_to_json(m));
  const auto back = read_manifest(in);
  EXPECT_EQ(back.left_language, "en");
  ASSERT_EQ(back.entries.size(), 1u);
  EXPECT_EQ(back.entries[0].types, (TypePair{"actor", "ator"}));
  EXPECT_EQ(back.entries[0].matches, 3u);
  std::istringstream bad(R"({"left_language":"en"})");
  EXPECT_THROW(read_manifest(bad), ParseError);
}

TEST(MatchIo, FileNamesAreSafe) {
  EXPECT_EQ(match_file_name({"actor", "ator"}), "matches_actor__ator.json");
  EXPECT_EQ(match_file_name({"tv show", "série/tv"}), "matches_tv_show__s__rie_tv.json");
}

TEST(FileUtil, AtomicWriteAndRead) {
  const auto path = std::filesystem::temp_directory_path() / "xlmatch_file_util_test.txt";
  write_file_atomic(path, "one");
  write_file_atomic(path, "two");
  EXPECT_EQ(read_file(path), "two");
  std::filesystem::remove(path);
  EXPECT_THROW(read_file(path), IoError);
  EXPECT_THROW(write_file_atomic("/nonexistent/dir/x", "a"), IoError);
}

}  // namespace
}  // namespace xlmatch
