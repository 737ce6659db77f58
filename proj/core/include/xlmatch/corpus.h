#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace xlmatch {

// The delimiter set used to split a raw value into components: newline, ",",
// "/", middle dot and ";".
std::vector<std::string> default_delimiters();

struct NormalizationOptions {
  std::vector<std::string> delimiters = default_delimiters();
};

// Splits a raw infobox value into normalized components. Markup is removed
// first, then the text is split on the delimiters and every piece is
// lowercased, trimmed and whitespace-collapsed. Empty pieces are dropped.
//
//   normalize_value("1963, Irlanda")         -> {"1963", "irlanda"}
//   normalize_value("John Lone / Joan Chen") -> {"john lone", "joan chen"}
std::vector<std::string> normalize_value(std::string_view raw,
                                         const NormalizationOptions& options = {});

struct AttributeValue {
  std::string name;  // normalized label
  std::string raw_value;
  std::vector<std::string> components;
  // Normalized titles of the articles the value links to.
  std::vector<std::string> links;
};

// An ordered set of attribute-value pairs. Adding a name that is already
// present merges the two entries (components and links are concatenated).
class Infobox {
 public:
  void add(AttributeValue value);

  const std::vector<AttributeValue>& pairs() const { return pairs_; }
  const AttributeValue* find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name) != nullptr; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

 private:
  std::vector<AttributeValue> pairs_;
};

struct CrossLink {
  std::string language;
  std::string target_id;

  auto operator<=>(const CrossLink&) const = default;
};

struct Article {
  std::string id;
  std::string language;
  std::string title;        // normalized
  std::string entity_type;  // normalized
  Infobox infobox;
  std::vector<CrossLink> cross_links;  // sorted, unique
};

struct LoadReport {
  std::size_t lines_read = 0;
  std::size_t articles_loaded = 0;
  std::size_t malformed = 0;
  std::size_t duplicate_ids = 0;
  std::size_t foreign_language = 0;
  std::size_t reciprocal_links_added = 0;
  std::size_t dangling_links = 0;
  // 1-based line numbers of every skipped record.
  std::vector<std::size_t> skipped_lines;

  std::size_t skipped() const {
    return malformed + duplicate_ids + foreign_language;
  }
};

// Immutable collection of articles, iterated in id order. Construction
// symmetrizes cross-language links between articles that are both present.
class Corpus {
 public:
  Corpus() = default;
  explicit Corpus(std::vector<Article> articles, LoadReport* report = nullptr);

  const std::vector<Article>& articles() const { return articles_; }
  const Article* find(std::string_view id) const;
  // Distinct languages in sorted order.
  std::vector<std::string> languages() const;
  std::size_t size() const { return articles_.size(); }
  bool empty() const { return articles_.empty(); }

 private:
  std::vector<Article> articles_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct LoadOptions {
  NormalizationOptions normalization;
  // The two languages of the run. When empty, the first two languages seen
  // in the file are used; records in any other language are skipped.
  std::vector<std::string> languages;
};

struct LoadResult {
  Corpus corpus;
  LoadReport report;
};

// Reads the line-delimited JSON corpus format. Malformed lines and duplicate
// ids are skipped and counted; only an unreadable file throws (IoError).
LoadResult load_corpus(const std::filesystem::path& path,
                       const LoadOptions& options = {});
LoadResult parse_corpus(std::istream& in, const LoadOptions& options = {});

}  // namespace xlmatch
