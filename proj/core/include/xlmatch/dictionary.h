#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "xlmatch/corpus.h"
#include "xlmatch/term_vector.h"

namespace xlmatch {

// Title translation table from one language to another, derived from
// cross-language links. Keys and values are normalized like value
// components; each key has exactly one translation.
class TranslationDictionary {
 public:
  TranslationDictionary() = default;
  TranslationDictionary(std::string from, std::string to)
      : from_(std::move(from)), to_(std::move(to)) {}

  const std::string& from() const { return from_; }
  const std::string& to() const { return to_; }

  // Replaces any existing translation of source.
  void insert(std::string source, std::string target);
  const std::string* lookup(std::string_view source) const;

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::map<std::string, std::string, std::less<>>& entries() const {
    return entries_;
  }

  // "source<TAB>target" lines sorted by source.
  void write_tsv(std::ostream& out) const;
  // Throws ParseError on a line without exactly one tab.
  static TranslationDictionary read_tsv(std::istream& in, std::string from,
                                        std::string to);

 private:
  std::string from_;
  std::string to_;
  std::map<std::string, std::string, std::less<>> entries_;
};

// One entry per cross-language link from a `from` article to a `to` article.
// A title with several targets keeps the most frequent one; ties go to the
// lexicographically smallest target.
TranslationDictionary build_dictionary(const Corpus& corpus,
                                       std::string_view from,
                                       std::string_view to);

// Replaces every component found in the dictionary by its translation.
// Components that collide after translation have their frequencies summed,
// so the total mass is preserved.
TermVector translate_vector(const TermVector& values,
                            const TranslationDictionary& dictionary);

}  // namespace xlmatch
