#include "xlmatch/dictionary.h"

#include <istream>
#include <ostream>

#include "xlmatch/errors.h"

namespace xlmatch {

void TranslationDictionary::insert(std::string source, std::string target) {
  entries_.insert_or_assign(std::move(source), std::move(target));
}

const std::string* TranslationDictionary::lookup(std::string_view source) const {
  const auto it = entries_.find(source);
  return it == entries_.end() ? nullptr : &it->second;
}

void TranslationDictionary::write_tsv(std::ostream& out) const {
  for (const auto& [source, target] : entries_) {
    out << source << '\t' << target << '\n';
  }
}

TranslationDictionary TranslationDictionary::read_tsv(std::istream& in,
                                                      std::string from,
                                                      std::string to) {
  TranslationDictionary dict(std::move(from), std::move(to));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw ParseError("dictionary line " + std::to_string(line_no) +
                       ": expected source<TAB>target");
    }
    dict.insert(line.substr(0, tab), line.substr(tab + 1));
  }
  return dict;
}

TranslationDictionary build_dictionary(const Corpus& corpus,
                                       std::string_view from,
                                       std::string_view to) {
  std::map<std::string, std::map<std::string, std::size_t>> votes;
  for (const auto& article : corpus.articles()) {
    if (article.language != from || article.title.empty()) continue;
    for (const auto& link : article.cross_links) {
      if (link.language != to) continue;
      const auto* target = corpus.find(link.target_id);
      if (target == nullptr || target->title.empty()) continue;
      ++votes[article.title][target->title];
    }
  }

  TranslationDictionary dict{std::string(from), std::string(to)};
  for (auto& [source, targets] : votes) {
    const std::string* best = nullptr;
    std::size_t best_count = 0;
    for (const auto& [target, count] : targets) {
      if (count > best_count) {
        best = &target;
        best_count = count;
      }
    }
    dict.insert(source, *best);
  }
  return dict;
}

TermVector translate_vector(const TermVector& values,
                            const TranslationDictionary& dictionary) {
  TermVector out;
  for (const auto& [component, tf] : values) {
    const auto* translated = dictionary.lookup(component);
    out[translated != nullptr ? *translated : component] += tf;
  }
  return out;
}

}  // namespace xlmatch
