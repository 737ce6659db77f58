#include "xlmatch/corpus.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <optional>
#include <set>
#include <utility>

#include <nlohmann/json.hpp>

#include "xlmatch/errors.h"
#include "xlmatch/text.h"

namespace xlmatch {
namespace {

using nlohmann::json;

void append_unique(std::vector<std::string>* into, std::string value) {
  if (std::find(into->begin(), into->end(), value) == into->end()) {
    into->push_back(std::move(value));
  }
}

const std::string* string_field(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) return nullptr;
  return it->get_ptr<const std::string*>();
}

// Returns nullopt for any record that does not follow the corpus format.
std::optional<Article> parse_record(const json& obj,
                                    const NormalizationOptions& norm) {
  if (!obj.is_object()) return std::nullopt;
  const auto* id = string_field(obj, "id");
  const auto* lang = string_field(obj, "lang");
  const auto* title = string_field(obj, "title");
  const auto* type = string_field(obj, "type");
  if (id == nullptr || lang == nullptr || title == nullptr || type == nullptr) {
    return std::nullopt;
  }
  if (id->empty() || lang->empty()) return std::nullopt;

  Article article;
  article.id = *id;
  article.language = *lang;
  article.title = normalize_text(*title);
  article.entity_type = normalize_attribute_name(*type);

  if (const auto it = obj.find("infobox"); it != obj.end()) {
    if (!it->is_array()) return std::nullopt;
    for (const auto& entry : *it) {
      if (!entry.is_object()) return std::nullopt;
      const auto* name = string_field(entry, "name");
      if (name == nullptr) return std::nullopt;
      AttributeValue value;
      value.name = normalize_attribute_name(*name);
      if (value.name.empty()) continue;
      if (const auto v = entry.find("value"); v != entry.end()) {
        if (!v->is_string()) return std::nullopt;
        value.raw_value = v->get<std::string>();
      }
      value.components = normalize_value(value.raw_value, norm);
      for (auto& target : strip_markup(value.raw_value).link_targets) {
        append_unique(&value.links, std::move(target));
      }
      if (const auto links = entry.find("links"); links != entry.end()) {
        if (!links->is_array()) return std::nullopt;
        for (const auto& link : *links) {
          if (!link.is_string()) return std::nullopt;
          auto target = normalize_text(link.get<std::string>());
          if (!target.empty()) append_unique(&value.links, std::move(target));
        }
      }
      article.infobox.add(std::move(value));
    }
  }

  if (const auto it = obj.find("cross_links"); it != obj.end()) {
    if (!it->is_array()) return std::nullopt;
    for (const auto& link : *it) {
      if (!link.is_object()) return std::nullopt;
      const auto* link_lang = string_field(link, "lang");
      const auto* link_id = string_field(link, "id");
      if (link_lang == nullptr || link_id == nullptr) return std::nullopt;
      if (*link_lang == article.language || link_id->empty()) continue;
      article.cross_links.push_back({*link_lang, *link_id});
    }
  }
  return article;
}

}  // namespace

std::vector<std::string> default_delimiters() {
  return {"\n", ",", "/", "\xC2\xB7", ";"};
}

std::vector<std::string> normalize_value(std::string_view raw,
                                         const NormalizationOptions& options) {
  const auto stripped = strip_markup(raw);
  std::vector<std::string> components;
  for (const auto& piece : split_any(stripped.text, options.delimiters)) {
    auto component = normalize_text(piece);
    if (!component.empty()) components.push_back(std::move(component));
  }
  return components;
}

void Infobox::add(AttributeValue value) {
  for (auto& existing : pairs_) {
    if (existing.name != value.name) continue;
    if (!value.raw_value.empty()) {
      if (!existing.raw_value.empty()) existing.raw_value.push_back('\n');
      existing.raw_value += value.raw_value;
    }
    for (auto& c : value.components) existing.components.push_back(std::move(c));
    for (auto& l : value.links) append_unique(&existing.links, std::move(l));
    return;
  }
  pairs_.push_back(std::move(value));
}

const AttributeValue* Infobox::find(std::string_view name) const {
  for (const auto& pair : pairs_) {
    if (pair.name == name) return &pair;
  }
  return nullptr;
}

Corpus::Corpus(std::vector<Article> articles, LoadReport* report)
    : articles_(std::move(articles)) {
  std::sort(articles_.begin(), articles_.end(),
            [](const Article& a, const Article& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < articles_.size(); ++i) {
    index_.emplace(articles_[i].id, i);
  }

  // Collect the undirected edge set, then rebuild every article's link list
  // from it so both endpoints always agree.
  std::set<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::vector<CrossLink>> unresolved(articles_.size());
  std::size_t dangling = 0;
  for (std::size_t i = 0; i < articles_.size(); ++i) {
    for (const auto& link : articles_[i].cross_links) {
      const auto it = index_.find(link.target_id);
      if (it == index_.end() ||
          articles_[it->second].language != link.language) {
        unresolved[i].push_back(link);
        ++dangling;
        continue;
      }
      edges.emplace(i, it->second);
    }
  }
  std::size_t added = 0;
  for (const auto& [from, to] : edges) {
    if (!edges.contains({to, from})) ++added;
  }
  for (std::size_t i = 0; i < articles_.size(); ++i) {
    articles_[i].cross_links = std::move(unresolved[i]);
  }
  for (const auto& [from, to] : edges) {
    articles_[from].cross_links.push_back(
        {articles_[to].language, articles_[to].id});
    articles_[to].cross_links.push_back(
        {articles_[from].language, articles_[from].id});
  }
  for (auto& article : articles_) {
    auto& links = article.cross_links;
    std::sort(links.begin(), links.end());
    links.erase(std::unique(links.begin(), links.end()), links.end());
  }
  if (report != nullptr) {
    report->reciprocal_links_added += added;
    report->dangling_links += dangling;
  }
}

const Article* Corpus::find(std::string_view id) const {
  const auto it = index_.find(std::string(id));
  return it == index_.end() ? nullptr : &articles_[it->second];
}

std::vector<std::string> Corpus::languages() const {
  std::set<std::string> langs;
  for (const auto& a : articles_) langs.insert(a.language);
  return {langs.begin(), langs.end()};
}

LoadResult parse_corpus(std::istream& in, const LoadOptions& options) {
  LoadReport report;
  std::vector<Article> articles;
  std::set<std::string> seen_ids;
  std::vector<std::string> languages = options.languages;
  const bool fixed_languages = !languages.empty();

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ++report.lines_read;

    std::optional<Article> article;
    try {
      article = parse_record(json::parse(line), options.normalization);
    } catch (const json::exception&) {
      article.reset();
    }
    if (!article) {
      ++report.malformed;
      report.skipped_lines.push_back(line_no);
      continue;
    }
    const bool known = std::find(languages.begin(), languages.end(),
                                 article->language) != languages.end();
    if (!known) {
      if (fixed_languages || languages.size() >= 2) {
        ++report.foreign_language;
        report.skipped_lines.push_back(line_no);
        continue;
      }
      languages.push_back(article->language);
    }
    if (!seen_ids.insert(article->id).second) {
      ++report.duplicate_ids;
      report.skipped_lines.push_back(line_no);
      continue;
    }
    articles.push_back(std::move(*article));
  }
  report.articles_loaded = articles.size();
  Corpus corpus(std::move(articles), &report);
  return {std::move(corpus), std::move(report)};
}

LoadResult load_corpus(const std::filesystem::path& path,
                       const LoadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus file: " + path.string());
  auto result = parse_corpus(in, options);
  if (in.bad()) throw IoError("error while reading corpus file: " + path.string());
  return result;
}

}  // namespace xlmatch
