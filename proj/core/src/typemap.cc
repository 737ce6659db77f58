#include "xlmatch/typemap.h"

#include <map>

#include <nlohmann/json.hpp>

#include "xlmatch/errors.h"

namespace xlmatch {

void TypeMappingOptions::validate() const {
  if (min_support < 1) {
    throw ParameterError("min_type_support must be at least 1");
  }
  if (!(min_fraction > 0.0 && min_fraction <= 1.0)) {
    throw ParameterError("min_type_fraction must be in (0, 1]");
  }
}

const TypeMatch* TypeMapping::find_left(std::string_view type) const {
  for (const auto& m : matches) {
    if (m.types.left == type) return &m;
  }
  return nullptr;
}

TypeMapping match_entity_types(const Corpus& corpus,
                               std::string_view left_language,
                               std::string_view right_language,
                               const TypeMappingOptions& options) {
  options.validate();
  TypeMapping mapping;
  mapping.left_language = std::string(left_language);
  mapping.right_language = std::string(right_language);

  // left type -> right type -> link count; std::map keeps the iteration
  // order lexicographic, which gives the tie-break for free.
  std::map<std::string, std::map<std::string, std::size_t>> counts;
  std::map<std::string, std::size_t> totals;
  for (const auto& article : corpus.articles()) {
    if (article.language != left_language) continue;
    totals.try_emplace(article.entity_type, 0);
    for (const auto& link : article.cross_links) {
      if (link.language != right_language) continue;
      const auto* target = corpus.find(link.target_id);
      if (target == nullptr) continue;
      ++counts[article.entity_type][target->entity_type];
      ++totals[article.entity_type];
    }
  }

  for (const auto& [type, total] : totals) {
    UnmappedType candidate{type, total, {}, 0, 0.0};
    if (const auto it = counts.find(type); it != counts.end()) {
      for (const auto& [right, n] : it->second) {
        if (n > candidate.best_support) {
          candidate.best = right;
          candidate.best_support = n;
        }
      }
      candidate.best_fraction =
          static_cast<double>(candidate.best_support) / static_cast<double>(total);
    }
    if (!candidate.best.empty() && candidate.best_support >= options.min_support &&
        candidate.best_fraction >= options.min_fraction) {
      mapping.matches.push_back({{type, candidate.best},
                                 candidate.best_support,
                                 candidate.best_fraction});
    } else {
      mapping.unmapped.push_back(std::move(candidate));
    }
  }
  return mapping;
}

std::string typemap_to_json(const TypeMapping& mapping) {
  nlohmann::ordered_json doc;
  doc["left_language"] = mapping.left_language;
  doc["right_language"] = mapping.right_language;
  auto& pairs = doc["pairs"] = nlohmann::ordered_json::array();
  for (const auto& m : mapping.matches) {
    pairs.push_back({{"type_left", m.types.left},
                     {"type_right", m.types.right},
                     {"support", m.support},
                     {"fraction", m.fraction}});
  }
  auto& unmapped = doc["unmapped"] = nlohmann::ordered_json::array();
  for (const auto& u : mapping.unmapped) {
    unmapped.push_back({{"type", u.type},
                        {"links", u.links},
                        {"best", u.best},
                        {"best_support", u.best_support},
                        {"best_fraction", u.best_fraction}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace xlmatch
