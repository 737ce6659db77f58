#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "xlmatch/corpus.h"

namespace xlmatch {

struct TypePair {
  std::string left;
  std::string right;

  auto operator<=>(const TypePair&) const = default;
  // "left|right", the form used in ground-truth files.
  std::string label() const { return left + "|" + right; }
};

struct TypeMatch {
  TypePair types;
  std::size_t support = 0;  // cross-links from left-typed into right-typed
  double fraction = 0.0;    // support / all resolvable cross-links of left
};

// A left type that did not qualify. best is empty when the type has no
// resolvable cross-link at all.
struct UnmappedType {
  std::string type;
  std::size_t links = 0;
  std::string best;
  std::size_t best_support = 0;
  double best_fraction = 0.0;
};

struct TypeMappingOptions {
  std::size_t min_support = 3;
  double min_fraction = 0.5;

  // Throws ParameterError unless min_support >= 1 and 0 < min_fraction <= 1.
  void validate() const;
};

// Partial function from left-language entity types to right-language types.
struct TypeMapping {
  std::string left_language;
  std::string right_language;
  std::vector<TypeMatch> matches;  // sorted by left type
  std::vector<UnmappedType> unmapped;

  const TypeMatch* find_left(std::string_view type) const;
  bool empty() const { return matches.empty(); }
};

// Counts cross-links from every left type into right types and keeps the
// argmax counterpart when both thresholds hold. Ties are broken by the
// lexicographically smallest right type.
TypeMapping match_entity_types(const Corpus& corpus,
                               std::string_view left_language,
                               std::string_view right_language,
                               const TypeMappingOptions& options = {});

// The typemap.json report.
std::string typemap_to_json(const TypeMapping& mapping);

}  // namespace xlmatch
