#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Core>

#include "xlmatch/corpus.h"
#include "xlmatch/dictionary.h"
#include "xlmatch/dual_infobox.h"
#include "xlmatch/term_vector.h"

namespace xlmatch {

// Which half of a dual infobox an attribute comes from.
enum class Side : std::uint8_t { kLeft = 0, kRight = 1 };

std::string_view side_name(Side side);

struct AttributeKey {
  Side side = Side::kLeft;
  std::string name;

  auto operator<=>(const AttributeKey&) const = default;
};

// All occurrences of one attribute label within a type pair and language.
struct AttributeGroup {
  AttributeKey key;
  std::string language;
  TermVector values;  // component -> tf
  TermVector links;   // canonical entity id -> tf
  std::size_t occurrences = 0;  // infoboxes containing the attribute

  const std::string& name() const { return key.name; }
  Side side() const { return key.side; }
};

// Canonical entity ids for link targets: connected components of the
// cross-language link graph, with articles that share a title in the same
// language merged. Targets that resolve to no article become singleton
// clusters keyed by (language, title).
class EntityClusters {
 public:
  EntityClusters() = default;
  explicit EntityClusters(const Corpus& corpus);

  std::string canonical(std::string_view language, std::string_view title) const;
  std::size_t cluster_count() const { return cluster_count_; }

 private:
  std::unordered_map<std::string, std::string> by_title_;
  std::size_t cluster_count_ = 0;
};

// One group per (side, name), sorted by side then name. Value vectors and
// link sets are accumulated over every infobox of the duals.
std::vector<AttributeGroup> build_attribute_groups(
    std::span<const DualInfobox> duals, const EntityClusters& clusters);

// Cosine of the translated value vectors. For a cross-language pair the
// vector on the dictionary's source language is translated first; a
// same-language pair is compared directly. Throws ParameterError when the
// dictionary covers neither language of a cross-language pair.
double vsim(const AttributeGroup& a, const AttributeGroup& b,
            const TranslationDictionary& dictionary);

// Cosine of the canonicalized link frequency vectors.
double lsim(const AttributeGroup& a, const AttributeGroup& b);

// Binary attribute x dual-infobox matrix plus the pairwise co-occurrence
// counts derived from it.
class OccurrenceMatrix {
 public:
  OccurrenceMatrix() = default;
  // cells must be 0/1; sides gives the language side of each row.
  OccurrenceMatrix(Eigen::MatrixXd cells, std::vector<Side> sides);

  static OccurrenceMatrix build(std::span<const DualInfobox> duals,
                                std::span<const AttributeGroup> groups);

  std::size_t rows() const { return static_cast<std::size_t>(cells_.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(cells_.cols()); }
  const Eigen::MatrixXd& cells() const { return cells_; }
  Side side(std::size_t row) const { return sides_[row]; }

  // O_p: number of duals containing attribute p.
  std::size_t occurrences(std::size_t p) const;
  // O_pq: number of duals containing both p and q.
  std::size_t co_occurrences(std::size_t p, std::size_t q) const;
  bool co_occur(std::size_t p, std::size_t q) const {
    return co_occurrences(p, q) > 0;
  }

 private:
  Eigen::MatrixXd cells_;
  Eigen::MatrixXd co_;
  std::vector<Side> sides_;
};

enum class CorrelationVariant { kX1, kX2, kX3 };

// Count-based correlation alternatives:
//   X1 = O_pq
//   X2 = (1 + O_pq/O_p)(1 + O_pq/O_q)
//   X3 = O_pq^2 / (O_p + O_q)
double correlation_x(const OccurrenceMatrix& matrix, std::size_t p,
                     std::size_t q, CorrelationVariant variant);

// g(p, q) = O_pq / min(O_p, O_q).
double grouping_score(const OccurrenceMatrix& matrix, std::size_t p,
                      std::size_t q);

}  // namespace xlmatch
