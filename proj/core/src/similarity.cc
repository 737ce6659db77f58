#include "xlmatch/similarity.h"

#include <algorithm>
#include <map>
#include <numeric>

#include "xlmatch/errors.h"

namespace xlmatch {
namespace {

std::string title_key(std::string_view language, std::string_view title) {
  std::string key;
  key.reserve(language.size() + title.size() + 1);
  key.append(language);
  key.push_back('\x1f');
  key.append(title);
  return key;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // The smaller root wins, so every root is the smallest index of its set.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

void accumulate(const AttributeValue& value, const std::string& language,
                const EntityClusters& clusters, AttributeGroup* group) {
  for (const auto& component : value.components) group->values[component] += 1.0;
  for (const auto& target : value.links) {
    group->links[clusters.canonical(language, target)] += 1.0;
  }
  ++group->occurrences;
}

}  // namespace

std::string_view side_name(Side side) {
  return side == Side::kLeft ? "left" : "right";
}

EntityClusters::EntityClusters(const Corpus& corpus) {
  const auto& articles = corpus.articles();
  DisjointSets sets(articles.size());
  std::unordered_map<std::string, std::size_t> first_with_title;
  std::unordered_map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < articles.size(); ++i) {
    position.emplace(articles[i].id, i);
  }
  for (std::size_t i = 0; i < articles.size(); ++i) {
    const auto& a = articles[i];
    if (!a.title.empty()) {
      const auto [it, inserted] =
          first_with_title.emplace(title_key(a.language, a.title), i);
      if (!inserted) sets.unite(it->second, i);
    }
    for (const auto& link : a.cross_links) {
      const auto it = position.find(link.target_id);
      if (it != position.end()) sets.unite(i, it->second);
    }
  }
  // Articles are sorted by id, so the root index names the smallest id.
  std::vector<bool> is_root(articles.size(), false);
  for (const auto& [key, index] : first_with_title) {
    const auto root = sets.find(index);
    by_title_.emplace(key, "e:" + articles[root].id);
  }
  for (std::size_t i = 0; i < articles.size(); ++i) is_root[sets.find(i)] = true;
  cluster_count_ = static_cast<std::size_t>(
      std::count(is_root.begin(), is_root.end(), true));
}

std::string EntityClusters::canonical(std::string_view language,
                                      std::string_view title) const {
  auto key = title_key(language, title);
  const auto it = by_title_.find(key);
  if (it != by_title_.end()) return it->second;
  key.insert(0, "u:");
  return key;
}

std::vector<AttributeGroup> build_attribute_groups(
    std::span<const DualInfobox> duals, const EntityClusters& clusters) {
  std::map<AttributeKey, AttributeGroup> groups;
  auto add_side = [&](const Article& article, Side side) {
    for (const auto& value : article.infobox.pairs()) {
      AttributeKey key{side, value.name};
      auto [it, inserted] = groups.try_emplace(key);
      if (inserted) {
        it->second.key = key;
        it->second.language = article.language;
      }
      accumulate(value, article.language, clusters, &it->second);
    }
  };
  for (const auto& dual : duals) {
    add_side(*dual.left, Side::kLeft);
    add_side(*dual.right, Side::kRight);
  }
  std::vector<AttributeGroup> out;
  out.reserve(groups.size());
  for (auto& [key, group] : groups) out.push_back(std::move(group));
  return out;
}

double vsim(const AttributeGroup& a, const AttributeGroup& b,
            const TranslationDictionary& dictionary) {
  if (a.language == b.language) return cosine(a.values, b.values);
  if (dictionary.from() == a.language && dictionary.to() == b.language) {
    return cosine(translate_vector(a.values, dictionary), b.values);
  }
  if (dictionary.from() == b.language && dictionary.to() == a.language) {
    return cosine(a.values, translate_vector(b.values, dictionary));
  }
  throw ParameterError("dictionary " + dictionary.from() + "->" +
                       dictionary.to() + " does not cover " + a.language +
                       "/" + b.language);
}

double lsim(const AttributeGroup& a, const AttributeGroup& b) {
  return cosine(a.links, b.links);
}

OccurrenceMatrix::OccurrenceMatrix(Eigen::MatrixXd cells, std::vector<Side> sides)
    : cells_(std::move(cells)), sides_(std::move(sides)) {
  if (static_cast<std::size_t>(cells_.rows()) != sides_.size()) {
    throw ParameterError("occurrence matrix: one side per row required");
  }
  for (Eigen::Index i = 0; i < cells_.size(); ++i) {
    const double v = cells_.data()[i];
    if (v != 0.0 && v != 1.0) {
      throw ParameterError("occurrence matrix cells must be 0 or 1");
    }
  }
  co_ = cells_ * cells_.transpose();
}

OccurrenceMatrix OccurrenceMatrix::build(std::span<const DualInfobox> duals,
                                         std::span<const AttributeGroup> groups) {
  Eigen::MatrixXd cells = Eigen::MatrixXd::Zero(
      static_cast<Eigen::Index>(groups.size()),
      static_cast<Eigen::Index>(duals.size()));
  std::vector<Side> sides;
  sides.reserve(groups.size());
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto& group = groups[i];
    sides.push_back(group.side());
    for (std::size_t j = 0; j < duals.size(); ++j) {
      const auto& box = group.side() == Side::kLeft ? duals[j].left_infobox()
                                                    : duals[j].right_infobox();
      if (box.contains(group.name())) {
        cells(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
      }
    }
  }
  return OccurrenceMatrix(std::move(cells), std::move(sides));
}

std::size_t OccurrenceMatrix::occurrences(std::size_t p) const {
  return co_occurrences(p, p);
}

std::size_t OccurrenceMatrix::co_occurrences(std::size_t p, std::size_t q) const {
  return static_cast<std::size_t>(
      co_(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q)) + 0.5);
}

double correlation_x(const OccurrenceMatrix& matrix, std::size_t p,
                     std::size_t q, CorrelationVariant variant) {
  const auto op = static_cast<double>(matrix.occurrences(p));
  const auto oq = static_cast<double>(matrix.occurrences(q));
  const auto opq = static_cast<double>(matrix.co_occurrences(p, q));
  if (op < 1.0 || oq < 1.0) {
    throw ParameterError("correlation_x requires O_p, O_q >= 1");
  }
  switch (variant) {
    case CorrelationVariant::kX1:
      return opq;
    case CorrelationVariant::kX2:
      return (1.0 + opq / op) * (1.0 + opq / oq);
    case CorrelationVariant::kX3:
      return opq * opq / (op + oq);
  }
  return 0.0;
}

double grouping_score(const OccurrenceMatrix& matrix, std::size_t p,
                      std::size_t q) {
  const auto op = matrix.occurrences(p);
  const auto oq = matrix.occurrences(q);
  const auto smaller = std::min(op, oq);
  if (smaller == 0) return 0.0;
  return static_cast<double>(matrix.co_occurrences(p, q)) /
         static_cast<double>(smaller);
}

}  // namespace xlmatch
