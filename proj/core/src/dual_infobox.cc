#include "xlmatch/dual_infobox.h"

#include <set>
#include <string>

#include "xlmatch/errors.h"

namespace xlmatch {

DualBuildResult build_dual_infoboxes(const Corpus& corpus,
                                     const TypeMapping& types) {
  if (types.empty()) throw ParameterError("type mapping is empty");
  DualBuildResult result;
  std::set<std::string> used_right;
  for (const auto& article : corpus.articles()) {
    if (article.language != types.left_language) continue;
    const auto* mapped = types.find_left(article.entity_type);
    for (const auto& link : article.cross_links) {
      if (link.language != types.right_language) continue;
      const auto* target = corpus.find(link.target_id);
      if (target == nullptr) {
        ++result.missing_targets;
        continue;
      }
      if (mapped == nullptr || target->entity_type != mapped->types.right) {
        ++result.unmapped_pairs;
        continue;
      }
      // Links are sorted by target id, so the first free partner is the
      // smallest one.
      if (used_right.insert(target->id).second) {
        result.duals.push_back({&article, target});
        break;
      }
    }
  }
  return result;
}

std::vector<DualInfobox> duals_for(const std::vector<DualInfobox>& duals,
                                   const TypePair& types) {
  std::vector<DualInfobox> out;
  for (const auto& d : duals) {
    if (d.type_left() == types.left && d.type_right() == types.right) {
      out.push_back(d);
    }
  }
  return out;
}

}  // namespace xlmatch
