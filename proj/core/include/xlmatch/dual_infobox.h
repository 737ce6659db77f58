#pragma once

#include <cstddef>
#include <vector>

#include "xlmatch/corpus.h"
#include "xlmatch/typemap.h"

namespace xlmatch {

// The pair of cross-linked infoboxes describing one entity. Points into the
// Corpus it was built from, which must outlive it.
struct DualInfobox {
  const Article* left = nullptr;
  const Article* right = nullptr;

  const Infobox& left_infobox() const { return left->infobox; }
  const Infobox& right_infobox() const { return right->infobox; }
  const std::string& type_left() const { return left->entity_type; }
  const std::string& type_right() const { return right->entity_type; }
};

struct DualBuildResult {
  std::vector<DualInfobox> duals;  // ordered by (left id, right id)
  std::size_t missing_targets = 0;
  std::size_t unmapped_pairs = 0;
};

// One dual per cross-language link whose endpoints' types are mapped to each
// other. An article takes part in at most one dual; when it has several
// eligible partners the smallest id wins.
DualBuildResult build_dual_infoboxes(const Corpus& corpus,
                                     const TypeMapping& types);

// The duals of one mapped type pair.
std::vector<DualInfobox> duals_for(const std::vector<DualInfobox>& duals,
                                   const TypePair& types);

}  // namespace xlmatch
