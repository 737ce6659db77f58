#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "xlmatch/alignment.h"
#include "xlmatch/corpus.h"
#include "xlmatch/dictionary.h"
#include "xlmatch/dual_infobox.h"
#include "xlmatch/evaluation.h"
#include "xlmatch/lsi.h"
#include "xlmatch/signals.h"
#include "xlmatch/similarity.h"
#include "xlmatch/typemap.h"

namespace xlmatch {

struct RunConfig {
  // Empty: the corpus languages in sorted order.
  std::string left_language;
  std::string right_language;
  AlignmentConfig alignment;
  TypeMappingOptions typemap;
  AblationOptions ablation;
  std::uint64_t seed = 0;  // random ranking baseline
};

// Everything derived from one mapped type pair before alignment.
struct TypeContext {
  TypePair types;
  std::vector<DualInfobox> duals;
  std::vector<AttributeGroup> groups;
  OccurrenceMatrix matrix;
  LsiModel model;
  TypeSignals signals;
  AttributeFrequencies frequencies;
};

struct Prepared {
  std::string left_language;
  std::string right_language;
  TypeMapping mapping;
  std::size_t dual_count = 0;
  std::size_t missing_targets = 0;
  TranslationDictionary dictionary;
  EntityClusters clusters;
  std::vector<TypeContext> types;  // mapped pairs with at least two attributes
  std::vector<TypePair> skipped;
};

// Resolves the language pair (ParameterError when the corpus does not have
// exactly the two languages) and builds every type context. An empty
// mapping leaves `types` empty.
Prepared prepare(const Corpus& corpus, const RunConfig& config);

AlignmentResult align(const TypeContext& context, const RunConfig& config);

// Truth pairs whose two attributes occur in the context.
PairSet present_truth(const TypeContext& context, const PairSet& truth);

TypeEvaluation evaluate_type(const TypeContext& context, const PairSet& extracted,
                             const PairSet& truth, std::uint64_t seed);

// Scores every type pair of `truth`. Throws EvaluationError when a truth type
// pair has no context or no extracted set.
EvalReport evaluate(const Prepared& prepared,
                    const std::map<TypePair, PairSet>& extracted,
                    const GroundTruth& truth, std::uint64_t seed);

// Aligns every prepared type pair and scores the result.
EvalReport run_and_evaluate(const Prepared& prepared, const GroundTruth& truth,
                            const RunConfig& config);

}  // namespace xlmatch
